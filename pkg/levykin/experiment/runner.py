#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/experiment/runner.py                                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 12:35:15 pm                                                #
# Modified   : Monday October 12th 2026 10:55:09 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Runs one configured experiment and assembles its report.

Every experiment draws its randomness from ``StreamFactory(config.seed)`` keyed by path index and
role, so a report depends only on the resolved configuration.
"""
from __future__ import annotations

import logging
import time
from typing import Callable, Dict

import numpy as np
import pandas as pd
from scipy import stats

from levykin import __version__
from levykin.data.path import SamplePath
from levykin.exceptions import NoEstimateError
from levykin.experiment.config import ExperimentConfig, Kind
from levykin.experiment.report import ExperimentReport, Verdict
from levykin.kernel.config import time_grid
from levykin.kernel.moments import MAX_EXPLODED, default_checkpoints, moment_trajectory
from levykin.kernel.solver import integrate_ske
from levykin.noise.measure import PowerLaw
from levykin.noise.rng import Role, StreamFactory
from levykin.noise.sampler import sample_levy_path, sample_noise_batch
from levykin.noise.stable import StableLaw, hill_tail_index
from levykin.noise.triplet import limit_convergence
from levykin.quantitative.convergence.brownian import brownian_negligibility
from levykin.quantitative.convergence.fdd import fdd_distance
from levykin.quantitative.convergence.metric import (
    MetricConfig,
    skorokhod_upper,
    sup_modulus,
    uniform_metric,
)
from levykin.quantitative.convergence.rate import sup_deviation_rate
from levykin.quantitative.moment.exponent import ExponentQuery, theoretical_exponent
from levykin.quantitative.moment.fit import fit_growth_exponent
from levykin.scaling.ergodic import pushforward_T, sample_ergodic_H
from levykin.scaling.rescale import RescaleSpec, rescale_kinetic
from levykin.service.parallel import fan_out
from levykin.visual.seaborn.charts import EcdfChart, LogLogChart

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
SPREAD_TOLERANCE = 0.05
LOG_CORRECTED_RATIO = 3.0
SHIFTED_JUMP_BOUND = 0.1

Runner = Callable[[ExperimentConfig], ExperimentReport]
RUNNERS: Dict[Kind, Runner] = {}


def register(kind: Kind) -> Callable[[Runner], Runner]:
    def decorator(func: Runner) -> Runner:
        RUNNERS[kind] = func
        return func

    return decorator


# ------------------------------------------------------------------------------------------------ #
def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Runs the experiment named by ``config.kind``; the report is not yet written."""
    logger.info(f"Running {config.kind} with seed {config.seed} on {config.jobs} job(s).")
    start = time.perf_counter()
    report = RUNNERS[config.experiment](config)
    report.runtime = {
        "wall_time": time.perf_counter() - start,
        "jobs": config.jobs,
        "version": __version__,
    }
    failed = [v.check for v in report.verdicts if not v.passed]
    if failed:
        logger.warning(f"Failed checks: {', '.join(failed)}.")
    logger.info(f"Completed {config.kind} in {report.runtime['wall_time']:.2f} seconds.")
    return report


# ------------------------------------------------------------------------------------------------ #
#                                        NOISE CHECK                                               #
# ------------------------------------------------------------------------------------------------ #
@register(Kind.NOISE_CHECK)
def run_noise_check(config: ExperimentConfig) -> ExperimentReport:
    """Tail index and self-similarity of the sampled increments."""
    sec = config.noise_check
    cfg = config.kinetic_config()
    streams = StreamFactory(config.seed)
    report = ExperimentReport(config=config)

    if isinstance(cfg.noise, StableLaw):
        law = cfg.noise
        scaled = law.sample(sec.dt, streams.generator(0, Role.FEED), size=sec.n_paths)
        scaled = scaled / sec.dt ** (1.0 / law.alpha)
        unit = law.sample(1.0, streams.generator(1, Role.FEED), size=sec.n_paths)
        ks = stats.ks_2samp(scaled, unit)
        hill = hill_tail_index(unit, sec.hill_fraction)
        report.verdicts.append(Verdict.below("self_similarity_ks", ks.statistic, sec.ks_tolerance))
        if law.alpha < 2:
            report.verdicts.append(
                Verdict.within("hill_tail_index", hill, law.alpha, sec.hill_tolerance)
            )
        report.tables["noise_check"] = pd.DataFrame(
            [
                {
                    "alpha": law.alpha,
                    "hill": hill,
                    "ks_statistic": ks.statistic,
                    "ks_pvalue": ks.pvalue,
                    "n_samples": sec.n_paths,
                }
            ]
        )
        report.charts["increments"] = lambda: EcdfChart(
            [np.clip(scaled, -10, 10), np.clip(unit, -10, 10)],
            ["rescaled dt increments", "unit increments"],
            title="Self-similarity of the stable increments",
        )
        return report

    triplet = cfg.noise
    grid = np.array([0.0, 1.0])

    def chunk(indices: range) -> np.ndarray:
        return np.array(
            [
                sample_levy_path(
                    triplet,
                    grid,
                    rng=streams.generator(i, Role.FEED),
                    record_jumps=False,
                    settings=cfg.scheme.jumps,
                ).v[-1]
                for i in indices
            ]
        )

    unit = np.concatenate(fan_out(chunk, 0, sec.n_paths, n_jobs=config.jobs))
    row = {"alpha": triplet.alpha, "mean": float(np.mean(unit)), "n_samples": sec.n_paths}
    if isinstance(triplet.measure, PowerLaw) and triplet.measure.alpha < 2:
        hill = hill_tail_index(unit, sec.hill_fraction)
        row["hill"] = hill
        report.verdicts.append(
            Verdict.within("hill_tail_index", hill, triplet.measure.alpha, sec.hill_tolerance)
        )
    report.tables["noise_check"] = pd.DataFrame([row])
    return report


# ------------------------------------------------------------------------------------------------ #
#                                         SIMULATE                                                 #
# ------------------------------------------------------------------------------------------------ #
@register(Kind.SIMULATE)
def run_simulate(config: ExperimentConfig) -> ExperimentReport:
    """Sample paths of (V, X) with the first hitting times of the radius ladder."""
    sec = config.simulate
    cfg = config.kinetic_config()
    streams = StreamFactory(config.seed)
    solution = integrate_ske(
        cfg, sec.horizon, streams=streams, n_paths=sec.n_paths, n_jobs=config.jobs
    )
    report = ExperimentReport(config=config)
    for i in range(min(sec.paths_written, sec.n_paths)):
        v, x = solution.single(i)
        report.tables[f"velocity_{i}"] = v.to_frame()
        report.tables[f"position_{i}"] = x.to_frame()
    report.tables["hits"] = pd.DataFrame(
        [
            {"path": i, "radius": r, "time": t}
            for i in range(solution.n_paths)
            for r, t in solution.tau_r_hits(i)
        ]
    )
    report.verdicts.append(
        Verdict.below("exploded_fraction", solution.exploded_fraction, MAX_EXPLODED)
    )
    return report


# ------------------------------------------------------------------------------------------------ #
#                                          MOMENTS                                                 #
# ------------------------------------------------------------------------------------------------ #
@register(Kind.MOMENTS)
def run_moments(config: ExperimentConfig) -> ExperimentReport:
    """Growth exponent of E|V_t|^kappa against the theoretical bound p."""
    sec = config.moments
    cfg = config.kinetic_config()
    streams = StreamFactory(config.seed)
    series = moment_trajectory(
        cfg,
        sec.horizon,
        sec.kappa,
        sec.n_paths,
        streams,
        checkpoints=default_checkpoints(cfg.t0, sec.horizon, sec.n_checkpoints),
        n_jobs=config.jobs,
        n_resamples=sec.n_resamples,
    )
    fit = fit_growth_exponent(series)
    try:
        exponent = theoretical_exponent(ExponentQuery.from_config(cfg, sec.kappa))
        p, branch = exponent.p, exponent.branch
    except NoEstimateError:
        logger.warning("No theoretical exponent applies; the slope is reported without a bound.")
        p, branch = None, "none"

    report = ExperimentReport(config=config)
    report.tables["moments"] = series.frame
    report.tables["fit"] = pd.DataFrame(
        [
            {
                "slope": fit.slope,
                "intercept": fit.intercept,
                "stderr": fit.stderr,
                "durbin_watson": fit.durbin_watson,
                "structured": fit.structured,
                "p": np.nan if p is None else p,
                "branch": branch,
                "n_exploded": series.n_exploded,
            }
        ]
    )
    upper = np.inf if p is None else p + sec.slope_tolerance
    report.verdicts.append(
        Verdict(
            check="growth_slope", value=fit.slope, lower=sec.min_slope, upper=upper, reference=p
        )
    )
    report.charts["moments"] = lambda: LogLogChart(
        series.frame,
        "time",
        "estimate",
        title=f"E|V_t|^{sec.kappa:g}",
        reference_slope=p,
    )
    return report


# ------------------------------------------------------------------------------------------------ #
#                                      RESCALE CONVERGE                                            #
# ------------------------------------------------------------------------------------------------ #
@register(Kind.RESCALE_CONVERGE)
def run_rescale_converge(config: ExperimentConfig) -> ExperimentReport:
    """Rate q of E sup |V^(eps) - L^(eps)| against q = min(beta - 1 + theta - p, theta)."""
    sec = config.rescale_converge
    cfg = config.kinetic_config()
    streams = StreamFactory(config.seed)
    rate = sup_deviation_rate(
        cfg, sec.eps, streams, horizon=sec.horizon, n_paths=sec.n_paths, n_jobs=config.jobs
    )
    normalized = rate.normalized()
    report = ExperimentReport(config=config)
    report.tables["deviation"] = rate.frame.assign(normalized=normalized)
    report.tables["rate"] = rate.summary().assign(
        theta=rate.theta, log_corrected=rate.log_corrected, above_critical=rate.above_critical
    )
    if rate.q_fit is not None and rate.q_theory is not None and not rate.log_corrected:
        report.verdicts.append(Verdict.within("rate_q", rate.q, rate.q_theory, sec.q_tolerance))
    if cfg.drift.is_zero:
        spread = float(normalized.max() / normalized.min() - 1.0)
        report.verdicts.append(Verdict.below("normalized_spread", spread, SPREAD_TOLERANCE))
    elif rate.log_corrected:
        ratio = float(normalized.max() / normalized.min())
        report.verdicts.append(Verdict.below("log_corrected_ratio", ratio, LOG_CORRECTED_RATIO))
    report.charts["deviation"] = lambda: LogLogChart(
        rate.frame,
        "eps",
        "deviation",
        title="E sup |V - L| after rescaling",
        reference_slope=rate.q_theory,
    )
    return report


# ------------------------------------------------------------------------------------------------ #
#                                      CRITICAL ERGODIC                                            #
# ------------------------------------------------------------------------------------------------ #
@register(Kind.CRITICAL_ERGODIC)
def run_critical_ergodic(config: ExperimentConfig) -> ExperimentReport:
    """eps^{1/alpha} V_{t1/eps} against t1^{1/alpha} times the stationary law of H."""
    sec = config.critical_ergodic
    cfg = config.kinetic_config()
    streams = StreamFactory(config.seed)
    if not cfg.is_critical:
        logger.warning(f"beta = {cfg.beta} is off the critical line {cfg.critical_beta}.")
    t1 = sec.t1_factor * cfg.t0
    end = t1 / sec.eps
    solution = integrate_ske(
        cfg,
        end,
        streams=streams,
        n_paths=sec.n_paths,
        n_jobs=config.jobs,
        checkpoints=[end],
        record_only_checkpoints=True,
    )
    kept = ~solution.exploded
    if not kept.all():
        logger.warning(f"Excluding {int((~kept).sum())} exploded paths.")
    rescaled = sec.eps ** (1.0 / cfg.alpha) * solution.v.at(np.array([end]))[kept, 0]

    chain = sample_ergodic_H(
        cfg,
        streams,
        n_samples=sec.n_samples,
        burn_in=sec.burn_in,
        thinning=sec.thinning,
        step=sec.step,
        threshold=sec.halves_tolerance,
        n_jobs=config.jobs,
    )
    limit = pushforward_T(chain.marginal, [t1], cfg.alpha)
    label = f"t={t1:.6g}"
    distance = fdd_distance({label: rescaled}, {label: limit})

    # Tightness diagnostic on one full path.
    single = integrate_ske(cfg, end, streams=streams, n_paths=1)
    v_path, _ = rescale_kinetic(single, RescaleSpec(sec.eps, 1.0 / cfg.alpha, cfg.v0), t1)
    modulus = sup_modulus(v_path, sec.modulus_delta, window=(sec.eps * cfg.t0, t1))

    report = ExperimentReport(config=config)
    report.tables["fdd"] = distance.ks.assign(energy=distance.energy)
    report.tables["ergodic"] = pd.DataFrame(
        [
            {
                "t1": t1,
                "n_used": int(kept.sum()),
                "n_chain_samples": len(limit),
                "ks_halves": chain.ks_halves,
                "stationary": chain.stationary,
                "sup_modulus": modulus,
            }
        ]
    )
    report.verdicts.append(Verdict.below("critical_ks", distance.max_ks, sec.ks_tolerance))
    report.verdicts.append(Verdict.below("chain_halves_ks", chain.ks_halves, sec.halves_tolerance))
    report.charts["marginals"] = lambda: EcdfChart(
        [rescaled, limit],
        ["rescaled velocity", "pushed-forward ergodic samples"],
        title=f"Marginals at t1 = {t1:g}",
    )
    return report


# ------------------------------------------------------------------------------------------------ #
#                                       TRIPLET LIMIT                                              #
# ------------------------------------------------------------------------------------------------ #
@register(Kind.TRIPLET_LIMIT)
def run_triplet_limit(config: ExperimentConfig) -> ExperimentReport:
    """Functionals of the rescaled triplet against those of its limit."""
    sec = config.triplet_limit
    cfg = config.kinetic_config()
    frame = limit_convergence(cfg.triplet, sec.eps)
    smallest = frame["eps"].min()
    worst = frame.groupby("eps", as_index=False)["error"].max().sort_values("eps", ascending=False)

    report = ExperimentReport(config=config)
    report.tables["triplet_limit"] = frame
    error = float(frame.loc[frame["eps"] == smallest, "error"].max())
    report.verdicts.append(Verdict.below("triplet_error", error, sec.tolerance))
    if (worst["error"] > 0).all():
        report.charts["triplet_error"] = lambda: LogLogChart(
            worst, "eps", "error", title="Largest functional error"
        )
    return report


# ------------------------------------------------------------------------------------------------ #
#                                          METRIC                                                  #
# ------------------------------------------------------------------------------------------------ #
def _step(t: np.ndarray, at: float) -> SamplePath:
    return SamplePath(t=t, v=(t >= at).astype(float))


@register(Kind.METRIC)
def run_metric(config: ExperimentConfig) -> ExperimentReport:
    """Uniform and Skorokhod distances between independent noise paths and a shifted jump."""
    sec = config.metric
    cfg = config.kinetic_config()
    s = cfg.scheme
    streams = StreamFactory(config.seed)
    metric = MetricConfig(n_terms=sec.n_terms, lambda_search=sec.lambda_search)
    n = float(sec.n_terms)

    grid = time_grid(1.0 / n, n + 1.0, s.step_rule, s.max_step, s.points_per_decade)
    paths = sample_noise_batch(
        cfg.noise, grid, streams, 2 * sec.n_pairs, n_jobs=config.jobs, settings=s.jumps
    )
    rows = []
    for i in range(sec.n_pairs):
        f, g = paths.path(i), paths.path(sec.n_pairs + i)
        rows.append(
            {
                "pair": i,
                "uniform": uniform_metric(f, g, metric),
                "skorokhod": skorokhod_upper(f, g, metric),
            }
        )
    pairs = pd.DataFrame(rows)
    first = paths.path(0)

    t = np.union1d(np.geomspace(1.0 / n, n + 1.0, 400), [1.0, 1.01])
    f, g = _step(t, 1.0), _step(t, 1.01)
    shifted = {"uniform": uniform_metric(f, g, metric), "skorokhod": skorokhod_upper(f, g, metric)}

    report = ExperimentReport(config=config)
    report.tables["pairs"] = pairs
    report.tables["shifted_jump"] = pd.DataFrame([shifted])
    report.verdicts.append(Verdict.below("self_uniform", uniform_metric(first, first, metric), 0.0))
    excess = float((pairs["skorokhod"] - pairs["uniform"]).max())
    report.verdicts.append(
        Verdict.below("skorokhod_minus_uniform", excess, metric.truncation_bound)
    )
    report.verdicts.append(
        Verdict.below("shifted_jump_skorokhod", shifted["skorokhod"], SHIFTED_JUMP_BOUND)
    )
    report.verdicts.append(
        Verdict.above("shifted_jump_uniform", shifted["uniform"], SHIFTED_JUMP_BOUND)
    )
    return report


# ------------------------------------------------------------------------------------------------ #
#                                  BROWNIAN NEGLIGIBILITY                                          #
# ------------------------------------------------------------------------------------------------ #
@register(Kind.BROWNIAN_NEGLIGIBILITY)
def run_brownian_negligibility(config: ExperimentConfig) -> ExperimentReport:
    """Decay in eps of the rescaled effect of an added Brownian motion."""
    sec = config.brownian_negligibility
    cfg = config.kinetic_config()
    streams = StreamFactory(config.seed)
    result = brownian_negligibility(
        cfg,
        sec.eps,
        streams,
        n_paths=sec.n_paths,
        sigma=sec.sigma,
        horizon=sec.horizon,
        theta=sec.theta,
        n_jobs=config.jobs,
    )
    report = ExperimentReport(config=config)
    report.tables["brownian"] = result.frame
    report.tables["summary"] = pd.DataFrame(
        [
            {
                "theta": result.theta,
                "precondition_ok": result.precondition_ok,
                "ratio": result.ratio,
                "decreasing": result.decreasing,
            }
        ]
    )
    if sec.sigma == 0:
        report.verdicts.append(
            Verdict.below("zero_sigma_deviation", float(result.deviations.max()), 0.0)
        )
        return report
    report.verdicts.append(Verdict.holds("deviation_decreasing", result.decreasing))
    report.verdicts.append(Verdict.above("deviation_ratio", result.ratio, sec.min_ratio))
    report.charts["brownian"] = lambda: LogLogChart(
        result.frame, "eps", "deviation", title="Rescaled effect of the Brownian component"
    )
    return report
