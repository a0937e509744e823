#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/convergence/rate.py                                           #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 03:47:54 pm                                                #
# Modified   : Thursday October 15th 2026 12:57:45 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Rate of convergence of the rescaled velocity to the rescaled noise above the critical line.

Per eps the equation runs on [t0, T/eps] driven by the same recorded noise L that it is
compared with, so sup |V^{(eps)} - L^{(eps)}| = eps^theta sup_{t0 <= t <= T/eps} |V_t - L_t| is
computed path by path.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from levykin.data.dataclass import DataClass
from levykin.exceptions import ExplosionFractionError, InputError, NoEstimateError
from levykin.kernel.config import KineticConfig, time_grid
from levykin.kernel.moments import MAX_EXPLODED, bootstrap_mean
from levykin.kernel.solver import integrate_ske
from levykin.noise.measure import Tempered, Truncated
from levykin.noise.rng import Role, StreamFactory
from levykin.noise.sampler import sample_noise_batch
from levykin.quantitative.moment.exponent import limit_exponent, rate_exponent
from levykin.quantitative.moment.fit import SlopeFit, fit_power_law

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
RATE_COLUMNS = ["eps", "deviation", "ci_lo", "ci_hi", "position_deviation", "n_used"]


# ------------------------------------------------------------------------------------------------ #
@dataclass
class RateReport(DataClass):
    """Deviation estimates per eps with the fitted and the predicted exponent q."""

    eps_list: np.ndarray
    frame: pd.DataFrame
    q_fit: Optional[SlopeFit]
    q_theory: Optional[float]
    theta: float
    log_corrected: bool = False
    above_critical: bool = True

    @property
    def deviations(self) -> np.ndarray:
        return self.frame["deviation"].to_numpy()

    @property
    def q(self) -> float:
        return np.nan if self.q_fit is None else self.q_fit.slope

    def normalized(self) -> np.ndarray:
        """deviation / eps^theta, with an extra |ln eps| on the log-corrected boundary."""
        scale = self.eps_list**self.theta
        if self.log_corrected:
            scale = scale * np.abs(np.log(self.eps_list))
        return self.deviations / scale

    def summary(self) -> pd.DataFrame:
        return pd.DataFrame([{"q_fit": self.q, "q_theory": self.q_theory}])


# ------------------------------------------------------------------------------------------------ #
def check_eps(eps_list: Sequence[float]) -> np.ndarray:
    eps = np.asarray(eps_list, dtype=float)
    if len(eps) < 2 or np.any(np.diff(eps) >= 0):
        msg = f"eps values must be strictly decreasing, got {eps.tolist()}."
        logger.error(msg)
        raise InputError(msg)
    if eps[0] > 1 or eps[-1] <= 0:
        msg = f"eps values must lie in (0, 1], got {eps.tolist()}."
        logger.error(msg)
        raise InputError(msg)
    return eps


def theoretical_rate(cfg: KineticConfig) -> tuple:
    """(q, p(gamma), theta) with q = min(beta - 1 + theta - p, theta).

    q is None when no p(gamma) is known; a zero drift gives q = theta and p None.
    """
    measure = cfg.triplet.measure
    alpha0 = measure.alpha0 if isinstance(measure, (Truncated, Tempered)) else None
    theta = rate_exponent(cfg.regime.value, cfg.alpha, cfg.b_zero)
    if cfg.drift.is_zero:
        # Only the initial term v0 - L_{t0} remains.
        return theta, None, theta
    try:
        p, _ = limit_exponent(
            cfg.alpha, cfg.gamma, cfg.regime.value, cfg.drift.sign_ok, cfg.b_zero, alpha0
        )
    except NoEstimateError:
        return None, None, theta
    return min(cfg.beta - 1.0 + theta - p, theta), p, theta


def _deviations(cfg: KineticConfig, eps: float, horizon: float, theta: float, noise, n_jobs: int):
    solution = integrate_ske(cfg, horizon / eps, noise=noise, n_jobs=n_jobs)
    t = solution.v.t
    L = noise.at(t)
    v_gap = np.max(np.abs(solution.v.values - L), axis=1)
    # Left rectangle rule, as the scheme integrates the position.
    integral = np.concatenate(
        [np.zeros((len(L), 1)), np.cumsum(L[:, :-1] * np.diff(t), axis=1)], axis=1
    )
    x_gap = np.max(np.abs(solution.x.values - cfg.x0 - integral), axis=1)
    return eps**theta * v_gap, eps ** (1.0 + theta) * x_gap, solution.exploded


def sup_deviation_rate(
    cfg: KineticConfig,
    eps_list: Sequence[float],
    streams: StreamFactory,
    horizon: float = 1.0,
    n_paths: int = 1000,
    n_jobs: int = 1,
    max_exploded: float = MAX_EXPLODED,
) -> RateReport:
    """Estimates E sup_{eps t0 <= t <= T} |V^{(eps)}_t - L^{(eps)}_t| for each eps and fits q."""
    eps_list = check_eps(eps_list)
    q_theory, p, theta = theoretical_rate(cfg)
    above = True
    log_corrected = False
    if p is not None:
        boundary = 1.0 + p - theta
        if cfg.beta <= boundary:
            above = False
            logger.warning(
                f"beta = {cfg.beta} is not above 1 + p - theta = {boundary}; "
                "no convergence is claimed."
            )
        log_corrected = bool(np.isclose(cfg.beta, 1.0 + p))
    s = cfg.scheme
    rows = []
    for k, eps in enumerate(eps_list):
        end = horizon / eps
        grid = np.concatenate(
            [[0.0], time_grid(cfg.t0, end, s.step_rule, s.max_step, s.points_per_decade)]
        )
        noise = sample_noise_batch(
            cfg.noise, grid, streams, n_paths, n_jobs=n_jobs, settings=s.jumps
        )
        v_dev, x_dev, exploded = _deviations(cfg, eps, horizon, theta, noise, n_jobs)
        fraction = float(np.mean(exploded))
        if fraction > max_exploded:
            msg = f"{fraction:.2%} of the paths exploded at eps = {eps}."
            logger.error(msg)
            raise ExplosionFractionError(msg, fraction=fraction)
        if exploded.any():
            logger.warning(f"Excluding {exploded.sum()} exploded paths at eps = {eps}.")
        rng = streams.generator(k, Role.BOOTSTRAP)
        estimate, lo, hi = bootstrap_mean(v_dev[~exploded], rng)
        rows.append(
            {
                "eps": eps,
                "deviation": estimate,
                "ci_lo": lo,
                "ci_hi": hi,
                "position_deviation": float(np.mean(x_dev[~exploded])),
                "n_used": int((~exploded).sum()),
            }
        )
        logger.info(f"eps = {eps:.4g}: mean sup deviation {estimate:.4g}.")

    frame = pd.DataFrame(rows, columns=RATE_COLUMNS)
    q_fit = None
    deviation = frame["deviation"].to_numpy()
    if len(eps_list) >= 5 and np.all(deviation > 0):
        q_fit = fit_power_law(eps_list, deviation)
    return RateReport(
        eps_list=eps_list,
        frame=frame,
        q_fit=q_fit,
        q_theory=q_theory,
        theta=theta,
        log_corrected=log_corrected,
        above_critical=above,
    )
