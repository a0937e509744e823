#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/convergence/brownian.py                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 4th 2026 12:46:31 pm                                                 #
# Modified   : Wednesday October 7th 2026 12:07:47 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Negligibility of an added Brownian component under the rescaling.

Two equations share the Lévy noise L of each path:

    dV1 = dL - t^{-beta} F(V1) dt,      dV2 = dL + sigma dB - t^{-beta} F(V2) dt,

and the experiment reports E[sup_{eps t0 <= t <= T} (v_eps (V1_{t/eps} - V2_{t/eps}))^4]^{1/4}
with v_eps = eps^theta.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from levykin.data.dataclass import DataClass
from levykin.data.path import PathBundle
from levykin.exceptions import ExplosionFractionError
from levykin.kernel.config import KineticConfig, time_grid
from levykin.kernel.moments import MAX_EXPLODED, bootstrap_mean
from levykin.kernel.solver import integrate_ske
from levykin.noise.rng import Role, StreamFactory
from levykin.noise.sampler import sample_noise_batch
from levykin.noise.stable import StableLaw, sample_stable_batch
from levykin.quantitative.convergence.rate import check_eps
from levykin.quantitative.moment.exponent import rate_exponent

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
BROWNIAN = StableLaw(alpha=2.0)


# ------------------------------------------------------------------------------------------------ #
@dataclass
class BrownianReport(DataClass):
    """Fourth-moment deviation per eps, largest eps first."""

    frame: pd.DataFrame
    sigma: float
    theta: float
    precondition_ok: bool

    @property
    def deviations(self) -> np.ndarray:
        return self.frame["deviation"].to_numpy()

    @property
    def ratio(self) -> float:
        """Deviation at the largest eps over the deviation at the smallest."""
        last = self.deviations[-1]
        return np.inf if last == 0 else float(self.deviations[0] / last)

    @property
    def decreasing(self) -> bool:
        """Positive log-log slope in eps and a smaller deviation at the smallest eps."""
        d = self.deviations
        if np.all(d == 0):
            return True
        trend = np.polyfit(np.log(self.frame["eps"].to_numpy()), np.log(d), 1)[0]
        return bool(trend > 0 and d[0] > d[-1])


def brownian_negligibility(
    cfg: KineticConfig,
    eps_list: Sequence[float],
    streams: StreamFactory,
    n_paths: int = 1000,
    sigma: float = 1.0,
    horizon: float = 1.0,
    theta: Optional[float] = None,
    n_jobs: int = 1,
    max_exploded: float = MAX_EXPLODED,
) -> BrownianReport:
    """Deviation curve between the equations with and without the Brownian term.

    The Brownian motion of path i comes from its BROWNIAN stream, so it is independent of L.
    """
    eps_list = check_eps(eps_list)
    if theta is None:
        theta = rate_exponent(cfg.regime.value, cfg.alpha, cfg.b_zero)
    # v_eps eps^{-1/2} = eps^{theta - 1/2} must vanish.
    precondition_ok = theta > 0.5
    if not precondition_ok:
        logger.warning(
            f"v_eps eps^(-1/2) = eps^{theta - 0.5:.3f} does not vanish; the Brownian term "
            "is not expected to be negligible."
        )
    s = cfg.scheme
    rows = []
    for k, eps in enumerate(eps_list):
        grid = time_grid(cfg.t0, horizon / eps, s.step_rule, s.max_step, s.points_per_decade)
        noise = sample_noise_batch(
            cfg.noise, grid, streams, n_paths, n_jobs=n_jobs, settings=s.jumps
        )
        first = integrate_ske(cfg, horizon / eps, noise=noise, n_jobs=n_jobs)
        if sigma == 0:
            gap = np.zeros(n_paths)
            exploded = first.exploded
        else:
            brownian = sample_stable_batch(
                BROWNIAN, noise.t, streams, n_paths, n_jobs=n_jobs, role=Role.BROWNIAN
            )
            perturbed = PathBundle(
                t=noise.t, values=noise.values + sigma * brownian.values, jumps=noise.jumps
            )
            second = integrate_ske(cfg, horizon / eps, noise=perturbed, n_jobs=n_jobs)
            exploded = first.exploded | second.exploded
            gap = eps**theta * np.max(np.abs(first.v.values - second.v.values), axis=1)
        fraction = float(np.mean(exploded))
        if fraction > max_exploded:
            msg = f"{fraction:.2%} of the paths exploded at eps = {eps}."
            logger.error(msg)
            raise ExplosionFractionError(msg, fraction=fraction)
        fourth = gap[~exploded] ** 4
        mean, lo, hi = bootstrap_mean(fourth, streams.generator(k, Role.BOOTSTRAP))
        rows.append(
            {
                "eps": eps,
                "deviation": mean**0.25,
                "ci_lo": lo**0.25,
                "ci_hi": hi**0.25,
                "n_used": int((~exploded).sum()),
            }
        )
        logger.info(f"eps = {eps:.4g}: fourth-moment deviation {mean ** 0.25:.4g}.")
    return BrownianReport(
        frame=pd.DataFrame(rows), sigma=sigma, theta=theta, precondition_ok=precondition_ok
    )
