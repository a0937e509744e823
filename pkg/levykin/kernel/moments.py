#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/kernel/moments.py                                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 06:22:56 pm                                                #
# Modified   : Tuesday October 13th 2026 06:58:14 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Monte Carlo moment trajectories t -> E|V_t|^kappa with bootstrap bands."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import stats

from levykin.data.dataclass import DataClass
from levykin.exceptions import ExplosionFractionError, InfiniteMomentError, InputError
from levykin.kernel.config import KineticConfig, Regime
from levykin.kernel.solver import integrate_ske
from levykin.noise.measure import Tempered, Truncated
from levykin.noise.rng import Role, StreamFactory

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
MIN_PATHS = 100
N_RESAMPLES = 500
CONFIDENCE = 0.95
MAX_EXPLODED = 0.01
N_CHECKPOINTS = 21


# ------------------------------------------------------------------------------------------------ #
def bootstrap_mean(
    x: np.ndarray,
    rng: np.random.Generator,
    n_resamples: int = N_RESAMPLES,
    confidence: float = CONFIDENCE,
) -> Tuple[float, float, float]:
    """Sample mean with a percentile bootstrap interval."""
    x = np.asarray(x, dtype=float)
    estimate = float(np.mean(x))
    if len(x) < 2 or np.ptp(x) == 0:
        return estimate, estimate, estimate
    result = stats.bootstrap(
        (x,),
        np.mean,
        n_resamples=n_resamples,
        confidence_level=confidence,
        method="percentile",
        vectorized=True,
        random_state=rng,
    )
    ci = result.confidence_interval
    return estimate, float(ci.low), float(ci.high)


def moment_bound(cfg: KineticConfig) -> Tuple[float, bool]:
    """Largest finite moment order of the noise and whether it is attained."""
    if cfg.regime is Regime.H2:
        m = cfg.noise.measure
        if isinstance(m, (Truncated, Tempered)):
            return m.alpha0, True
        return np.inf, True
    alpha = cfg.alpha
    if alpha is None or alpha >= 2:
        return np.inf, True
    return alpha, False


def check_kappa(cfg: KineticConfig, kappa: float) -> None:
    bound, inclusive = moment_bound(cfg)
    finite = 0 <= kappa and (kappa <= bound if inclusive else kappa < bound)
    if not finite:
        closing = "]" if inclusive else ")"
        msg = f"Moment order {kappa} is outside [0, {bound}{closing} for this noise."
        logger.error(msg)
        raise InfiniteMomentError(msg)


# ------------------------------------------------------------------------------------------------ #
@dataclass
class MomentSeries(DataClass):
    """Estimates of E|V_t|^kappa at the checkpoints.

    ``frame`` has columns time, estimate, ci_lo, ci_hi, n_used.
    """

    kappa: float
    frame: pd.DataFrame
    n_paths: int
    n_exploded: int

    @property
    def exploded_fraction(self) -> float:
        return self.n_exploded / self.n_paths

    @property
    def times(self) -> np.ndarray:
        return self.frame["time"].to_numpy()

    @property
    def estimates(self) -> np.ndarray:
        return self.frame["estimate"].to_numpy()


def default_checkpoints(t0: float, horizon: float, n: int = N_CHECKPOINTS) -> np.ndarray:
    return np.geomspace(t0, horizon, n)


def moment_trajectory(
    cfg: KineticConfig,
    horizon: float,
    kappa: float,
    n_paths: int,
    streams: StreamFactory,
    checkpoints: Optional[Sequence[float]] = None,
    n_jobs: int = 1,
    n_resamples: int = N_RESAMPLES,
    confidence: float = CONFIDENCE,
    max_exploded: float = MAX_EXPLODED,
) -> MomentSeries:
    """Estimates E|V_t|^kappa over non-exploded paths at each checkpoint."""
    check_kappa(cfg, kappa)
    if n_paths < MIN_PATHS:
        msg = f"Moment estimates need at least {MIN_PATHS} paths, got {n_paths}."
        logger.error(msg)
        raise InputError(msg)
    if checkpoints is None:
        checkpoints = default_checkpoints(cfg.t0, horizon)
    checkpoints = np.asarray(checkpoints, dtype=float)

    solution = integrate_ske(
        cfg,
        horizon,
        streams=streams,
        n_paths=n_paths,
        n_jobs=n_jobs,
        checkpoints=checkpoints,
        record_only_checkpoints=True,
    )
    exploded = solution.exploded
    n_exploded = int(exploded.sum())
    fraction = n_exploded / n_paths
    if fraction > max_exploded:
        msg = f"{fraction:.2%} of the paths exploded, above the allowed {max_exploded:.2%}."
        logger.error(msg)
        raise ExplosionFractionError(msg, fraction=fraction)
    if n_exploded:
        logger.warning(f"Excluding {n_exploded} exploded paths from the moment estimates.")

    values = np.abs(solution.v.at(checkpoints)[~exploded]) ** kappa
    rows = []
    for j, t in enumerate(checkpoints):
        rng = streams.generator(j, Role.BOOTSTRAP)
        estimate, lo, hi = bootstrap_mean(values[:, j], rng, n_resamples, confidence)
        rows.append(
            {"time": t, "estimate": estimate, "ci_lo": lo, "ci_hi": hi, "n_used": len(values)}
        )
    return MomentSeries(
        kappa=kappa, frame=pd.DataFrame(rows), n_paths=n_paths, n_exploded=n_exploded
    )
