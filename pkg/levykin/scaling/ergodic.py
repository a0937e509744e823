#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/scaling/ergodic.py                                                         #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 7th 2026 01:42:48 pm                                              #
# Modified   : Thursday October 8th 2026 09:27:14 am                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Stationary samples of the autonomous critical-line equation dH = dR - H/alpha ds - F(H) ds."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd
from scipy import stats

from levykin.data.dataclass import DataClass
from levykin.exceptions import ErgodicityError, InputError
from levykin.kernel.config import KineticConfig
from levykin.kernel.drift import BoundedExample, DriftSpec, Homogeneous
from levykin.kernel.scheme import EulerScheme, SchemeResult
from levykin.noise.rng import Role, StreamFactory
from levykin.noise.stable import StableLaw, sample_stable_batch
from levykin.service.parallel import fan_out

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
BURN_IN = 20.0
STEP = 0.01
KS_THRESHOLD = 0.03
DRAWS_PER_CHAIN = 20


# ------------------------------------------------------------------------------------------------ #
def ergodicity_margin(drift: DriftSpec, alpha: float) -> float:
    """limsup over |x| -> infinity of (-F(x) - x/alpha) / x."""
    base = -1.0 / alpha
    if isinstance(drift, BoundedExample) or drift.is_zero:
        return base
    if not isinstance(drift, Homogeneous):
        x = np.array([1e12, -1e12])
        return float(np.max((-drift(x) - x / alpha) / x))
    g = drift.gamma
    if g < 1:
        return base
    # F(x)/x tends to F1 |x|^{g-1} on the right and to -Fm1 |x|^{g-1} on the left.
    sides = (drift.F1, -drift.Fm1)
    if g == 1:
        return max(base - c for c in sides)
    return max(base if c == 0 else -np.inf if c > 0 else np.inf for c in sides)


def pushforward_T(samples: np.ndarray, times: Sequence[float], alpha: float) -> np.ndarray:
    """(u_1, ..., u_d) -> (t_1^{1/alpha} u_1, ..., t_d^{1/alpha} u_d), row by row."""
    times = np.asarray(times, dtype=float)
    if np.any(times <= 0):
        msg = f"Pushforward times must be positive, got {times}."
        logger.error(msg)
        raise InputError(msg)
    samples = np.asarray(samples, dtype=float)
    factor = times ** (1.0 / alpha)
    if samples.ndim == 1:
        if len(factor) != 1:
            msg = f"One-dimensional samples need one time, got {len(factor)}."
            logger.error(msg)
            raise InputError(msg)
        return samples * factor[0]
    return samples * factor[None, :]


# ------------------------------------------------------------------------------------------------ #
@dataclass
class ErgodicSample(DataClass):
    """Draws of (H_{tau + o_1}, ..., H_{tau + o_d}) after the burn-in.

    ``samples`` has shape (n_samples, len(offsets)). ``ks_halves`` compares the earlier with the
    later half of every chain at offset 0.
    """

    samples: np.ndarray
    offsets: np.ndarray
    burn_in: float
    ks_halves: float
    threshold: float

    @property
    def stationary(self) -> bool:
        return self.ks_halves <= self.threshold

    @property
    def marginal(self) -> np.ndarray:
        return self.samples[:, 0]

    def times(self, t0: float) -> np.ndarray:
        """Original times t0 e^{o_i} the offsets stand for."""
        return t0 * np.exp(self.offsets)

    def to_frame(self, t0: float) -> pd.DataFrame:
        return pd.DataFrame(self.samples, columns=[f"t={t:.6g}" for t in self.times(t0)])


def _check_config(cfg: KineticConfig) -> StableLaw:
    if not isinstance(cfg.noise, StableLaw):
        msg = "The autonomous equation is driven by a stable noise."
        logger.error(msg)
        raise InputError(msg)
    if not cfg.is_critical:
        msg = (
            f"beta = {cfg.beta} is off the critical line beta = {cfg.critical_beta}; "
            "the time-changed equation is not autonomous."
        )
        logger.error(msg)
        raise InputError(msg)
    margin = ergodicity_margin(cfg.drift, cfg.alpha)
    if margin >= 0:
        msg = f"Ergodicity margin {margin} is not negative for {cfg.drift}."
        logger.error(msg)
        raise ErgodicityError(msg)
    return cfg.noise


def sample_ergodic_H(
    cfg: KineticConfig,
    streams: StreamFactory,
    n_samples: int = 10_000,
    burn_in: float = BURN_IN,
    thinning: float = 1.0,
    offsets: Sequence[float] = (0.0,),
    draws_per_chain: int = DRAWS_PER_CHAIN,
    step: float = STEP,
    threshold: float = KS_THRESHOLD,
    h0: Optional[float] = None,
    n_jobs: int = 1,
) -> ErgodicSample:
    """Runs many independent chains and keeps ``draws_per_chain`` thinned draws from each.

    Chain i uses the CHAIN stream of index i. Draw j of a chain is taken at
    burn_in + j * thinning (+ each offset) in model time.
    """
    law = _check_config(cfg)
    offsets = np.asarray(offsets, dtype=float)
    if np.any(offsets < 0):
        msg = f"Offsets must be non-negative, got {offsets}."
        logger.error(msg)
        raise InputError(msg)
    n_chains = int(np.ceil(n_samples / draws_per_chain))
    h0 = cfg.v0 / cfg.t0 ** (1.0 / cfg.alpha) if h0 is None else h0

    wanted = burn_in + thinning * np.arange(draws_per_chain)[:, None] + offsets[None, :]
    horizon = float(wanted.max())
    n_steps = max(1, int(np.ceil(horizon / step)))
    grid = np.union1d(np.linspace(0.0, horizon, n_steps + 1), wanted.ravel())
    # Offsets may land on the same grid point as a later draw.
    record, slots = np.unique(np.searchsorted(grid, wanted.ravel()), return_inverse=True)

    alpha, drift = cfg.alpha, cfg.drift

    def rate(s: float, h: np.ndarray) -> np.ndarray:
        return -h / alpha - drift(h)

    implicit = drift.gamma >= 1 and drift.nondecreasing
    scheme = EulerScheme(rate, cfg.scheme, implicit=implicit)

    def chunk(indices: range) -> SchemeResult:
        noise = sample_stable_batch(
            law, grid, streams, len(indices), indices.start, role=Role.CHAIN
        )
        return scheme.run(grid, noise.increments(), h0, record=record)

    parts = fan_out(chunk, 0, n_chains, n_jobs)
    values = np.concatenate([p.v for p in parts])[:, slots]
    exploded = np.concatenate([p.exploded for p in parts])
    if exploded.any():
        logger.warning(f"Dropping {exploded.sum()} absorbed chains of {n_chains}.")
        values = values[~exploded]

    draws = values.reshape(len(values), draws_per_chain, len(offsets))
    samples = draws.reshape(-1, len(offsets))[:n_samples]
    half = draws_per_chain // 2
    ks = 0.0
    if half >= 1:
        ks = float(stats.ks_2samp(draws[:, :half, 0].ravel(), draws[:, half:, 0].ravel()).statistic)
    if ks > threshold:
        logger.warning(
            f"Chain halves differ by KS {ks:.4f} > {threshold}; consider a longer burn-in "
            f"than {burn_in}."
        )
    logger.info(f"Drew {len(samples)} samples from {n_chains} chains, KS between halves {ks:.4f}.")
    return ErgodicSample(
        samples=samples, offsets=offsets, burn_in=burn_in, ks_halves=ks, threshold=threshold
    )
