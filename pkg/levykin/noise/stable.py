#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/noise/stable.py                                                            #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 1st 2026 01:31:01 pm                                               #
# Modified   : Monday October 5th 2026 08:14:17 am                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Strictly alpha-stable laws: sampling, paths and the Hill tail diagnostic."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.special import gamma as gamma_fn

from levykin.data.dataclass import DataClass
from levykin.data.path import PathBundle, SamplePath, check_grid
from levykin.exceptions import InputError, UnsupportedLawError
from levykin.noise.measure import PowerLaw, ZeroMeasure
from levykin.noise.rng import Role, StreamFactory
from levykin.noise.triplet import LevyTriplet
from levykin.service.parallel import fan_out, stack_rows

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
#                                         STABLE LAW                                               #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class StableLaw(DataClass):
    """Strictly alpha-stable law with Lévy measure |z|^{-1-alpha}(a_plus 1{z>0} + a_minus 1{z<0}).

    alpha = 2 is standard Brownian motion (unit variance per unit time).
    """

    alpha: float = 1.5
    a_plus: float = 1.0
    a_minus: float = 1.0

    def __post_init__(self) -> None:
        if not 0 < self.alpha <= 2:
            msg = f"Stability index must lie in (0, 2], got {self.alpha}."
            logger.error(msg)
            raise InputError(msg)
        if self.a_plus < 0 or self.a_minus < 0:
            msg = f"Tail weights must be non-negative, got ({self.a_plus}, {self.a_minus})."
            logger.error(msg)
            raise InputError(msg)
        if self.alpha < 2:
            if self.a_plus + self.a_minus <= 0:
                msg = "At least one tail weight must be positive when alpha < 2."
                logger.error(msg)
                raise InputError(msg)
            if not np.isfinite(self.levy_integral):
                msg = f"Lévy measure of {self} does not integrate 1 ^ z^2."
                logger.error(msg)
                raise InputError(msg)

    @property
    def levy_integral(self) -> float:
        """Integral of min(1, z^2) against the Lévy measure."""
        if self.alpha == 2:
            return 0.0
        return (self.a_plus + self.a_minus) * (1.0 / (2.0 - self.alpha) + 1.0 / self.alpha)

    @property
    def is_symmetric(self) -> bool:
        return self.alpha == 2 or self.a_plus == self.a_minus

    @property
    def skewness(self) -> float:
        if self.alpha == 2:
            return 0.0
        return (self.a_plus - self.a_minus) / (self.a_plus + self.a_minus)

    @property
    def scale(self) -> float:
        """Scale sigma of the unit-time increment in the S1 parametrisation.

        For alpha = 2 this is the standard deviation of the unit-time increment, which is 1.
        """
        a = self.alpha
        if a == 2:
            return 1.0
        total = self.a_plus + self.a_minus
        if a == 1:
            return total * np.pi / 2.0
        return (total * gamma_fn(2.0 - a) * np.cos(np.pi * a / 2.0) / (a * (1.0 - a))) ** (1.0 / a)

    @property
    def center(self) -> float:
        """Center of the law with respect to the truncation h."""
        if self.alpha in (1, 2):
            return 0.0
        return (self.a_plus - self.a_minus) / (self.alpha * (1.0 - self.alpha))

    def measure(self) -> PowerLaw:
        return PowerLaw(alpha_index=self.alpha, c_plus=self.a_plus, c_minus=self.a_minus)

    def to_triplet(self) -> LevyTriplet:
        if self.alpha == 2:
            return LevyTriplet(A=1.0, b=0.0, measure=ZeroMeasure())
        return LevyTriplet(A=0.0, b=self.center, measure=self.measure())

    # -------------------------------------------------------------------------------------------- #
    def standard(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Unit-time increments by Chambers-Mallows-Stuck.

        Each draw consumes one row of a (size, 2) block of uniforms, so a longer request extends
        a shorter one from the same generator state.
        """
        self._check_supported()
        u = rng.random((size, 2))
        if self.alpha == 2:
            # Box-Muller on the same two-uniform rows.
            return np.sqrt(-2.0 * np.log1p(-u[:, 0])) * np.cos(2.0 * np.pi * u[:, 1])
        angle = np.pi * (u[:, 0] - 0.5)
        w = -np.log1p(-u[:, 1])
        a = self.alpha
        if a == 1:
            return self.scale * np.tan(angle)
        zeta = self.skewness * np.tan(np.pi * a / 2.0)
        shift = np.arctan(zeta) / a
        factor = (1.0 + zeta**2) ** (1.0 / (2.0 * a))
        x = (
            factor
            * np.sin(a * (angle + shift))
            / np.cos(angle) ** (1.0 / a)
            * (np.cos(angle - a * (angle + shift)) / w) ** ((1.0 - a) / a)
        )
        return self.scale * x

    def sample(
        self, dt: Union[float, np.ndarray], rng: np.random.Generator, size: Optional[int] = None
    ) -> np.ndarray:
        """Increments over durations dt (scalar with ``size`` draws, or one per entry of dt)."""
        dt = np.asarray(dt, dtype=float)
        if np.any(dt <= 0):
            msg = "Increment durations must be positive."
            logger.error(msg)
            raise InputError(msg)
        n = int(size) if dt.ndim == 0 else len(dt)
        return dt ** (1.0 / self.alpha) * self.standard(rng, n)

    def _check_supported(self) -> None:
        if self.alpha == 1 and self.a_plus != self.a_minus:
            msg = "Asymmetric stable laws with alpha = 1 are not supported by the sampler."
            logger.error(msg)
            raise UnsupportedLawError(msg)


# ------------------------------------------------------------------------------------------------ #
#                                         OPERATIONS                                               #
# ------------------------------------------------------------------------------------------------ #
def sample_stable_increment(law: StableLaw, dt: float, rng: np.random.Generator) -> float:
    """One increment of the stable process over a duration dt."""
    if dt <= 0:
        msg = f"Increment duration must be positive, got {dt}."
        logger.error(msg)
        raise InputError(msg)
    return float(law.sample(dt, rng, size=1)[0])


def sample_stable_path(
    law: StableLaw, grid: np.ndarray, rng: np.random.Generator, start: float = 0.0
) -> SamplePath:
    """Stable path on the grid, equal to ``start`` at grid[0]."""
    grid = np.asarray(grid, dtype=float)
    check_grid(grid)
    increments = law.sample(np.diff(grid), rng)
    values = start + np.concatenate([[0.0], np.cumsum(increments)])
    return SamplePath(t=grid, v=values)


def sample_stable_batch(
    law: StableLaw,
    grid: np.ndarray,
    streams: StreamFactory,
    n_paths: int,
    first_index: int = 0,
    n_jobs: int = 1,
    role: Role = Role.NOISE,
) -> PathBundle:
    """Paths first_index .. first_index + n_paths - 1, each from its own stream."""
    grid = np.asarray(grid, dtype=float)
    check_grid(grid)
    dt = np.diff(grid)

    def chunk(indices: range) -> np.ndarray:
        rows = np.empty((len(indices), len(grid)))
        rows[:, 0] = 0.0
        for row, i in enumerate(indices):
            rows[row, 1:] = np.cumsum(law.sample(dt, streams.generator(i, role)))
        return rows

    values = stack_rows(fan_out(chunk, first_index, n_paths, n_jobs=n_jobs))
    return PathBundle(t=grid, values=values)


def hill_tail_index(samples: np.ndarray, fraction: float = 0.01) -> float:
    """Hill estimate of the tail index from the largest ``fraction`` of |samples|."""
    x = np.sort(np.abs(np.asarray(samples, dtype=float)))[::-1]
    k = int(fraction * len(x))
    if k < 2 or k >= len(x):
        msg = f"Hill estimator needs 2 <= k < n, got k={k} for n={len(x)}."
        logger.error(msg)
        raise InputError(msg)
    return float(1.0 / np.mean(np.log(x[:k] / x[k])))
