#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/kernel/scheme.py                                                           #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 8th 2026 12:56:55 pm                                               #
# Modified   : Saturday October 10th 2026 06:47:08 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Jump-adapted Euler stepping shared by every equation the package integrates.

The engine advances dV = dN + rate(t, V) dt on a grid: the drift is integrated over each grid
interval with substeps of at most ``max_step``, then the noise increment dN is added at the
right end point. Positions follow the left-point rule X_{k+1} = X_k + V_k (t_{k+1} - t_k).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from levykin.data.dataclass import DataClass
from levykin.exceptions import StepUnderflowError
from levykin.kernel.config import SchemeSettings

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
BISECTION_STEPS = 64
Rate = Callable[[float, np.ndarray], np.ndarray]


# ------------------------------------------------------------------------------------------------ #
@dataclass
class SchemeResult(DataClass):
    """Recorded states. Arrays are (n_paths, n_records) except the per-path vectors."""

    t: np.ndarray
    v: np.ndarray
    x: np.ndarray
    hits: np.ndarray
    exploded: np.ndarray
    explosion_time: np.ndarray


# ------------------------------------------------------------------------------------------------ #
class EulerScheme:
    """Euler integrator with a semi-implicit branch and absorption at the explosion radius.

    Args:
        rate (Rate): Drift rate r(t, v) of dV, evaluated elementwise.
        settings (SchemeSettings): Step, radius and tolerance settings.
        implicit (bool): Whether r(t, .) is nonincreasing with r(t, 0) = 0, which makes the
            semi-implicit substep W = V + h r(t, W) well defined. It is then used for
            |V| >= implicit_radius and whenever the explicit substep moves too far.
    """

    def __init__(self, rate: Rate, settings: SchemeSettings, implicit: bool = False) -> None:
        self._rate = rate
        self._settings = settings
        self._implicit = implicit
        self._radius = settings.explosion_radius
        self._logger = logging.getLogger(f"{self.__class__.__name__}")

    # -------------------------------------------------------------------------------------------- #
    def run(
        self,
        grid: np.ndarray,
        increments: np.ndarray,
        v0: float,
        x0: float = 0.0,
        record: Optional[Sequence[int]] = None,
    ) -> SchemeResult:
        """Integrates from grid[0] with V = v0, X = x0 for every row of ``increments``."""
        n = increments.shape[0]
        record = np.arange(len(grid)) if record is None else np.asarray(record, dtype=int)
        slot = np.full(len(grid), -1)
        slot[record] = np.arange(len(record))
        ladder = np.asarray(self._settings.ladder)

        v = np.full(n, float(v0))
        x = np.full(n, float(x0))
        hits = np.full((n, len(ladder)), np.nan)
        exploded = np.zeros(n, dtype=bool)
        explosion_time = np.full(n, np.nan)
        v_rec = np.empty((n, len(record)))
        x_rec = np.empty((n, len(record)))

        self._mark_hits(v, grid[0], ladder, hits)
        if slot[0] >= 0:
            v_rec[:, slot[0]] = v
            x_rec[:, slot[0]] = x

        for k in range(len(grid) - 1):
            a, b = grid[k], grid[k + 1]
            live = ~exploded
            x = x + v * (b - a)
            if live.any():
                v[live] = self._flow(v[live], a, b) + increments[live, k]
                blown = live & (np.abs(v) >= self._radius)
                if blown.any():
                    exploded |= blown
                    explosion_time[blown] = b
                    v[blown] = np.copysign(np.inf, v[blown])
                    x[blown] = np.copysign(np.inf, v[blown])
                self._mark_hits(v, b, ladder, hits)
            if slot[k + 1] >= 0:
                v_rec[:, slot[k + 1]] = v
                x_rec[:, slot[k + 1]] = x

        if exploded.any():
            self._logger.debug(f"{exploded.sum()} of {n} paths absorbed at radius {self._radius}.")
        return SchemeResult(
            t=grid[record],
            v=v_rec,
            x=x_rec,
            hits=hits,
            exploded=exploded,
            explosion_time=explosion_time,
        )

    # -------------------------------------------------------------------------------------------- #
    def _flow(self, v: np.ndarray, a: float, b: float) -> np.ndarray:
        """Drift flow over [a, b] with equal substeps no longer than max_step."""
        n_sub = max(1, int(np.ceil((b - a) / self._settings.max_step - 1e-12)))
        h = (b - a) / n_sub
        for j in range(n_sub):
            v = self._substep(v, a + j * h, h)
        return v

    def _substep(self, v: np.ndarray, s: float, h: float) -> np.ndarray:
        frozen = np.abs(v) >= self._radius
        increment = h * self._rate(s, v)
        increment[frozen] = 0.0
        limit = self._settings.growth_limit * (1.0 + np.abs(v))
        too_far = ~frozen & ~(np.abs(increment) <= limit)
        if self._implicit:
            stiff = ~frozen & (too_far | (np.abs(v) >= self._settings.implicit_radius))
            out = v + increment
            if stiff.any():
                out[stiff] = self._implicit_step(v[stiff], s, h)
            return out
        out = v + increment
        if too_far.any():
            if h / 2 < self._settings.min_step:
                msg = (
                    f"Drift substep fell below {self._settings.min_step} at t = {s}; "
                    f"largest |V| = {np.max(np.abs(v[too_far]))}."
                )
                self._logger.error(msg)
                raise StepUnderflowError(msg, time=s, state=v.copy())
            half = self._substep(v[too_far], s, h / 2)
            out[too_far] = self._substep(half, s + h / 2, h / 2)
        return out

    def _implicit_step(self, v: np.ndarray, s: float, h: float) -> np.ndarray:
        """Solves W - h r(s, W) = v by bisection on the bracket between 0 and v."""
        lo = np.minimum(v, 0.0)
        hi = np.maximum(v, 0.0)
        for _ in range(BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            excess = mid - h * self._rate(s, mid) - v
            above = excess > 0
            hi = np.where(above, mid, hi)
            lo = np.where(above, lo, mid)
        return 0.5 * (lo + hi)

    @staticmethod
    def _mark_hits(v: np.ndarray, t: float, ladder: np.ndarray, hits: np.ndarray) -> None:
        reached = (np.abs(v)[:, None] >= ladder[None, :]) & np.isnan(hits)
        hits[reached] = t
