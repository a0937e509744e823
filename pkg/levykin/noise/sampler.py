#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/noise/sampler.py                                                           #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 08:35:23 am                                                #
# Modified   : Monday October 12th 2026 09:27:58 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Lévy paths from a generating triplet by truncation and compensation of the small jumps.

L_t = (b - int_{|z|>=delta} h dnu) t + sqrt(A) B_t + sum of the jumps with |z| >= delta,
optionally with a Brownian substitute of variance int_{|z|<delta} z^2 dnu for the small jumps.
Jump times are merged into the output grid so every recorded jump sits on a grid point.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np

from levykin.data.dataclass import DataClass
from levykin.data.path import PathBundle, SamplePath, check_grid
from levykin.exceptions import ResourceBudgetError
from levykin.noise.measure import truncation
from levykin.noise.rng import Role, StreamFactory
from levykin.noise.stable import StableLaw, sample_stable_batch
from levykin.noise.triplet import LevyTriplet
from levykin.service.parallel import fan_out, stack_rows

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
DEFAULT_CUTOFF = 1e-3
DEFAULT_JUMP_BUDGET = 1e8


# ------------------------------------------------------------------------------------------------ #
@dataclass
class JumpSettings(DataClass):
    """Small-jump treatment. gaussian_floor None disables the Brownian substitute."""

    cutoff: float = DEFAULT_CUTOFF
    budget: float = DEFAULT_JUMP_BUDGET
    gaussian_floor: Optional[float] = None


@dataclass
class Decomposition(DataClass):
    """Continuous part and jump rate of the truncated process."""

    rate: float
    drift: float
    variance: float
    small_jump_variance: float


def decompose(triplet: LevyTriplet, settings: JumpSettings) -> Decomposition:
    m = triplet.measure
    delta = settings.cutoff
    rate = m.mass(delta)
    compensator = m.integrate(truncation, lower=delta)
    small = m.small_jump_variance(delta)
    variance = triplet.A
    if settings.gaussian_floor is not None and small > settings.gaussian_floor:
        logger.debug(f"Brownian substitute for jumps below {delta}: variance {small}.")
        variance += small
    return Decomposition(
        rate=rate, drift=triplet.b - compensator, variance=variance, small_jump_variance=small
    )


def _check_budget(rate: float, span: float, n_paths: int, settings: JumpSettings) -> None:
    expected = rate * span * n_paths
    if expected > settings.budget:
        msg = (
            f"Cutoff {settings.cutoff} implies {expected:.3g} expected jumps, above the budget "
            f"of {settings.budget:.3g}. Raise the cutoff or the budget."
        )
        logger.error(msg)
        raise ResourceBudgetError(msg)


def _jump_record(
    triplet: LevyTriplet,
    rate: float,
    settings: JumpSettings,
    t_start: float,
    t_end: float,
    rng: np.random.Generator,
) -> np.ndarray:
    n = int(rng.poisson(rate * (t_end - t_start))) if rate > 0 else 0
    times = np.sort(t_start + (t_end - t_start) * (1.0 - rng.random(n)))
    sizes = triplet.measure.sample_sizes(settings.cutoff, n, rng)
    return np.column_stack([times, sizes]) if n else np.zeros((0, 2))


def _values(
    grid: np.ndarray, parts: Decomposition, jumps: np.ndarray, rng: Optional[np.random.Generator]
) -> np.ndarray:
    dt = np.diff(grid)
    if parts.variance > 0:
        steps = parts.drift * dt + np.sqrt(parts.variance * dt) * rng.standard_normal(len(dt))
        values = np.concatenate([[0.0], np.cumsum(steps)])
    else:
        values = parts.drift * (grid - grid[0])
    if len(jumps):
        placed = np.zeros(len(grid))
        np.add.at(placed, np.searchsorted(grid, jumps[:, 0]), jumps[:, 1])
        values = values + np.cumsum(placed)
    return values


def _batch_row(
    t: np.ndarray,
    grid: np.ndarray,
    parts: Decomposition,
    jumps: np.ndarray,
    rng: np.random.Generator,
) -> np.ndarray:
    """One path on the shared grid t; the Gaussian part lives on grid and its own jump times."""
    values = parts.drift * (t - t[0])
    if parts.variance > 0:
        own = np.union1d(grid, jumps[:, 0])
        dt = np.diff(own)
        gaussian = np.concatenate(
            [[0.0], np.cumsum(np.sqrt(parts.variance * dt) * rng.standard_normal(len(dt)))]
        )
        # Held constant between the path's own grid points.
        values = values + gaussian[np.searchsorted(own, t, side="right") - 1]
    if len(jumps):
        placed = np.zeros(len(t))
        np.add.at(placed, np.searchsorted(t, jumps[:, 0]), jumps[:, 1])
        values = values + np.cumsum(placed)
    return values


    return values


# ------------------------------------------------------------------------------------------------ #
#                                         OPERATIONS                                               #
# ------------------------------------------------------------------------------------------------ #
def sample_levy_path(
    triplet: LevyTriplet,
    grid: np.ndarray,
    jump_cutoff: float = DEFAULT_CUTOFF,
    rng: Optional[np.random.Generator] = None,
    record_jumps: bool = True,
    settings: Optional[JumpSettings] = None,
) -> SamplePath:
    """One path on the grid refined by its own jump times, starting at 0."""
    grid = np.asarray(grid, dtype=float)
    check_grid(grid)
    rng = rng if rng is not None else np.random.default_rng()
    settings = settings or JumpSettings(cutoff=jump_cutoff)
    parts = decompose(triplet, settings)
    _check_budget(parts.rate, grid[-1] - grid[0], 1, settings)
    jumps = _jump_record(triplet, parts.rate, settings, grid[0], grid[-1], rng)
    t = np.union1d(grid, jumps[:, 0])
    values = _values(t, parts, jumps, rng)
    return SamplePath(t=t, v=values, jumps=jumps if record_jumps else None)


def sample_levy_batch(
    triplet: LevyTriplet,
    grid: np.ndarray,
    streams: StreamFactory,
    n_paths: int,
    first_index: int = 0,
    n_jobs: int = 1,
    settings: Optional[JumpSettings] = None,
) -> PathBundle:
    """Paths on the union of the grid and every path's jump times.

    Jump records come from the JUMPS stream of each path and the Gaussian part from its BROWNIAN
    stream, drawn on the grid refined by that path's own jumps only. A path index therefore has
    the same values at its own grid points whatever the batch around it.
    """
    grid = np.asarray(grid, dtype=float)
    check_grid(grid)
    settings = settings or JumpSettings()
    parts = decompose(triplet, settings)
    _check_budget(parts.rate, grid[-1] - grid[0], n_paths, settings)

    def records(indices: range) -> List[np.ndarray]:
        return [
            _jump_record(
                triplet, parts.rate, settings, grid[0], grid[-1], streams.generator(i, Role.JUMPS)
            )
            for i in indices
        ]

    jumps = [r for chunk in fan_out(records, first_index, n_paths, n_jobs) for r in chunk]
    t = np.union1d(grid, np.concatenate([j[:, 0] for j in jumps])) if jumps else grid

    def values(indices: range) -> np.ndarray:
        return np.vstack(
            [
                _batch_row(
                    t, grid, parts, jumps[i - first_index], streams.generator(i, Role.BROWNIAN)
                )
                for i in indices
            ]
        )

    rows = stack_rows(fan_out(values, first_index, n_paths, n_jobs))
    return PathBundle(t=t, values=rows, jumps=jumps)


def sample_noise_batch(
    noise: Union[StableLaw, LevyTriplet],
    grid: np.ndarray,
    streams: StreamFactory,
    n_paths: int,
    first_index: int = 0,
    n_jobs: int = 1,
    settings: Optional[JumpSettings] = None,
) -> PathBundle:
    """Noise paths for either kind of noise model."""
    if isinstance(noise, StableLaw):
        return sample_stable_batch(noise, grid, streams, n_paths, first_index, n_jobs)
    return sample_levy_batch(noise, grid, streams, n_paths, first_index, n_jobs, settings)
