#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/kernel/solver.py                                                           #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 5th 2026 04:09:12 pm                                                 #
# Modified   : Thursday October 8th 2026 06:38:35 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Integration of the kinetic equation dV = dL - t^{-beta} F(V) dt, dX = V dt."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from levykin.data.dataclass import DataClass
from levykin.data.path import PathBundle, SamplePath
from levykin.exceptions import InputError, NoiseCoverageError
from levykin.kernel.config import KineticConfig, time_grid
from levykin.kernel.scheme import EulerScheme, SchemeResult
from levykin.noise.rng import StreamFactory
from levykin.noise.sampler import sample_levy_batch
from levykin.noise.stable import StableLaw, sample_stable_batch
from levykin.service.parallel import fan_out

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
Noise = Union[SamplePath, PathBundle]


# ------------------------------------------------------------------------------------------------ #
@dataclass
class KineticSolution(DataClass):
    """Velocity and position bundles with the first hitting times of the radius ladder.

    ``hits[i, j]`` is the first recorded time at which |V| of path i reached ``ladder[j]``
    (nan if never). The last radius of the ladder is the explosion radius.
    """

    v: PathBundle
    x: PathBundle
    hits: np.ndarray
    ladder: Tuple[float, ...]

    @property
    def n_paths(self) -> int:
        return self.v.n_paths

    @property
    def exploded(self) -> np.ndarray:
        return self.v.exploded

    @property
    def exploded_fraction(self) -> float:
        return self.v.exploded_fraction

    def tau_r_hits(self, i: int = 0) -> List[Tuple[float, float]]:
        return [(r, float(t)) for r, t in zip(self.ladder, self.hits[i])]

    def single(self, i: int = 0) -> Tuple[SamplePath, SamplePath]:
        return self.v.path(i), self.x.path(i)


# ------------------------------------------------------------------------------------------------ #
def drift_rate(cfg: KineticConfig):
    """r(t, v) = -t^{-beta} F(v)."""
    drift, beta = cfg.drift, cfg.beta

    def rate(t: float, v: np.ndarray) -> np.ndarray:
        return -(t ** (-beta)) * drift(v)

    return rate


def scheme_for(cfg: KineticConfig) -> EulerScheme:
    implicit = cfg.drift.gamma >= 1 and cfg.drift.nondecreasing
    return EulerScheme(drift_rate(cfg), cfg.scheme, implicit=implicit)


def _as_bundle(noise: Noise) -> PathBundle:
    if isinstance(noise, SamplePath):
        return PathBundle(t=noise.t, values=noise.v[None, :], jumps=[noise.jumps])
    return noise


def _window(noise: PathBundle, t0: float, horizon: float, extra: Sequence[float]) -> np.ndarray:
    if not noise.covers(t0, horizon):
        msg = (
            f"Noise covers [{noise.t[0]}, {noise.t[-1]}] but the solution needs [{t0}, {horizon}]."
        )
        logger.error(msg)
        raise NoiseCoverageError(msg)
    inside = noise.t[(noise.t > t0) & (noise.t < horizon)]
    points = [t0, horizon] + [c for c in extra if t0 <= c <= horizon]
    return np.union1d(inside, np.asarray(points, dtype=float))


def _package(result: SchemeResult, ladder: Tuple[float, ...], jumps=None) -> KineticSolution:
    v = PathBundle(
        t=result.t,
        values=result.v,
        jumps=jumps,
        exploded=result.exploded,
        explosion_time=result.explosion_time,
    )
    x = PathBundle(
        t=result.t,
        values=result.x,
        exploded=result.exploded,
        explosion_time=result.explosion_time,
    )
    return KineticSolution(v=v, x=x, hits=result.hits, ladder=ladder)


def _merge(parts: List[SchemeResult]) -> SchemeResult:
    return SchemeResult(
        t=parts[0].t,
        v=np.concatenate([p.v for p in parts]),
        x=np.concatenate([p.x for p in parts]),
        hits=np.concatenate([p.hits for p in parts]),
        exploded=np.concatenate([p.exploded for p in parts]),
        explosion_time=np.concatenate([p.explosion_time for p in parts]),
    )


# ------------------------------------------------------------------------------------------------ #
def integrate_ske(
    cfg: KineticConfig,
    horizon: float,
    noise: Optional[Noise] = None,
    streams: Optional[StreamFactory] = None,
    n_paths: int = 1,
    first_index: int = 0,
    n_jobs: int = 1,
    checkpoints: Sequence[float] = (),
    record_only_checkpoints: bool = False,
) -> KineticSolution:
    """Solves the kinetic equation on [t0, horizon].

    The noise is either prerecorded (a path or a bundle, evaluated as a càdlàg step function on
    its own grid) or sampled from ``streams`` for path indices first_index .. first_index +
    n_paths - 1. With ``record_only_checkpoints`` only the checkpoint times (and t0, horizon)
    are kept in the solution.
    """
    if horizon <= cfg.t0:
        msg = f"Horizon {horizon} must exceed t0 = {cfg.t0}."
        logger.error(msg)
        raise InputError(msg)
    scheme = scheme_for(cfg)
    ladder = cfg.scheme.ladder
    s = cfg.scheme

    if noise is not None:
        bundle = _as_bundle(noise)
        grid = _window(bundle, cfg.t0, horizon, checkpoints)
        values = bundle.at(grid)
        record = _record_slots(grid, cfg.t0, horizon, checkpoints, record_only_checkpoints)
        result = scheme.run(grid, np.diff(values, axis=1), cfg.v0, cfg.x0, record=record)
        return _package(result, ladder, jumps=bundle.jumps)

    if streams is None:
        msg = "Either a prerecorded noise or a stream factory is required."
        logger.error(msg)
        raise InputError(msg)
    grid = time_grid(cfg.t0, horizon, s.step_rule, s.max_step, s.points_per_decade, checkpoints)

    if isinstance(cfg.noise, StableLaw):
        record = _record_slots(grid, cfg.t0, horizon, checkpoints, record_only_checkpoints)

        def chunk(indices: range) -> SchemeResult:
            paths = sample_stable_batch(cfg.noise, grid, streams, len(indices), indices.start)
            return scheme.run(grid, paths.increments(), cfg.v0, cfg.x0, record=record)

        result = _merge(fan_out(chunk, first_index, n_paths, n_jobs))
        return _package(result, ladder)

    bundle = sample_levy_batch(
        cfg.noise, grid, streams, n_paths, first_index, n_jobs, settings=s.jumps
    )
    record = _record_slots(bundle.t, cfg.t0, horizon, checkpoints, record_only_checkpoints)
    increments = bundle.increments()

    def chunk_triplet(indices: range) -> SchemeResult:
        rows = slice(indices.start - first_index, indices.stop - first_index)
        return scheme.run(bundle.t, increments[rows], cfg.v0, cfg.x0, record=record)

    result = _merge(fan_out(chunk_triplet, first_index, n_paths, n_jobs))
    return _package(result, ladder, jumps=bundle.jumps)


def _record_slots(
    grid: np.ndarray, t0: float, horizon: float, checkpoints: Sequence[float], only: bool
) -> Optional[np.ndarray]:
    if not only:
        return None
    wanted = np.union1d([t0, horizon], [c for c in checkpoints if t0 <= c <= horizon])
    return np.searchsorted(grid, wanted)
