#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/convergence/metric.py                                         #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 2nd 2026 09:16:25 am                                                 #
# Modified   : Saturday October 3rd 2026 03:21:21 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Distances between càdlàg paths on (0, infinity).

d_u(f, g) = sum_n 2^{-n} min(1, sup_{[1/n, n]} |f - g|), truncated after n_terms terms. The
Skorokhod distance d_s replaces |f - g| by |k_n (f o lambda - g)| and adds the log-slope of
lambda; only upper bounds of it are computable, from a finite family of time changes lambda.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from levykin.data.dataclass import DataClass
from levykin.data.path import SamplePath
from levykin.exceptions import CoverageError, InputError

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
MAX_BREAKPOINTS = 5
MAX_LOG_SLOPE = 1.0
DILATIONS = np.exp(np.linspace(-0.1, 0.1, 9))


class LambdaSearch(Enum):
    OFF = "off"
    COARSE = "coarse-grid"


# ------------------------------------------------------------------------------------------------ #
@dataclass
class MetricConfig(DataClass):
    """Number of series terms and the family of time changes for the Skorokhod bound."""

    n_terms: int = 20
    lambda_search: str = LambdaSearch.COARSE.value

    def __post_init__(self) -> None:
        LambdaSearch(self.lambda_search)
        if self.n_terms < 1:
            msg = f"The series needs at least one term, got {self.n_terms}."
            logger.error(msg)
            raise InputError(msg)

    @property
    def truncation_bound(self) -> float:
        return 2.0 ** (-self.n_terms)


# ------------------------------------------------------------------------------------------------ #
def _check_coverage(f: SamplePath, g: SamplePath, cfg: MetricConfig) -> None:
    lo, hi = 1.0 / cfg.n_terms, float(cfg.n_terms)
    for name, path in (("f", f), ("g", g)):
        if not path.covers(lo, hi):
            msg = f"Path {name} on [{path.start}, {path.end}] does not cover [{lo}, {hi}]."
            logger.error(msg)
            raise CoverageError(msg)


def _gap(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """|a - b| with equal (possibly infinite) values at distance 0."""
    with np.errstate(invalid="ignore"):
        return np.where(a == b, 0.0, np.abs(a - b))


def uniform_metric(f: SamplePath, g: SamplePath, cfg: Optional[MetricConfig] = None) -> float:
    """Truncated d_u. The neglected tail is at most cfg.truncation_bound."""
    cfg = cfg or MetricConfig()
    _check_coverage(f, g, cfg)
    n = np.arange(1, cfg.n_terms + 1, dtype=float)
    lo, hi = 1.0 / cfg.n_terms, float(cfg.n_terms)
    grid = np.union1d(np.union1d(f.t, g.t), np.concatenate([1.0 / n, n]))
    grid = grid[(grid >= lo) & (grid <= hi)]
    gap = _gap(f.at(grid), g.at(grid))
    total = 0.0
    for k in n:
        inside = (grid >= 1.0 / k) & (grid <= k)
        total += 2.0**-k * min(1.0, float(gap[inside].max()))
    return total


# ------------------------------------------------------------------------------------------------ #
#                                      SKOROKHOD BOUND                                             #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class TimeDeformation:
    """Piecewise linear increasing lambda through (0, 0) and the knots, slope 1 afterwards."""

    knots_in: np.ndarray
    knots_out: np.ndarray

    @classmethod
    def identity(cls) -> TimeDeformation:
        return cls(knots_in=np.zeros(1), knots_out=np.zeros(1))

    @classmethod
    def dilation(cls, factor: float) -> TimeDeformation:
        # Far knot so the dilation holds on any practical window.
        return cls(knots_in=np.array([0.0, 1e12]), knots_out=np.array([0.0, factor * 1e12]))

    def __call__(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        inside = np.interp(t, self.knots_in, self.knots_out)
        after = self.knots_out[-1] + (t - self.knots_in[-1])
        return np.where(t <= self.knots_in[-1], inside, after)

    def inverse(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        inside = np.interp(t, self.knots_out, self.knots_in)
        after = self.knots_in[-1] + (t - self.knots_out[-1])
        return np.where(t <= self.knots_out[-1], inside, after)

    @property
    def log_slope(self) -> float:
        if len(self.knots_in) < 2:
            return 0.0
        slopes = np.diff(self.knots_out) / np.diff(self.knots_in)
        return float(np.max(np.abs(np.log(slopes))))


def _k(n: float, t: np.ndarray) -> np.ndarray:
    # Zero below 1/n, one on [1/n, n], linear down to zero on [n, n + 1].
    return np.where(t < 1.0 / n, 0.0, np.clip(n + 1.0 - t, 0.0, 1.0))


def _jump_times(path: SamplePath, k: int) -> np.ndarray:
    if path.jumps is not None and len(path.jumps):
        order = np.argsort(-np.abs(path.jumps[:, 1]))[:k]
        return np.sort(path.jumps[order, 0])
    steps = np.abs(np.diff(path.v))
    steps = np.where(np.isfinite(steps), steps, 0.0)
    order = np.argsort(-steps)[:k]
    order = order[steps[order] > 0]
    return np.sort(path.t[order + 1])


def _aligned(f: SamplePath, g: SamplePath) -> Optional[TimeDeformation]:
    """Maps the largest jumps of g onto the nearest jumps of f."""
    tf = _jump_times(f, MAX_BREAKPOINTS)
    tg = _jump_times(g, MAX_BREAKPOINTS)
    if len(tf) == 0 or len(tg) == 0:
        return None
    knots_in, knots_out = [0.0], [0.0]
    for u in tg:
        w = tf[np.argmin(np.abs(tf - u))]
        if u > knots_in[-1] and w > knots_out[-1]:
            knots_in.append(float(u))
            knots_out.append(float(w))
    if len(knots_in) == 1:
        return None
    return TimeDeformation(knots_in=np.array(knots_in), knots_out=np.array(knots_out))


def _candidates(f: SamplePath, g: SamplePath, cfg: MetricConfig) -> List[TimeDeformation]:
    candidates = [TimeDeformation.identity()]
    if LambdaSearch(cfg.lambda_search) is LambdaSearch.OFF:
        return candidates
    aligned = _aligned(f, g)
    if aligned is not None:
        candidates.append(aligned)
    candidates.extend(TimeDeformation.dilation(c) for c in DILATIONS if c != 1.0)
    return [c for c in candidates if c.log_slope <= MAX_LOG_SLOPE]


def _summands(
    f: SamplePath, g: SamplePath, lam: TimeDeformation, cfg: MetricConfig
) -> np.ndarray:
    """max(log-slope, sup_t k_n |f(lambda(t)) - g(t)|) for every n."""
    hi = cfg.n_terms + 1.0
    n = np.arange(1, cfg.n_terms + 1, dtype=float)
    lo = 1.0 / cfg.n_terms
    # f o lambda and g are step functions with breaks at lambda^{-1}(f.t) and g.t.
    grid = np.union1d(np.union1d(lam.inverse(f.t), g.t), np.concatenate([1.0 / n, n]))
    grid = grid[(grid >= lo) & (grid <= hi)]
    mapped = np.maximum(lam(grid), f.start)
    gap = _gap(f.at(mapped), g.at(np.maximum(grid, g.start)))
    sups = np.array([float(np.max(_k(k, grid) * gap)) for k in n])
    return np.maximum(lam.log_slope, sups)


def skorokhod_upper(f: SamplePath, g: SamplePath, cfg: Optional[MetricConfig] = None) -> float:
    """Upper bound of the truncated d_s, never above the truncated d_u."""
    cfg = cfg or MetricConfig()
    uniform = uniform_metric(f, g, cfg)
    best = None
    for lam in _candidates(f, g, cfg):
        values = _summands(f, g, lam, cfg)
        best = values if best is None else np.minimum(best, values)
    weights = 2.0 ** -np.arange(1, cfg.n_terms + 1, dtype=float)
    bound = float(np.sum(weights * np.minimum(1.0, best)))
    return min(bound, uniform)


# ------------------------------------------------------------------------------------------------ #
def sup_modulus(
    path: SamplePath, delta: float, window: Optional[Tuple[float, float]] = None
) -> float:
    """sup of |f(s) - f(t)| over s, t in the window with |s - t| <= delta."""
    if delta <= 0:
        msg = f"Modulus width must be positive, got {delta}."
        logger.error(msg)
        raise InputError(msg)
    if window is not None:
        path = path.window(*window)
    t, v = path.t, path.v
    ends = np.searchsorted(t, t + delta, side="right")
    best = 0.0
    for i, j in enumerate(ends):
        segment = v[i:j]
        best = max(best, float(segment.max() - segment.min()))
    return best
