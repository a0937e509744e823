#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/scaling/timechange.py                                                      #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 7th 2026 03:46:30 pm                                              #
# Modified   : Saturday October 10th 2026 02:02:19 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Time changes s -> phi(s) of paths and of the kinetic equation.

A path V is mapped to V^phi(s) = V(phi(s)) / phi'(s)^{1/alpha}. Under the exponential change
phi(s) = t0 e^s the kinetic equation becomes

    dH = dR - H / alpha ds - t0^c e^{c s} F(t0^{1/alpha} e^{s/alpha} H) ds,  c = 1 - 1/alpha - beta,

which no longer depends on s on the critical line beta = 1 + (gamma - 1) / alpha.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from levykin.data.path import LOOKUP_RTOL, SamplePath
from levykin.exceptions import DomainMismatchError, InputError
from levykin.kernel.config import KineticConfig
from levykin.kernel.scheme import EulerScheme

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
Map = Callable[[np.ndarray], np.ndarray]


# ------------------------------------------------------------------------------------------------ #
@dataclass
class TimeChange:
    """Increasing C^2 map phi from [domain_start, domain_end) onto [image_start, image_end).

    ``psi`` and ``psi_prime`` are the inverse map and its derivative.
    """

    phi: Map
    phi_prime: Map
    phi_second: Map
    psi: Map
    psi_prime: Map
    psi_second: Map
    domain_start: float = 0.0
    image_start: float = 1.0
    domain_end: float = np.inf
    image_end: float = np.inf
    label: str = "phi"

    def __post_init__(self) -> None:
        start = float(self.phi(np.asarray(self.domain_start)))
        if not np.isclose(start, self.image_start, rtol=1e-12, atol=0.0):
            msg = f"{self.label} maps {self.domain_start} to {start}, not to {self.image_start}."
            logger.error(msg)
            raise InputError(msg)

    @classmethod
    def exponential(cls, t0: float) -> TimeChange:
        """phi(s) = t0 e^s."""
        return cls(
            phi=lambda s: t0 * np.exp(s),
            phi_prime=lambda s: t0 * np.exp(s),
            phi_second=lambda s: t0 * np.exp(s),
            psi=lambda t: np.log(np.asarray(t) / t0),
            psi_prime=lambda t: 1.0 / np.asarray(t),
            psi_second=lambda t: -1.0 / np.asarray(t) ** 2,
            domain_start=0.0,
            image_start=t0,
            label="exponential",
        )

    @classmethod
    def shift(cls, t0: float) -> TimeChange:
        """phi(s) = t0 + s."""
        return cls(
            phi=lambda s: t0 + np.asarray(s),
            phi_prime=lambda s: np.ones_like(np.asarray(s, dtype=float)),
            phi_second=lambda s: np.zeros_like(np.asarray(s, dtype=float)),
            psi=lambda t: np.asarray(t) - t0,
            psi_prime=lambda t: np.ones_like(np.asarray(t, dtype=float)),
            psi_second=lambda t: np.zeros_like(np.asarray(t, dtype=float)),
            domain_start=0.0,
            image_start=t0,
            label="shift",
        )

    def inverse(self) -> TimeChange:
        return TimeChange(
            phi=self.psi,
            phi_prime=self.psi_prime,
            phi_second=self.psi_second,
            psi=self.phi,
            psi_prime=self.phi_prime,
            psi_second=self.phi_second,
            domain_start=self.image_start,
            image_start=self.domain_start,
            domain_end=self.image_end,
            image_end=self.domain_end,
            label=f"inverse {self.label}",
        )


# ------------------------------------------------------------------------------------------------ #
def _s_grid(path: SamplePath, tc: TimeChange) -> np.ndarray:
    t = path.t[path.t >= tc.image_start * (1 - LOOKUP_RTOL)]
    if len(t) < 2:
        msg = f"Path on [{path.start}, {path.end}] does not reach into the image of {tc.label}."
        logger.error(msg)
        raise DomainMismatchError(msg)
    s = tc.psi(t)
    s[0] = max(s[0], tc.domain_start)
    return s


def _check_window(path: SamplePath, tc: TimeChange, s: np.ndarray) -> np.ndarray:
    if s[0] < tc.domain_start or s[-1] > tc.domain_end:
        msg = f"s-window [{s[0]}, {s[-1]}] leaves the domain of {tc.label}."
        logger.error(msg)
        raise DomainMismatchError(msg)
    t = tc.phi(s)
    if not path.covers(float(t[0]), float(t[-1])):
        msg = (
            f"{tc.label} maps the s-window onto [{t[0]}, {t[-1]}], outside the path on "
            f"[{path.start}, {path.end}]."
        )
        logger.error(msg)
        raise DomainMismatchError(msg)
    return t


def time_change_path(
    v: SamplePath, tc: TimeChange, alpha: float, s_grid: Optional[np.ndarray] = None
) -> SamplePath:
    """V^phi(s) = V(phi(s)) / phi'(s)^{1/alpha} on ``s_grid`` (default: psi of the path grid)."""
    s = _s_grid(v, tc) if s_grid is None else np.asarray(s_grid, dtype=float)
    t = _check_window(v, tc, s)
    values = v.at(t) / tc.phi_prime(s) ** (1.0 / alpha)
    jumps = None
    if v.jumps is not None:
        inside = (v.jumps[:, 0] > t[0]) & (v.jumps[:, 0] <= t[-1])
        js = tc.psi(v.jumps[inside, 0])
        jumps = np.column_stack([js, v.jumps[inside, 1] / tc.phi_prime(js) ** (1.0 / alpha)])
    exploded = v.exploded and v.explosion_time <= t[-1]
    return SamplePath(
        t=s,
        v=values,
        jumps=jumps,
        exploded=exploded,
        explosion_time=float(tc.psi(v.explosion_time)) if exploded else None,
    )


def transformed_noise(noise: SamplePath, tc: TimeChange, alpha: float) -> SamplePath:
    """R with R(0) = 0 and increments (L(t_{k+1}) - L(t_k)) / phi'(s_{k+1})^{1/alpha}.

    Built from the recorded noise so that both equations see the same jumps.
    """
    s = _s_grid(noise, tc)
    t = _check_window(noise, tc, s)
    increments = np.diff(noise.at(t)) / tc.phi_prime(s[1:]) ** (1.0 / alpha)
    values = np.concatenate([[0.0], np.cumsum(increments)])
    return SamplePath(t=s, v=values)


# ------------------------------------------------------------------------------------------------ #
def _exponent(cfg: KineticConfig) -> float:
    return 1.0 - 1.0 / cfg.alpha - cfg.beta


def transformed_drift_coefficient(
    s: Union[float, np.ndarray], v: Union[float, np.ndarray], cfg: KineticConfig
) -> Union[float, np.ndarray]:
    """Full drift of the exponentially time-changed equation."""
    alpha, t0 = cfg.alpha, cfg.t0
    c = _exponent(cfg)
    s = np.asarray(s, dtype=float)
    v = np.asarray(v, dtype=float)
    original = t0 ** (1.0 / alpha) * np.exp(s / alpha) * v
    value = -v / alpha - t0**c * np.exp(c * s) * cfg.drift(original)
    return float(value) if value.ndim == 0 else value


def integrate_transformed(
    cfg: KineticConfig, noise: SamplePath, h0: Optional[float] = None
) -> SamplePath:
    """Euler integration of the time-changed equation driven by R on the grid of R."""
    if cfg.alpha is None:
        msg = "The time-changed equation needs a noise with a stability index."
        logger.error(msg)
        raise InputError(msg)
    h0 = cfg.v0 / cfg.t0 ** (1.0 / cfg.alpha) if h0 is None else h0

    def rate(s: float, h: np.ndarray) -> np.ndarray:
        return np.asarray(transformed_drift_coefficient(s, h, cfg))

    implicit = cfg.drift.gamma >= 1 and cfg.drift.nondecreasing
    scheme = EulerScheme(rate, cfg.scheme, implicit=implicit)
    result = scheme.run(noise.t, np.diff(noise.v)[None, :], h0)
    exploded = bool(result.exploded[0])
    return SamplePath(
        t=result.t,
        v=result.v[0],
        exploded=exploded,
        explosion_time=float(result.explosion_time[0]) if exploded else None,
    )
