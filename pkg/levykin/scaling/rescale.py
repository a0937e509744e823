#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/scaling/rescale.py                                                         #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 5th 2026 12:25:19 pm                                                 #
# Modified   : Friday October 9th 2026 02:05:12 pm                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Space-time rescaling of solutions: t -> (eps^theta V_{t/eps}, eps^{1+theta} X_{t/eps})."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from levykin.data.dataclass import DataClass
from levykin.data.path import LOOKUP_RTOL, SamplePath
from levykin.exceptions import InputError, InsufficientHorizonError
from levykin.kernel.solver import KineticSolution

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
@dataclass
class RescaleSpec(DataClass):
    """Rescaling parameter eps and velocity exponent theta_v (1/alpha for stable noise)."""

    eps: float
    theta_v: float
    v0: float = 1.0

    def __post_init__(self) -> None:
        if not 0 < self.eps <= 1:
            msg = f"eps must lie in (0, 1], got {self.eps}."
            logger.error(msg)
            raise InputError(msg)

    @property
    def pad_value(self) -> float:
        return self.eps**self.theta_v * self.v0

    @property
    def velocity_scale(self) -> float:
        return self.eps**self.theta_v

    @property
    def position_scale(self) -> float:
        return self.eps ** (1.0 + self.theta_v)


# ------------------------------------------------------------------------------------------------ #
def rescale_path(
    path: SamplePath,
    eps: float,
    exponent: float,
    pad_value: Optional[float] = None,
    horizon: Optional[float] = None,
) -> SamplePath:
    """The path t -> eps^exponent f(t/eps).

    With ``pad_value`` the result starts at 0 and equals pad_value before eps * path.start.
    With ``horizon`` the result is cut at that time, which the path must reach at horizon / eps.
    """
    if not 0 < eps <= 1:
        msg = f"eps must lie in (0, 1], got {eps}."
        logger.error(msg)
        raise InputError(msg)
    if horizon is not None:
        required = horizon / eps
        if path.end < required * (1 - LOOKUP_RTOL):
            msg = (
                f"Rescaling at eps={eps} up to {horizon} needs the solution up to {required}, "
                f"but it ends at {path.end}."
            )
            logger.error(msg)
            raise InsufficientHorizonError(msg, required=required)
        path = path.window(path.start, required)

    factor = eps**exponent
    t = eps * path.t
    v = factor * path.v
    jumps = None
    if path.jumps is not None:
        jumps = np.column_stack([eps * path.jumps[:, 0], factor * path.jumps[:, 1]])
    if pad_value is not None and t[0] > 0:
        t = np.concatenate([[0.0], t])
        v = np.concatenate([[pad_value], v])
    return SamplePath(
        t=t,
        v=v,
        jumps=jumps,
        exploded=path.exploded,
        explosion_time=eps * path.explosion_time if path.exploded else None,
    )


def rescale_kinetic(
    sol: KineticSolution,
    spec: RescaleSpec,
    horizon: Optional[float] = None,
    index: int = 0,
) -> Tuple[SamplePath, SamplePath]:
    """Rescaled velocity and position of one path of the solution on [0, horizon]."""
    v, x = sol.single(index)
    x0 = float(x.v[0])
    v_scaled = rescale_path(v, spec.eps, spec.theta_v, spec.pad_value, horizon)
    x_scaled = rescale_path(x, spec.eps, 1.0 + spec.theta_v, spec.position_scale * x0, horizon)
    return v_scaled, x_scaled
