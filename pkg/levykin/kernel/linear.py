#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/kernel/linear.py                                                           #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 7th 2026 10:50:59 am                                              #
# Modified   : Sunday October 11th 2026 08:43:21 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Exact solution of the linear equation dV = dL - rho t^{-beta} V dt on a recorded noise path."""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from levykin.data.path import SamplePath
from levykin.exceptions import InputError, NoiseCoverageError
from levykin.kernel.config import KineticConfig
from levykin.kernel.drift import Homogeneous

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def primitive(t: np.ndarray, beta: float) -> np.ndarray:
    """Phi with Phi' = t^{-beta}: t^{1-beta} / (1 - beta), or log t when beta = 1."""
    t = np.asarray(t, dtype=float)
    if beta == 1:
        return np.log(t)
    return t ** (1.0 - beta) / (1.0 - beta)


def exact_linear_solution(
    cfg: KineticConfig, noise: SamplePath, horizon: Optional[float] = None
) -> SamplePath:
    """Variation of constants solution on the grid of the noise path.

    V_t = e^{-rho(Phi(t) - Phi(t0))} v0 + int_{t0}^t e^{-rho(Phi(t) - Phi(s))} dL_s, with L read
    as a càdlàg step function. The stochastic integral then reduces to the exact recursion
    V_{k+1} = e^{-rho(Phi_{k+1} - Phi_k)} V_k + (L_{k+1} - L_k).
    """
    drift = cfg.drift
    if not isinstance(drift, Homogeneous) or drift.gamma != 1 or drift.Fm1 != -drift.F1:
        msg = f"The exact solution needs a linear drift rho v, got {drift}."
        logger.error(msg)
        raise InputError(msg)
    horizon = noise.end if horizon is None else horizon
    if not noise.covers(cfg.t0, horizon):
        msg = (
            f"Noise covers [{noise.start}, {noise.end}] but the solution needs "
            f"[{cfg.t0}, {horizon}]."
        )
        logger.error(msg)
        raise NoiseCoverageError(msg)

    inside = noise.t[(noise.t > cfg.t0) & (noise.t < horizon)]
    t = np.union1d(inside, [cfg.t0, horizon])
    increments = np.diff(noise.at(t))
    decay = np.exp(-drift.rho * np.diff(primitive(t, cfg.beta)))

    v = np.empty(len(t))
    v[0] = cfg.v0
    for k in range(len(t) - 1):
        v[k + 1] = decay[k] * v[k] + increments[k]
    jumps = None
    if noise.jumps is not None:
        jumps = noise.jumps[(noise.jumps[:, 0] > cfg.t0) & (noise.jumps[:, 0] <= horizon)]
    return SamplePath(t=t, v=v, jumps=jumps)
