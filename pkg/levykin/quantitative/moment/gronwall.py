#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/moment/gronwall.py                                            #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 06:56:44 pm                                                #
# Modified   : Tuesday October 13th 2026 05:08:50 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Bound for g(t) <= a(t) + int_{t0}^t b(s) g(s)^r ds with r in [0, 1)."""
import logging
from typing import Callable

import numpy as np
from scipy import integrate

from levykin.exceptions import InputError, QuadratureError

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
GRONWALL_RTOL = 1e-10


# ------------------------------------------------------------------------------------------------ #
def gronwall_constant(r: float) -> float:
    return 2.0 ** (1.0 / (1.0 - r))


def gronwall_bound(
    a: Callable[[float], float],
    b: Callable[[float], float],
    r: float,
    t: float,
    t0: float,
) -> float:
    """C_r [a(t) + ((1 - r) int_{t0}^t b)^{1/(1 - r)}] with C_r = 2^{1/(1 - r)}.

    Valid for nondecreasing a >= 0 and b > 0.
    """
    if not 0 <= r < 1:
        msg = f"Exponent r must lie in [0, 1), got {r}."
        logger.error(msg)
        raise InputError(msg)
    if t < t0:
        msg = f"Time {t} precedes t0 = {t0}."
        logger.error(msg)
        raise InputError(msg)
    integral, abserr = integrate.quad(
        b, t0, t, epsabs=0.0, epsrel=GRONWALL_RTOL, limit=200
    )
    if abserr > 1e-6 * max(1.0, abs(integral)):
        msg = f"Quadrature of b over [{t0}, {t}] did not converge (error {abserr})."
        logger.error(msg)
        raise QuadratureError(msg, residual=abserr)
    if integral <= 0 and t > t0:
        msg = "b must be positive on the integration window."
        logger.error(msg)
        raise InputError(msg)
    return float(gronwall_constant(r) * (a(t) + ((1.0 - r) * integral) ** (1.0 / (1.0 - r))))


def gronwall_iterate(
    a: Callable[[np.ndarray], np.ndarray],
    b: Callable[[np.ndarray], np.ndarray],
    r: float,
    grid: np.ndarray,
    n_iter: int = 50,
) -> np.ndarray:
    """Fixed-point iterates g <- a + int b g^r from g = a on a grid starting at t0.

    The cumulative integral uses the trapezoid rule.
    """
    grid = np.asarray(grid, dtype=float)
    g = np.asarray(a(grid), dtype=float)
    weight = np.asarray(b(grid), dtype=float)
    for _ in range(n_iter):
        g = a(grid) + integrate.cumulative_trapezoid(weight * g**r, grid, initial=0.0)
    return g
