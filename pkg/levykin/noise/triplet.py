#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/noise/triplet.py                                                           #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 3rd 2026 09:33:05 am                                               #
# Modified   : Monday October 5th 2026 08:59:14 am                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Generating triplets (A, nu, b), their rescaling and their small-eps limits."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional, Sequence

import numpy as np
import pandas as pd

from levykin.data.dataclass import DataClass
from levykin.exceptions import ClassificationError, DegenerateLimitError, InputError
from levykin.noise.measure import (
    LevyMeasureSpec,
    PowerLaw,
    Rescaled,
    Tabulated,
    Tempered,
    Truncated,
    ZeroMeasure,
    measure_from_dict,
    truncation,
)

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
DEGENERATE_ATOL = 1e-10


# ------------------------------------------------------------------------------------------------ #
#                                           TRIPLET                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class LevyTriplet(DataClass):
    """Gaussian coefficient A, center b (with respect to h) and Lévy measure."""

    A: float = 0.0
    b: float = 0.0
    measure: LevyMeasureSpec = field(default_factory=ZeroMeasure)

    def __post_init__(self) -> None:
        if self.A < 0:
            msg = f"Gaussian coefficient must be non-negative, got {self.A}."
            logger.error(msg)
            raise InputError(msg)
        if self.measure is None:
            self.measure = ZeroMeasure()

    @property
    def alpha(self) -> Optional[float]:
        """Index of the small jumps, 2 for a purely Gaussian triplet."""
        if self.measure.alpha is not None:
            return self.measure.alpha
        if self.measure.is_zero and self.A > 0:
            return 2.0
        return None

    @property
    def is_deterministic(self) -> bool:
        return self.A == 0 and self.measure.is_zero

    def canonical(self) -> str:
        return f"({self.A!r}, {self.b!r}, {self.measure.canonical()})"

    @classmethod
    def from_dict(cls, d: dict) -> LevyTriplet:
        d = dict(d)
        return cls(
            A=float(d.get("A", 0.0)),
            b=float(d.get("b", 0.0)),
            measure=measure_from_dict(d.get("measure")),
        )


# ------------------------------------------------------------------------------------------------ #
#                                         RESCALING                                                #
# ------------------------------------------------------------------------------------------------ #
def rescaled_triplet(triplet: LevyTriplet, eps: float, v_eps: float) -> LevyTriplet:
    """Triplet of the process t -> v_eps L_{t/eps}."""
    if not 0 < eps <= 1:
        msg = f"eps must lie in (0, 1], got {eps}."
        logger.error(msg)
        raise InputError(msg)
    if v_eps <= 0:
        msg = f"Scale factor must be positive, got {v_eps}."
        logger.error(msg)
        raise InputError(msg)
    if eps == 1 and v_eps == 1:
        return LevyTriplet(A=triplet.A, b=triplet.b, measure=triplet.measure)

    measure = triplet.measure
    A = v_eps**2 / eps * triplet.A
    # The integrand vanishes on |z| < min(1, 1/v_eps).
    lower = min(1.0, 1.0 / v_eps)

    def correction(z: np.ndarray) -> np.ndarray:
        return truncation(v_eps * z) / v_eps - truncation(z)

    integral = measure.integrate(correction, lower=lower, points=(1.0, 1.0 / v_eps))
    b = v_eps / eps * (triplet.b + integral)
    scaled = measure if measure.is_zero else Rescaled(base=measure, eps=eps, scale=v_eps)
    logger.debug(f"Rescaled triplet at eps={eps}, v={v_eps}: A={A}, b={b}")
    return LevyTriplet(A=A, b=b, measure=scaled)


# ------------------------------------------------------------------------------------------------ #
#                                           LIMITS                                                 #
# ------------------------------------------------------------------------------------------------ #
class LimitCase(Enum):
    CAUCHY = "i"
    DRIFT_HEAVY = "ii"
    DRIFT_INTEGRABLE = "iii"
    STABLE_SUBLINEAR = "iv"
    STABLE_CENTERED = "v"


@dataclass
class LimitTriplet(DataClass):
    """Rate exponent theta with v_eps = eps^theta, limit triplet and the case that applied."""

    theta: float
    limit: LevyTriplet
    case: LimitCase

    def scale(self, eps: float) -> float:
        return eps**self.theta


def _stable_center(measure: PowerLaw) -> float:
    a = measure.alpha
    return (measure.c_plus - measure.c_minus) / (a * (1.0 - a))


def _satisfies_h2(measure: LevyMeasureSpec) -> bool:
    if isinstance(measure, (Truncated, Tempered)):
        return measure.satisfies_h2(measure.alpha0)
    if isinstance(measure, (Tabulated, ZeroMeasure)):
        return True
    if isinstance(measure, PowerLaw):
        return measure.alpha > 1
    return False


def limit_triplet(triplet: LevyTriplet) -> LimitTriplet:
    """Classifies the triplet and returns the limit of v_eps L_{t/eps} as eps -> 0."""
    m = triplet.measure
    b = triplet.b
    if isinstance(m, PowerLaw) and m.satisfies_h1:
        a = m.alpha
        if a == 1:
            if not m.satisfies_hg:
                msg = "Index 1 power law needs an integrable odd part of g for a limit."
                logger.error(msg)
                raise ClassificationError(msg)
            b_star = b + m.odd_tail_integral(order=1.0)
            limit = LevyTriplet(A=0.0, b=b_star, measure=m.stable_part())
            return LimitTriplet(theta=1.0, limit=limit, case=LimitCase.CAUCHY)
        if a < 1:
            limit = LevyTriplet(A=0.0, b=_stable_center(m), measure=m.stable_part())
            return LimitTriplet(theta=1.0 / a, limit=limit, case=LimitCase.STABLE_SUBLINEAR)
        if b == 0:
            if m.c_plus != m.c_minus:
                logger.warning(
                    "Asymmetric tails with b = 0: the process has non-zero mean and the "
                    "rescaled drift does not settle at the strictly stable center."
                )
            limit = LevyTriplet(A=0.0, b=_stable_center(m), measure=m.stable_part())
            return LimitTriplet(theta=1.0 / a, limit=limit, case=LimitCase.STABLE_CENTERED)
        if m.satisfies_hg:
            b_star = b + m.odd_tail_integral(order=1.0)
            _check_degenerate(b_star, LimitCase.DRIFT_HEAVY)
            limit = LevyTriplet(A=0.0, b=b_star, measure=ZeroMeasure())
            return LimitTriplet(theta=1.0, limit=limit, case=LimitCase.DRIFT_HEAVY)

    if _satisfies_h2(m):
        b_star = b + m.integrate(lambda z: z - truncation(z), lower=1.0)
        _check_degenerate(b_star, LimitCase.DRIFT_INTEGRABLE)
        limit = LevyTriplet(A=0.0, b=b_star, measure=ZeroMeasure())
        return LimitTriplet(theta=1.0, limit=limit, case=LimitCase.DRIFT_INTEGRABLE)

    msg = f"No limit case applies to the triplet {triplet.canonical()}."
    logger.error(msg)
    raise ClassificationError(msg)


def _check_degenerate(b_star: float, case: LimitCase) -> None:
    if abs(b_star) <= DEGENERATE_ATOL:
        msg = f"Limit drift vanishes in case ({case.value}); the deterministic limit is degenerate."
        logger.error(msg)
        raise DegenerateLimitError(msg)


# ------------------------------------------------------------------------------------------------ #
#                                    LIMIT FUNCTIONALS                                             #
# ------------------------------------------------------------------------------------------------ #
def _ramp(z: np.ndarray) -> np.ndarray:
    return np.clip(np.abs(z) - 0.5, 0.0, 1.0)


TEST_FUNCTIONS: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "ramp": _ramp,
    "signed_ramp": lambda z: np.sign(z) * _ramp(z),
    "damped_ramp": lambda z: _ramp(z) * np.exp(-np.abs(z) / 4.0),
}
TEST_FUNCTION_SUPPORT = 0.5
TEST_FUNCTION_KINKS = (0.5, 1.5)


def triplet_functionals(
    triplet: LevyTriplet, test_functions: Optional[Dict[str, Callable]] = None
) -> Dict[str, float]:
    """Quantities whose convergence characterises convergence of Lévy processes.

    Returns b, A + integral of h^2, and the integrals of test functions vanishing near 0.
    """
    test_functions = test_functions or TEST_FUNCTIONS
    m = triplet.measure
    values = {
        "b": triplet.b,
        "A": triplet.A,
        "h2": triplet.A + m.integrate(lambda z: truncation(z) ** 2),
    }
    for name, func in test_functions.items():
        values[name] = m.integrate(func, lower=TEST_FUNCTION_SUPPORT, points=TEST_FUNCTION_KINKS)
    return values


def limit_convergence(
    triplet: LevyTriplet,
    eps_list: Sequence[float],
    test_functions: Optional[Dict[str, Callable]] = None,
) -> pd.DataFrame:
    """Functionals of the rescaled triplets along eps_list next to those of the limit.

    The error column is |value - limit| / max(1, |limit|).
    """
    result = limit_triplet(triplet)
    expected = triplet_functionals(result.limit, test_functions)
    rows = []
    for eps in eps_list:
        scaled = rescaled_triplet(triplet, eps, result.scale(eps))
        actual = triplet_functionals(scaled, test_functions)
        for name, value in actual.items():
            target = expected[name]
            rows.append(
                {
                    "case": result.case.value,
                    "eps": eps,
                    "functional": name,
                    "value": value,
                    "limit": target,
                    "error": abs(value - target) / max(1.0, abs(target)),
                }
            )
    return pd.DataFrame(rows)
