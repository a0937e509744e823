#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/kernel/config.py                                                           #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 8th 2026 01:08:26 pm                                               #
# Modified   : Sunday October 11th 2026 10:10:49 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Problem instances of the kinetic equation dV = dL - t^{-beta} F(V) dt, dX = V dt."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from levykin.data.dataclass import DataClass
from levykin.exceptions import InputError
from levykin.kernel.drift import BoundedExample, DriftSpec, Homogeneous
from levykin.noise.measure import PowerLaw
from levykin.noise.sampler import DEFAULT_CUTOFF, DEFAULT_JUMP_BUDGET, JumpSettings
from levykin.noise.stable import StableLaw
from levykin.noise.triplet import LevyTriplet

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
CRITICAL_ATOL = 1e-12


class StepRule(Enum):
    GEOMETRIC = "geometric"
    UNIFORM = "uniform"


class Regime(Enum):
    STABLE = "stable"
    H1 = "H1"
    H2 = "H2"


# ------------------------------------------------------------------------------------------------ #
#                                          SCHEME                                                  #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class SchemeSettings(DataClass):
    """Time stepping, absorption and small-jump settings."""

    step_rule: str = StepRule.GEOMETRIC.value
    max_step: float = 1.0
    points_per_decade: int = 100
    explosion_radius: float = 1e8
    radii: Tuple[float, ...] = (1e2, 1e4, 1e6)
    implicit_radius: float = 10.0
    growth_limit: float = 0.5
    min_step: float = 1e-12
    tolerance: float = 1e-9
    jump_cutoff: float = DEFAULT_CUTOFF
    jump_budget: float = DEFAULT_JUMP_BUDGET
    gaussian_floor: Optional[float] = None

    def __post_init__(self) -> None:
        StepRule(self.step_rule)
        self.radii = tuple(sorted(float(r) for r in self.radii))
        if self.max_step <= 0:
            msg = f"Maximum step must be positive, got {self.max_step}."
            logger.error(msg)
            raise InputError(msg)
        if not 0 < self.jump_cutoff <= 1:
            msg = f"Jump cutoff must lie in (0, 1], got {self.jump_cutoff}."
            logger.error(msg)
            raise InputError(msg)

    @property
    def ladder(self) -> Tuple[float, ...]:
        """Radii whose first hitting times are recorded, the explosion radius last."""
        return tuple(r for r in self.radii if r < self.explosion_radius) + (self.explosion_radius,)

    @property
    def jumps(self) -> JumpSettings:
        return JumpSettings(
            cutoff=self.jump_cutoff, budget=self.jump_budget, gaussian_floor=self.gaussian_floor
        )


def time_grid(
    t0: float,
    horizon: float,
    rule: Union[str, StepRule] = StepRule.GEOMETRIC,
    max_step: float = 1.0,
    points_per_decade: int = 100,
    checkpoints: Sequence[float] = (),
) -> np.ndarray:
    """Grid on [t0, horizon] containing the checkpoints, with no step above max_step."""
    if horizon <= t0:
        msg = f"Horizon {horizon} must exceed the start time {t0}."
        logger.error(msg)
        raise InputError(msg)
    rule = StepRule(rule)
    if rule is StepRule.GEOMETRIC and t0 > 0:
        n = max(1, int(np.ceil(points_per_decade * np.log10(horizon / t0))))
        coarse = np.geomspace(t0, horizon, n + 1)
    else:
        coarse = np.array([t0, horizon], dtype=float)
    pieces = [coarse[:1]]
    for a, b in zip(coarse[:-1], coarse[1:]):
        k = max(1, int(np.ceil((b - a) / max_step - 1e-12)))
        pieces.append(np.linspace(a, b, k + 1)[1:])
    grid = np.concatenate(pieces)
    inside = [c for c in checkpoints if t0 <= c <= horizon]
    return np.union1d(grid, np.asarray(inside, dtype=float))


# ------------------------------------------------------------------------------------------------ #
#                                      KINETIC CONFIG                                              #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class KineticConfig(DataClass):
    """One instance of the kinetic equation."""

    noise: Union[StableLaw, LevyTriplet] = field(default_factory=StableLaw)
    drift: DriftSpec = field(default_factory=Homogeneous)
    beta: float = 2.0
    t0: float = 1.0
    v0: float = 1.0
    x0: float = 0.0
    scheme: SchemeSettings = field(default_factory=SchemeSettings)

    def __post_init__(self) -> None:
        if self.t0 <= 0:
            msg = f"Start time must be positive, got {self.t0}."
            logger.error(msg)
            raise InputError(msg)
        if self.beta < 0:
            msg = f"Time exponent beta must be non-negative, got {self.beta}."
            logger.error(msg)
            raise InputError(msg)
        if self.scheme.explosion_radius <= abs(self.v0):
            radius = self.scheme.explosion_radius
            msg = f"Explosion radius {radius} must exceed |v0| = {abs(self.v0)}."
            logger.error(msg)
            raise InputError(msg)
        if self.v0 <= 0:
            logger.info(f"Initial velocity {self.v0} is not positive; proceeding.")
        if not self.well_posed:
            logger.warning(
                f"(alpha, gamma) = ({self.alpha}, {self.gamma}) lies outside the zones where "
                "strong existence and uniqueness are known."
            )

    # -------------------------------------------------------------------------------------------- #
    @property
    def alpha(self) -> Optional[float]:
        return self.noise.alpha

    @property
    def gamma(self) -> float:
        return self.drift.gamma

    @property
    def triplet(self) -> LevyTriplet:
        if isinstance(self.noise, StableLaw):
            return self.noise.to_triplet()
        return self.noise

    @property
    def regime(self) -> Regime:
        if isinstance(self.noise, StableLaw):
            return Regime.STABLE
        m = self.noise.measure
        if isinstance(m, PowerLaw) and m.satisfies_h1:
            return Regime.H1
        return Regime.H2

    @property
    def b_zero(self) -> bool:
        return isinstance(self.noise, StableLaw) or self.noise.b == 0

    @property
    def critical_beta(self) -> Optional[float]:
        """beta on the line 1 + (gamma - 1) / alpha."""
        if self.alpha is None:
            return None
        return 1.0 + (self.gamma - 1.0) / self.alpha

    @property
    def is_critical(self) -> bool:
        critical = self.critical_beta
        return critical is not None and abs(self.beta - critical) <= CRITICAL_ATOL

    @property
    def well_posed(self) -> bool:
        if isinstance(self.drift, BoundedExample) or self.drift.is_zero:
            return True
        a, g = self.alpha, self.gamma
        if a is None:
            return True
        return (1 - a / 2 < g < 1) or (g >= 1 and a > 1)

    def with_(self, **changes) -> KineticConfig:
        return replace(self, **changes)
