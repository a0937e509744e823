#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/exceptions.py                                                              #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 1st 2026 04:50:24 pm                                               #
# Modified   : Friday October 2nd 2026 02:42:58 pm                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Exception hierarchy. Every raise site logs the message at ERROR level first."""
from typing import Optional

import numpy as np


# ------------------------------------------------------------------------------------------------ #
class LevykinError(Exception):
    """Root of all package errors."""


# ------------------------------------------------------------------------------------------------ #
#                                        INPUT ERRORS                                              #
# ------------------------------------------------------------------------------------------------ #
class InputError(LevykinError, ValueError):
    """A precondition on the arguments was violated."""


class UnsupportedLawError(InputError):
    """Stable law the sampler does not support (asymmetric alpha = 1)."""


class SingularDriftError(InputError):
    """Drift with negative homogeneity exponent evaluated at the origin."""


class NoiseCoverageError(InputError):
    """Prerecorded noise path does not cover the integration window."""


class InsufficientHorizonError(InputError):
    """Rescaling needs a solution on a longer time window."""

    def __init__(self, msg: str, required: float) -> None:
        super().__init__(msg)
        self.required = required


class DomainMismatchError(InputError):
    """Time change maps outside the grid of the path."""


class CoverageError(InputError):
    """Paths do not cover the window required by a path metric."""


class LabelMismatchError(InputError):
    """Sample sets carry different time labels."""


class InfiniteMomentError(InputError):
    """Requested moment order is not finite for the noise."""


# ------------------------------------------------------------------------------------------------ #
#                                      NUMERICAL ERRORS                                            #
# ------------------------------------------------------------------------------------------------ #
class ResourceBudgetError(LevykinError, MemoryError):
    """Expected jump count exceeds the configured memory budget."""


class QuadratureError(LevykinError, ArithmeticError):
    """Adaptive quadrature failed to converge."""

    def __init__(self, msg: str, residual: float) -> None:
        super().__init__(msg)
        self.residual = residual


class StepUnderflowError(LevykinError, ArithmeticError):
    """Drift substep shrank below the minimum step. Carries the last valid state."""

    def __init__(self, msg: str, time: float, state: Optional[np.ndarray] = None) -> None:
        super().__init__(msg)
        self.time = time
        self.state = state


# ------------------------------------------------------------------------------------------------ #
#                                      THEORY ERRORS                                               #
# ------------------------------------------------------------------------------------------------ #
class ClassificationError(LevykinError):
    """No limit-triplet case applies to the triplet."""


class DegenerateLimitError(ClassificationError):
    """The deterministic limit has zero drift."""


class NoEstimateError(LevykinError):
    """No moment-exponent branch covers the query."""


class ErgodicityError(LevykinError):
    """Drift does not satisfy the ergodicity margin."""


class ExplosionFractionError(LevykinError):
    """Too many paths were absorbed at the explosion radius."""

    def __init__(self, msg: str, fraction: float) -> None:
        super().__init__(msg)
        self.fraction = fraction


# ------------------------------------------------------------------------------------------------ #
class ConfigError(LevykinError, ValueError):
    """Experiment configuration could not be parsed or validated."""

    def __init__(self, msg: str, key: Optional[str] = None, line: Optional[int] = None) -> None:
        super().__init__(msg)
        self.key = key
        self.line = line
