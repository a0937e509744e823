#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/kernel/drift.py                                                            #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 4th 2026 11:17:21 am                                                 #
# Modified   : Friday October 9th 2026 09:00:07 am                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Drift fields F of the kinetic equation."""
from __future__ import annotations

import logging
from abc import abstractmethod
from dataclasses import dataclass
from typing import ClassVar, Dict, Type, Union

import numpy as np

from levykin.data.dataclass import DataClass
from levykin.exceptions import InputError, SingularDriftError

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
@dataclass
class DriftSpec(DataClass):
    """Base class for drift fields."""

    kind: ClassVar[str] = "abstract"

    @abstractmethod
    def __call__(self, v: np.ndarray) -> np.ndarray:
        """F evaluated elementwise."""

    @property
    @abstractmethod
    def gamma(self) -> float:
        """Homogeneity exponent (growth exponent of the dominating bound)."""

    @property
    @abstractmethod
    def sign_ok(self) -> bool:
        """v F(v) >= 0 for every v."""

    @property
    def nondecreasing(self) -> bool:
        return False

    @property
    def is_zero(self) -> bool:
        return False

    def bound(self, v: np.ndarray) -> np.ndarray:
        """G with |F| <= G."""
        return np.abs(self(v))

    def as_dict(self) -> dict:
        d = {"kind": self.kind}
        d.update(super().as_dict())
        return d


# ------------------------------------------------------------------------------------------------ #
@dataclass
class Homogeneous(DriftSpec):
    """F(v) = F(sgn v) |v|^gamma, with sgn(0) = 0."""

    exponent: float = 1.0
    F1: float = 1.0
    Fm1: float = -1.0
    kind: ClassVar[str] = "homogeneous"

    def __call__(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if self.exponent < 0 and np.any(v == 0):
            msg = f"Drift with exponent {self.exponent} < 0 is singular at v = 0."
            logger.error(msg)
            raise SingularDriftError(msg)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            magnitude = np.abs(v) ** self.exponent
            return np.where(v > 0, self.F1 * magnitude, np.where(v < 0, self.Fm1 * magnitude, 0.0))

    @property
    def gamma(self) -> float:
        return self.exponent

    @property
    def sign_ok(self) -> bool:
        return self.F1 >= 0 and self.Fm1 <= 0

    @property
    def nondecreasing(self) -> bool:
        return self.sign_ok and self.exponent >= 0

    @property
    def is_zero(self) -> bool:
        return self.F1 == 0 and self.Fm1 == 0

    @property
    def rho(self) -> float:
        return self.F1


@dataclass
class BoundedExample(DriftSpec):
    """F(v) = v / (1 + v^2), dominated by the constant 1/2."""

    kind: ClassVar[str] = "bounded"

    def __call__(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        return v / (1.0 + v * v)

    @property
    def gamma(self) -> float:
        return 0.0

    @property
    def sign_ok(self) -> bool:
        return True

    def bound(self, v: np.ndarray) -> np.ndarray:
        return np.full_like(np.asarray(v, dtype=float), 0.5)


# ------------------------------------------------------------------------------------------------ #
def power(rho: float, gamma: float) -> Homogeneous:
    """rho sgn(v) |v|^gamma."""
    return Homogeneous(exponent=gamma, F1=rho, Fm1=-rho)


def linear(rho: float) -> Homogeneous:
    return power(rho, 1.0)


def zero() -> Homogeneous:
    return Homogeneous(exponent=1.0, F1=0.0, Fm1=0.0)


def drift_eval(drift: DriftSpec, v: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """F(v); scalars in, scalars out."""
    value = drift(v)
    return float(value) if np.ndim(value) == 0 else value


DRIFTS: Dict[str, Type[DriftSpec]] = {cls.kind: cls for cls in (Homogeneous, BoundedExample)}


def drift_from_dict(d: dict) -> DriftSpec:
    d = dict(d)
    kind = d.pop("kind", "homogeneous")
    if kind == "power":
        return power(float(d.pop("rho", 1.0)), float(d.pop("gamma", 1.0)))
    try:
        cls = DRIFTS[kind]
    except KeyError:
        msg = f"Unknown drift kind {kind!r}; expected one of {sorted(DRIFTS) + ['power']}."
        logger.error(msg)
        raise InputError(msg)
    if "gamma" in d:
        d["exponent"] = d.pop("gamma")
    return cls(**d)
