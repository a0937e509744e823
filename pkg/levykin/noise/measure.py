#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/noise/measure.py                                                           #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 09:27:30 am                                                 #
# Modified   : Monday October 12th 2026 03:28:24 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Declarative Lévy measures.

Every measure is given by a density on the real line without the origin (or by atoms) and can
integrate functions against itself, report the tail hypotheses it satisfies, and sample jump
sizes from its restriction to |z| >= delta. The truncation function is fixed package wide as
h(z) = -1 v (z ^ 1).
"""
from __future__ import annotations

import logging
from abc import abstractmethod
from dataclasses import dataclass, field
from typing import Callable, ClassVar, Dict, Optional, Sequence, Tuple, Type

import numpy as np
from scipy import integrate

from levykin.data.dataclass import DataClass
from levykin.exceptions import InputError, QuadratureError

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
QUAD_RTOL = 1e-8
QUAD_ATOL = 1e-14
QUAD_ACCEPT = 1e-6
QUAD_LIMIT = 400
H2_RTOL = 1e-6


# ------------------------------------------------------------------------------------------------ #
def truncation(z: np.ndarray) -> np.ndarray:
    """h(z) = -1 v (z ^ 1)."""
    return np.clip(z, -1.0, 1.0)


def _quad_log(
    func: Callable[[float], float], lower: float, upper: float, rtol: float = QUAD_RTOL
) -> Tuple[float, float]:
    """Integrates func over (lower, upper) on the positive half-line after z = exp(u)."""
    ua = -np.inf if lower == 0 else np.log(lower)
    ub = np.inf if np.isinf(upper) else np.log(upper)

    def integrand(u: float) -> float:
        with np.errstate(over="ignore", invalid="ignore"):
            z = np.exp(u)
            value = func(z) * z
        return float(value) if np.isfinite(value) else 0.0

    out = integrate.quad(
        integrand, ua, ub, epsrel=rtol, epsabs=QUAD_ATOL, limit=QUAD_LIMIT, full_output=1
    )
    value, abserr = out[0], out[1]
    if len(out) > 3 and abserr > QUAD_ACCEPT * max(1.0, abs(value)):
        msg = (
            f"Quadrature over ({lower}, {upper}) did not converge: value {value}, "
            f"residual estimate {abserr}."
        )
        logger.error(msg)
        raise QuadratureError(msg, residual=abserr)
    return value, abserr


# ------------------------------------------------------------------------------------------------ #
#                                        LEVY MEASURES                                             #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class LevyMeasureSpec(DataClass):
    """Base class for Lévy measures."""

    kind: ClassVar[str] = "abstract"

    @abstractmethod
    def density(self, z: np.ndarray) -> np.ndarray:
        """Density of the measure at z != 0."""

    @property
    def alpha(self) -> Optional[float]:
        """Index governing the small jumps, None for finite measures."""
        return None

    @property
    def support_radius(self) -> float:
        return np.inf

    @property
    def breaks(self) -> Tuple[float, ...]:
        """Positive abscissae where the density is not smooth."""
        return ()

    @property
    def satisfies_h1(self) -> bool:
        return False

    @property
    def satisfies_hg(self) -> bool:
        return False

    def satisfies_h2(self, alpha0: float) -> bool:
        return False

    @property
    def is_symmetric(self) -> bool:
        return False

    @property
    def is_zero(self) -> bool:
        return False

    # -------------------------------------------------------------------------------------------- #
    def integrate(
        self,
        func: Callable[[np.ndarray], np.ndarray],
        lower: float = 0.0,
        upper: float = np.inf,
        points: Sequence[float] = (),
        rtol: float = QUAD_RTOL,
    ) -> float:
        """Integral of func over {lower <= |z| < upper} against the measure."""
        upper = min(upper, self.support_radius)
        if upper <= lower:
            return 0.0
        cuts = sorted({float(p) for p in (1.0, *self.breaks, *points) if lower < p < upper})
        edges = [lower] + cuts + [upper]
        total = 0.0
        for sign in (1.0, -1.0):

            def side(z: float, sign: float = sign) -> float:
                return func(sign * z) * self.density(sign * z)

            for a, b in zip(edges[:-1], edges[1:]):
                total += _quad_log(side, a, b, rtol=rtol)[0]
        return float(total)

    def mass(self, delta: float) -> float:
        """nu(|z| >= delta)."""
        return self.integrate(np.ones_like, lower=delta)

    def small_jump_variance(self, delta: float) -> float:
        """Integral of z^2 over |z| < delta."""
        return self.integrate(np.square, lower=0.0, upper=delta)

    def tail_moment(self, order: float, rtol: float = QUAD_RTOL) -> float:
        """Integral of |z|^order over |z| >= 1."""
        return self.integrate(lambda z: np.abs(z) ** order, lower=1.0, rtol=rtol)

    @abstractmethod
    def sample_sizes(self, delta: float, n: int, rng: np.random.Generator) -> np.ndarray:
        """n jump sizes from the normalised restriction of the measure to |z| >= delta."""

    def canonical(self) -> str:
        body = ", ".join(f"{k}={v!r}" for k, v in self._canonical_items())
        return f"{self.kind}({body})"

    def _canonical_items(self):
        for k, v in self.as_dict().items():
            yield k, v

    def as_dict(self) -> dict:
        d = {"kind": self.kind}
        d.update(super().as_dict())
        return d


# ------------------------------------------------------------------------------------------------ #
#                                        ZERO MEASURE                                              #
# ------------------------------------------------------------------------------------------------ #
@dataclass(repr=False)
class ZeroMeasure(LevyMeasureSpec):
    """The null measure: Brownian motion with drift."""

    kind: ClassVar[str] = "zero"

    def density(self, z: np.ndarray) -> np.ndarray:
        return np.zeros_like(np.asarray(z, dtype=float))

    @property
    def is_zero(self) -> bool:
        return True

    @property
    def is_symmetric(self) -> bool:
        return True

    def satisfies_h2(self, alpha0: float) -> bool:
        return alpha0 > 1

    def integrate(self, func, lower=0.0, upper=np.inf, points=(), rtol=QUAD_RTOL) -> float:
        return 0.0

    def sample_sizes(self, delta: float, n: int, rng: np.random.Generator) -> np.ndarray:
        return np.zeros(0)


# ------------------------------------------------------------------------------------------------ #
#                                         POWER LAW                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass(repr=False)
class PowerLaw(LevyMeasureSpec):
    """nu(dz) = g(z) |z|^{-1-alpha} dz with g(z) = c_sgn + k_sgn exp(-decay |z|).

    The constants c_plus and c_minus are the limits of g at plus and minus infinity. With
    k_plus = k_minus = 0 this is the Lévy measure of a strictly alpha-stable process.
    """

    alpha_index: float = 1.5
    c_plus: float = 1.0
    c_minus: float = 1.0
    k_plus: float = 0.0
    k_minus: float = 0.0
    decay: float = 1.0
    kind: ClassVar[str] = "power_law"

    def __post_init__(self) -> None:
        if not 0 < self.alpha_index < 2:
            msg = f"Power-law index must lie in (0, 2), got {self.alpha_index}."
            logger.error(msg)
            raise InputError(msg)
        if self.c_plus < 0 or self.c_minus < 0:
            msg = f"Tail constants must be non-negative, got ({self.c_plus}, {self.c_minus})."
            logger.error(msg)
            raise InputError(msg)
        if self.c_plus + min(self.k_plus, 0) < 0 or self.c_minus + min(self.k_minus, 0) < 0:
            msg = "Density factor g must be non-negative everywhere."
            logger.error(msg)
            raise InputError(msg)
        if self.decay <= 0:
            msg = f"Perturbation decay must be positive, got {self.decay}."
            logger.error(msg)
            raise InputError(msg)
        if self.c_plus + self.c_minus + max(self.k_plus, 0) + max(self.k_minus, 0) == 0:
            msg = "Power-law measure with g = 0 everywhere; use ZeroMeasure instead."
            logger.error(msg)
            raise InputError(msg)

    def g(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        tail = np.exp(-self.decay * np.abs(z))
        return np.where(z > 0, self.c_plus + self.k_plus * tail, self.c_minus + self.k_minus * tail)

    def density(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        with np.errstate(divide="ignore"):
            return self.g(z) * np.abs(z) ** (-1.0 - self.alpha_index)

    @property
    def alpha(self) -> float:
        return self.alpha_index

    @property
    def g_bound(self) -> Tuple[float, float]:
        return (
            self.c_plus + max(self.k_plus, 0.0),
            self.c_minus + max(self.k_minus, 0.0),
        )

    @property
    def satisfies_h1(self) -> bool:
        return self.c_plus > 0 and self.c_minus > 0

    @property
    def satisfies_hg(self) -> bool:
        # |g(z) - g(-z)| z^{-alpha} over z >= 1: the exponential part is always integrable,
        # the constant part |c_plus - c_minus| z^{-alpha} only when alpha > 1.
        return self.c_plus == self.c_minus or self.alpha_index > 1

    def satisfies_h2(self, alpha0: float) -> bool:
        return 1 < alpha0 < self.alpha_index

    @property
    def is_symmetric(self) -> bool:
        return self.c_plus == self.c_minus and self.k_plus == self.k_minus

    @property
    def is_stable(self) -> bool:
        return self.k_plus == 0 and self.k_minus == 0

    def stable_part(self) -> PowerLaw:
        """The measure with g replaced by its limits at infinity."""
        return PowerLaw(alpha_index=self.alpha_index, c_plus=self.c_plus, c_minus=self.c_minus)

    def odd_tail_integral(self, order: float) -> float:
        """Integral over z >= 1 of (g(z) - g(-z)) z^{-1-alpha} (z - 1)^order.

        Only the perturbation contributes when c_plus = c_minus; the closed form of the constant
        part is added otherwise (finite for alpha > order).
        """
        dk = self.k_plus - self.k_minus

        def perturbation(z: float) -> float:
            weight = dk * np.exp(-self.decay * z) * z ** (-1.0 - self.alpha_index)
            return weight * (z - 1.0) ** order

        value = 0.0
        if dk != 0:
            value += integrate.quad(
                perturbation, 1.0, np.inf, epsrel=QUAD_RTOL, limit=QUAD_LIMIT
            )[0]
        dc = self.c_plus - self.c_minus
        if dc != 0:
            value += dc * integrate.quad(
                lambda z: z ** (-1.0 - self.alpha_index) * (z - 1.0) ** order,
                1.0,
                np.inf,
                epsrel=QUAD_RTOL,
                limit=QUAD_LIMIT,
            )[0]
        return float(value)

    def sample_sizes(self, delta: float, n: int, rng: np.random.Generator) -> np.ndarray:
        return _sample_sided(self, delta, n, rng, radius=np.inf, tempering=0.0)


# ------------------------------------------------------------------------------------------------ #
def _sample_sided(
    base: PowerLaw, delta: float, n: int, rng: np.random.Generator, radius: float, tempering: float
) -> np.ndarray:
    """Joint rejection sampler shared by the power-law family.

    A proposal picks a side with probability proportional to the bound of g on that side and a
    magnitude from the (truncated) Pareto law; it is kept with probability
    g(z) exp(-tempering |z|) / bound.
    """
    if n == 0:
        return np.zeros(0)
    a = base.alpha_index
    bound_plus, bound_minus = base.g_bound
    p_plus = bound_plus / (bound_plus + bound_minus)
    ratio = 0.0 if np.isinf(radius) else (delta / radius) ** a
    out = np.empty(0)
    while len(out) < n:
        m = max(64, 2 * (n - len(out)))
        u = rng.random((m, 3))
        sign = np.where(u[:, 0] < p_plus, 1.0, -1.0)
        magnitude = delta * (1.0 - u[:, 1] * (1.0 - ratio)) ** (-1.0 / a)
        z = sign * magnitude
        bound = np.where(sign > 0, bound_plus, bound_minus)
        keep = u[:, 2] * bound < base.g(z) * np.exp(-tempering * magnitude)
        out = np.concatenate([out, z[keep]])
    return out[:n]


# ------------------------------------------------------------------------------------------------ #
#                                         TRUNCATED                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass(repr=False)
class Truncated(LevyMeasureSpec):
    """Power-law measure restricted to |z| <= radius."""

    base: PowerLaw = field(default_factory=PowerLaw)
    radius: float = 10.0
    alpha0: float = 2.0
    kind: ClassVar[str] = "truncated"

    def __post_init__(self) -> None:
        if self.radius <= 0:
            msg = f"Truncation radius must be positive, got {self.radius}."
            logger.error(msg)
            raise InputError(msg)
        self._tail_moment = _declared_tail_moment(self, self.alpha0)

    def density(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        return np.where(np.abs(z) <= self.radius, self.base.density(z), 0.0)

    @property
    def alpha(self) -> float:
        return self.base.alpha

    @property
    def support_radius(self) -> float:
        return self.radius

    @property
    def breaks(self) -> Tuple[float, ...]:
        return (self.radius,)

    def satisfies_h2(self, alpha0: float) -> bool:
        return alpha0 > 1 and np.isfinite(self._tail_moment)

    @property
    def is_symmetric(self) -> bool:
        return self.base.is_symmetric

    def sample_sizes(self, delta: float, n: int, rng: np.random.Generator) -> np.ndarray:
        if delta >= self.radius:
            return np.zeros(0)
        return _sample_sided(self.base, delta, n, rng, radius=self.radius, tempering=0.0)


# ------------------------------------------------------------------------------------------------ #
#                                          TEMPERED                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass(repr=False)
class Tempered(LevyMeasureSpec):
    """Power-law measure damped by exp(-rate |z|)."""

    base: PowerLaw = field(default_factory=PowerLaw)
    rate: float = 1.0
    alpha0: float = 2.0
    kind: ClassVar[str] = "tempered"

    def __post_init__(self) -> None:
        if self.rate <= 0:
            msg = f"Tempering rate must be positive, got {self.rate}."
            logger.error(msg)
            raise InputError(msg)
        self._tail_moment = _declared_tail_moment(self, self.alpha0)

    def density(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        return self.base.density(z) * np.exp(-self.rate * np.abs(z))

    @property
    def alpha(self) -> float:
        return self.base.alpha

    def satisfies_h2(self, alpha0: float) -> bool:
        return alpha0 > 1 and np.isfinite(self._tail_moment)

    @property
    def is_symmetric(self) -> bool:
        return self.base.is_symmetric

    def sample_sizes(self, delta: float, n: int, rng: np.random.Generator) -> np.ndarray:
        return _sample_sided(self.base, delta, n, rng, radius=np.inf, tempering=self.rate)


def _declared_tail_moment(measure: LevyMeasureSpec, alpha0: float) -> float:
    if alpha0 <= 1:
        msg = f"Declared tail-moment index must exceed 1, got {alpha0}."
        logger.error(msg)
        raise InputError(msg)
    value = measure.tail_moment(alpha0, rtol=H2_RTOL)
    logger.debug(f"Tail moment of order {alpha0} for {measure.kind}: {value}")
    return value


# ------------------------------------------------------------------------------------------------ #
#                                          TABULATED                                               #
# ------------------------------------------------------------------------------------------------ #
@dataclass(repr=False)
class Tabulated(LevyMeasureSpec):
    """Finite measure given by atoms (location, weight)."""

    atoms: Tuple[Tuple[float, float], ...] = ((1.0, 1.0), (-1.0, 1.0))
    kind: ClassVar[str] = "tabulated"

    def __post_init__(self) -> None:
        self.atoms = tuple((float(z), float(w)) for z, w in self.atoms)
        if any(z == 0 or w < 0 for z, w in self.atoms):
            msg = "Atoms must sit away from the origin and carry non-negative weights."
            logger.error(msg)
            raise InputError(msg)

    @property
    def locations(self) -> np.ndarray:
        return np.array([z for z, _ in self.atoms], dtype=float)

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for _, w in self.atoms], dtype=float)

    def density(self, z: np.ndarray) -> np.ndarray:
        return np.zeros_like(np.asarray(z, dtype=float))

    def integrate(self, func, lower=0.0, upper=np.inf, points=(), rtol=QUAD_RTOL) -> float:
        z = self.locations
        keep = (np.abs(z) >= lower) & (np.abs(z) < upper)
        if not keep.any():
            return 0.0
        return float(np.sum(func(z[keep]) * self.weights[keep]))

    def satisfies_h2(self, alpha0: float) -> bool:
        return alpha0 > 1

    @property
    def is_symmetric(self) -> bool:
        mirrored = sorted((-z, w) for z, w in self.atoms)
        return mirrored == sorted(self.atoms)

    def sample_sizes(self, delta: float, n: int, rng: np.random.Generator) -> np.ndarray:
        z = self.locations
        w = np.where(np.abs(z) >= delta, self.weights, 0.0)
        if n == 0 or w.sum() == 0:
            return np.zeros(0)
        return rng.choice(z, size=n, p=w / w.sum())

    def _canonical_items(self):
        yield "atoms", [list(a) for a in self.atoms]


# ------------------------------------------------------------------------------------------------ #
#                                          RESCALED                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass(repr=False)
class Rescaled(LevyMeasureSpec):
    """Image measure B -> nu({z : scale z in B}) / eps of the jumps of scale * L_{t/eps}."""

    base: LevyMeasureSpec = field(default_factory=ZeroMeasure)
    eps: float = 1.0
    scale: float = 1.0
    kind: ClassVar[str] = "rescaled"

    def __post_init__(self) -> None:
        if self.eps <= 0 or self.scale <= 0:
            msg = f"Rescaling needs eps > 0 and scale > 0, got ({self.eps}, {self.scale})."
            logger.error(msg)
            raise InputError(msg)
        if isinstance(self.base, Rescaled):
            self.eps = self.base.eps * self.eps
            self.scale = self.base.scale * self.scale
            self.base = self.base.base

    def density(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        return self.base.density(z / self.scale) / (self.eps * self.scale)

    @property
    def alpha(self) -> Optional[float]:
        return self.base.alpha

    @property
    def support_radius(self) -> float:
        return self.base.support_radius * self.scale

    @property
    def breaks(self) -> Tuple[float, ...]:
        return tuple(b * self.scale for b in self.base.breaks)

    @property
    def is_symmetric(self) -> bool:
        return self.base.is_symmetric

    @property
    def is_zero(self) -> bool:
        return self.base.is_zero

    def integrate(self, func, lower=0.0, upper=np.inf, points=(), rtol=QUAD_RTOL) -> float:
        scale = self.scale

        def pulled_back(y: np.ndarray) -> np.ndarray:
            return func(scale * y)

        value = self.base.integrate(
            pulled_back,
            lower=lower / scale,
            upper=upper / scale,
            points=tuple(p / scale for p in (1.0, *points)),
            rtol=rtol,
        )
        return value / self.eps

    def sample_sizes(self, delta: float, n: int, rng: np.random.Generator) -> np.ndarray:
        return self.scale * self.base.sample_sizes(delta / self.scale, n, rng)


# ------------------------------------------------------------------------------------------------ #
#                                      SERIALISATION                                               #
# ------------------------------------------------------------------------------------------------ #
MEASURES: Dict[str, Type[LevyMeasureSpec]] = {
    cls.kind: cls for cls in (ZeroMeasure, PowerLaw, Truncated, Tempered, Tabulated, Rescaled)
}


def measure_from_dict(d: Optional[dict]) -> LevyMeasureSpec:
    """Builds a measure from its ``as_dict`` form or from an experiment config section."""
    if d is None:
        return ZeroMeasure()
    d = dict(d)
    kind = d.pop("kind", None)
    try:
        cls = MEASURES[kind]
    except KeyError:
        msg = f"Unknown Lévy measure kind {kind!r}; expected one of {sorted(MEASURES)}."
        logger.error(msg)
        raise InputError(msg)
    if "base" in d:
        d["base"] = measure_from_dict(d["base"])
    if "atoms" in d:
        d["atoms"] = tuple(tuple(a) for a in d["atoms"])
    if "alpha" in d and cls is PowerLaw:
        d["alpha_index"] = d.pop("alpha")
    try:
        return cls(**d)
    except TypeError as e:
        msg = f"Invalid parameters for Lévy measure {kind!r}: {e}"
        logger.error(msg)
        raise InputError(msg) from e
