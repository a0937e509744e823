#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/moment/exponent.py                                            #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 5th 2026 03:48:46 pm                                                 #
# Modified   : Saturday October 10th 2026 10:47:24 am                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Moment growth exponents p with E|V_t|^kappa <= C t^p, and the above-critical thresholds."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from levykin.data.dataclass import DataClass
from levykin.exceptions import InfiniteMomentError, InputError, NoEstimateError
from levykin.kernel.config import KineticConfig, Regime
from levykin.noise.measure import Tempered, Truncated

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
BELOW_CRITICAL = "below-critical"


# ------------------------------------------------------------------------------------------------ #
@dataclass
class ExponentQuery(DataClass):
    """Noise index, drift exponent, moment order and the hypotheses that select a branch."""

    alpha: float
    gamma: float
    kappa: float
    beta: Optional[float] = None
    sign_ok: bool = True
    b_zero: bool = True
    regime: str = Regime.STABLE.value
    alpha0: Optional[float] = None

    def __post_init__(self) -> None:
        regime = Regime(self.regime)
        if regime is Regime.H2:
            if self.alpha0 is None:
                msg = "An H2 query needs the tail-moment index alpha0."
                logger.error(msg)
                raise InputError(msg)
            if not 0 <= self.kappa <= self.alpha0:
                msg = f"kappa = {self.kappa} is outside [0, {self.alpha0}]."
                logger.error(msg)
                raise InfiniteMomentError(msg)
        elif not 0 <= self.kappa < self.alpha:
            msg = f"kappa = {self.kappa} is outside [0, {self.alpha})."
            logger.error(msg)
            raise InfiniteMomentError(msg)

    @property
    def critical_beta(self) -> float:
        return 1.0 + (self.gamma - 1.0) / self.alpha

    @classmethod
    def from_config(cls, cfg: KineticConfig, kappa: float) -> ExponentQuery:
        measure = cfg.triplet.measure
        alpha0 = measure.alpha0 if isinstance(measure, (Truncated, Tempered)) else None
        return cls(
            alpha=cfg.alpha,
            gamma=cfg.gamma,
            kappa=kappa,
            beta=cfg.beta,
            sign_ok=cfg.drift.sign_ok,
            b_zero=cfg.b_zero,
            regime=cfg.regime.value,
            alpha0=alpha0,
        )


@dataclass
class ExponentResult(DataClass):
    """Exponent p of the matching branch with theta, p(gamma) and beta* = 1 + p(gamma) - theta."""

    p: float
    branch: str
    theta: float
    p_gamma: Optional[float] = None
    beta_star: Optional[float] = None


# ------------------------------------------------------------------------------------------------ #
def _no_estimate(what: str) -> NoEstimateError:
    msg = f"No moment estimate is known for {what}."
    logger.error(msg)
    return NoEstimateError(msg)


def _stable_moment(q: ExponentQuery) -> tuple:
    a, g, k = q.alpha, q.gamma, q.kappa
    if a < 1:
        return k / a, "alpha<1"
    if a == 1 or a >= 2:
        raise _no_estimate(f"stable index {a}")
    if g < 1 and q.beta is not None and q.beta < q.critical_beta:
        if k == 1:
            return (1.0 - q.beta) / (1.0 - g), BELOW_CRITICAL
        raise _no_estimate(f"kappa = {k} below the critical line")
    if 0 <= g < 1 and k <= 1:
        return k / a, "gamma<1,kappa<=1"
    if 0 <= g < 1 and q.sign_ok:
        return 3 * k / (2 * a), "gamma<1,kappa>1,sign"
    if g >= 1 and q.sign_ok and k <= 1:
        return k, "gamma>=1,kappa<=1,sign"
    if g >= 1 and q.sign_ok:
        return k / 2 + k / a, "gamma>=1,kappa>1,sign"
    raise _no_estimate(f"stable noise with {q}")


def _h1_moment(q: ExponentQuery) -> tuple:
    a, g, k = q.alpha, q.gamma, q.kappa
    if a < 1:
        return k / a, "H1,alpha<1"
    if a == 1 or a >= 2:
        raise _no_estimate(f"H1 index {a}")
    if 0 <= g < 1 and k <= 1:
        return (k / a, "H1,gamma<1,kappa<=1,b=0") if q.b_zero else (k, "H1,gamma<1,kappa<=1")
    if q.sign_ok and k <= 1:
        return k, "H1,kappa<=1,sign"
    if q.sign_ok and 0 <= g < 1 and q.b_zero:
        return 3 * k / (2 * a), "H1,gamma<1,kappa>1,b=0,sign"
    if q.sign_ok:
        return k / a + k / 2, "H1,kappa>1,sign"
    raise _no_estimate(f"H1 noise with {q}")


def _h2_moment(q: ExponentQuery) -> tuple:
    g, k, a0 = q.gamma, q.kappa, q.alpha0
    if 0 <= g < 1 and k <= 1:
        return k, "H2,gamma<1,kappa<=1"
    if q.sign_ok and k <= 1:
        return k, "H2,kappa<=1,sign"
    if q.sign_ok:
        return k / a0 + k / 2, "H2,kappa>1,sign"
    raise _no_estimate(f"H2 noise with {q}")


def rate_exponent(regime: str, alpha: float, b_zero: bool = True) -> float:
    """theta with v_eps = eps^theta for the regime."""
    regime = Regime(regime)
    if regime is Regime.STABLE:
        return 1.0 / alpha
    if regime is Regime.H1 and (alpha < 1 or (alpha > 1 and b_zero)):
        return 1.0 / alpha
    return 1.0


def limit_exponent(
    alpha: float,
    gamma: float,
    regime: str = Regime.STABLE.value,
    sign_ok: bool = True,
    b_zero: bool = True,
    alpha0: Optional[float] = None,
) -> tuple:
    """p(gamma) of the above-critical limit theorem for the regime, with its branch label."""
    regime = Regime(regime)
    g = gamma
    if g < 0:
        raise _no_estimate(f"gamma = {g}")
    if regime is Regime.STABLE:
        if g < 1:
            return g / alpha, "gamma<1"
        if g == 1 and alpha > 1:
            return 1.0, "gamma=1"
        if 1 < g < alpha:
            return g / alpha + g / 2, "1<gamma<alpha"
        raise _no_estimate(f"gamma = {g} with stable index {alpha}")
    if regime is Regime.H1:
        if alpha < 1:
            return g / alpha, "H1,alpha<1"
        if g < 1:
            return (g / alpha, "H1,gamma<1,b=0") if b_zero else (g, "H1,gamma<1")
        if g == 1:
            return g, "H1,gamma=1"
        if g < alpha:
            return g / alpha + g / 2, "H1,1<gamma<alpha"
        raise _no_estimate(f"gamma = {g} with H1 index {alpha}")
    if alpha0 is None:
        raise _no_estimate("an H2 measure without alpha0")
    if g < 1:
        if sign_ok:
            return min(g, g / alpha0 + g / 2), "H2,gamma<1,sign"
        return g, "H2,gamma<1"
    if g <= alpha0 and sign_ok:
        return g / alpha0 + g / 2, "H2,1<=gamma<=alpha0,sign"
    raise _no_estimate(f"gamma = {g} with H2 index {alpha0}")


def theoretical_exponent(q: ExponentQuery) -> ExponentResult:
    """Exponent of the matching branch, with theta, p(gamma) and beta* when they exist."""
    regime = Regime(q.regime)
    if regime is Regime.STABLE:
        p, branch = _stable_moment(q)
    elif regime is Regime.H1:
        p, branch = _h1_moment(q)
    else:
        p, branch = _h2_moment(q)
    theta = rate_exponent(q.regime, q.alpha, q.b_zero)
    try:
        p_gamma, _ = limit_exponent(q.alpha, q.gamma, q.regime, q.sign_ok, q.b_zero, q.alpha0)
    except NoEstimateError:
        p_gamma = None
    beta_star = None if p_gamma is None else 1.0 + p_gamma - theta
    return ExponentResult(p=p, branch=branch, theta=theta, p_gamma=p_gamma, beta_star=beta_star)


def exponent_table(queries: Iterable[ExponentQuery]) -> pd.DataFrame:
    """Branch-labelled table; queries without an estimate appear with branch 'none'."""
    rows = []
    for q in queries:
        row = {
            "regime": q.regime,
            "alpha": q.alpha,
            "alpha0": q.alpha0,
            "gamma": q.gamma,
            "kappa": q.kappa,
            "beta": q.beta,
            "sign_ok": q.sign_ok,
            "b_zero": q.b_zero,
        }
        try:
            result = theoretical_exponent(q)
            row.update(result.as_dict())
        except NoEstimateError:
            missing = dict.fromkeys(["p", "theta", "p_gamma", "beta_star"], np.nan)
            row.update(missing, branch="none")
        rows.append(row)
    return pd.DataFrame(rows)
