#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/experiment/branches.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 03:37:56 pm                                                 #
# Modified   : Sunday October 11th 2026 04:07:46 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Limit exponents and critical lines over a sweep of (alpha, gamma, beta)."""
from __future__ import annotations

import itertools
import logging
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from levykin.exceptions import NoEstimateError
from levykin.kernel.config import Regime
from levykin.quantitative.moment.exponent import limit_exponent, rate_exponent

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
BRANCH_COLUMNS = [
    "regime",
    "alpha",
    "gamma",
    "beta",
    "branch",
    "p",
    "theta",
    "beta_star",
    "critical_beta",
    "converges",
]
DEFAULT_ALPHAS = (0.5, 1.5)
DEFAULT_GAMMAS = (0.0, 0.3, 0.5, 1.0, 1.2)
DEFAULT_BETAS = (2.0,)


# ------------------------------------------------------------------------------------------------ #
def list_branches(
    alphas: Sequence[float] = DEFAULT_ALPHAS,
    gammas: Sequence[float] = DEFAULT_GAMMAS,
    betas: Sequence[float] = DEFAULT_BETAS,
    regime: str = Regime.STABLE.value,
    sign_ok: bool = True,
    b_zero: bool = True,
    alpha0: Optional[float] = None,
) -> pd.DataFrame:
    """One row per (alpha, gamma, beta) with p(gamma), theta and beta* = 1 + p(gamma) - theta.

    ``converges`` tells whether beta lies above beta*, where the rescaled velocity approaches
    the rescaled noise. Combinations without a known p(gamma) have branch 'none'.
    """
    rows = []
    for alpha, gamma, beta in itertools.product(alphas, gammas, betas):
        theta = rate_exponent(regime, alpha, b_zero)
        row = {
            "regime": regime,
            "alpha": alpha,
            "gamma": gamma,
            "beta": beta,
            "theta": theta,
            "critical_beta": 1.0 + (gamma - 1.0) / alpha,
        }
        try:
            p, branch = limit_exponent(alpha, gamma, regime, sign_ok, b_zero, alpha0)
        except NoEstimateError:
            row.update(branch="none", p=np.nan, beta_star=np.nan, converges=False)
        else:
            beta_star = 1.0 + p - theta
            row.update(branch=branch, p=p, beta_star=beta_star, converges=bool(beta > beta_star))
        rows.append(row)
    logger.debug(f"Listed {len(rows)} exponent branches for the {regime} regime.")
    return pd.DataFrame(rows, columns=BRANCH_COLUMNS)
