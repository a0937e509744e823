#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/moment/fit.py                                                 #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 1st 2026 12:23:53 pm                                               #
# Modified   : Tuesday October 6th 2026 07:31:33 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Log-log least squares fits of growth and decay exponents."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np
import pandas as pd
import statsmodels.api as sm
from statsmodels.stats.stattools import durbin_watson

from levykin.data.dataclass import DataClass
from levykin.exceptions import InputError
from levykin.kernel.moments import MomentSeries

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
MIN_POINTS = 5
DW_THRESHOLD = 1.0
RESIDUAL_ATOL = 1e-10


# ------------------------------------------------------------------------------------------------ #
@dataclass
class SlopeFit(DataClass):
    """OLS of log y on log t over a window.

    ``structured`` flags positively autocorrelated residuals (Durbin-Watson below 1), the sign of
    a curved log-log profile that a single power does not describe.
    """

    slope: float
    intercept: float
    stderr: float
    window: Tuple[float, float]
    n_points: int
    durbin_watson: float
    structured: bool

    def predict(self, t: np.ndarray) -> np.ndarray:
        return np.exp(self.intercept) * np.asarray(t, dtype=float) ** self.slope


def fit_power_law(
    t: np.ndarray, y: np.ndarray, window: Optional[Tuple[float, float]] = None
) -> SlopeFit:
    """Fits y ~ C t^slope on the points with t inside ``window`` (default: all)."""
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    lo, hi = (t.min(), t.max()) if window is None else window
    inside = (t >= lo * (1 - 1e-12)) & (t <= hi * (1 + 1e-12))
    t, y = t[inside], y[inside]
    if len(t) < MIN_POINTS:
        msg = f"A slope fit needs at least {MIN_POINTS} points in [{lo}, {hi}], got {len(t)}."
        logger.error(msg)
        raise InputError(msg)
    if np.any(y <= 0) or not np.all(np.isfinite(y)):
        msg = f"Values in [{lo}, {hi}] must be positive and finite for a log-log fit."
        logger.error(msg)
        raise InputError(msg)

    x = sm.add_constant(np.log(t))
    model = sm.OLS(np.log(y), x).fit()
    residuals = model.resid
    if np.max(np.abs(residuals)) <= RESIDUAL_ATOL:
        dw, structured = np.nan, False
    else:
        dw = float(durbin_watson(residuals))
        structured = dw < DW_THRESHOLD
    if structured:
        logger.warning(f"Residuals of the log-log fit show structure (Durbin-Watson {dw:.3f}).")
    return SlopeFit(
        slope=float(model.params[1]),
        intercept=float(model.params[0]),
        stderr=float(model.bse[1]),
        window=(float(lo), float(hi)),
        n_points=len(t),
        durbin_watson=dw,
        structured=structured,
    )


def fit_growth_exponent(
    series: Union[MomentSeries, pd.DataFrame], window: Optional[Tuple[float, float]] = None
) -> SlopeFit:
    """Growth exponent of a moment trajectory. The default window is the last decade of times."""
    frame = series.frame if isinstance(series, MomentSeries) else series
    t = frame["time"].to_numpy(dtype=float)
    y = frame["estimate"].to_numpy(dtype=float)
    if window is None:
        window = (t.max() / 10.0, t.max())
    return fit_power_law(t, y, window)
