#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/convergence/fdd.py                                            #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 10:04:03 am                                                #
# Modified   : Friday October 16th 2026 12:35:18 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Distances between finite-dimensional distributions given as labelled sample sets."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Union

import numpy as np
import pandas as pd
from scipy import stats
from scipy.spatial.distance import cdist

from levykin.data.dataclass import DataClass
from levykin.exceptions import InputError, LabelMismatchError

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
MIN_SAMPLES = 1000
CHUNK = 2048
Samples = Union[pd.DataFrame, Mapping[str, np.ndarray]]


# ------------------------------------------------------------------------------------------------ #
@dataclass
class FddDistance(DataClass):
    """Per-label two-sample KS statistics and the joint energy distance."""

    ks: pd.DataFrame
    energy: float

    @property
    def max_ks(self) -> float:
        return float(self.ks["statistic"].max())


def _as_frame(samples: Samples, name: str) -> pd.DataFrame:
    frame = samples if isinstance(samples, pd.DataFrame) else pd.DataFrame(dict(samples))
    if len(frame) < MIN_SAMPLES:
        msg = f"Sample set {name} has {len(frame)} rows; at least {MIN_SAMPLES} are required."
        logger.error(msg)
        raise InputError(msg)
    return frame


def _mean_distance(x: np.ndarray, y: np.ndarray) -> float:
    """Mean Euclidean distance over all pairs, accumulated over row blocks of x."""
    total = 0.0
    for start in range(0, len(x), CHUNK):
        total += float(cdist(x[start : start + CHUNK], y).sum())
    return total / (len(x) * len(y))


def energy_distance(x: np.ndarray, y: np.ndarray) -> float:
    """sqrt(2 E|X - Y| - E|X - X'| - E|Y - Y'|) for samples of shape (n, d)."""
    x = np.atleast_2d(np.asarray(x, dtype=float).T).T
    y = np.atleast_2d(np.asarray(y, dtype=float).T).T
    if x.shape[1] == 1:
        return float(stats.energy_distance(x[:, 0], y[:, 0]))
    value = 2 * _mean_distance(x, y) - _mean_distance(x, x) - _mean_distance(y, y)
    return float(np.sqrt(max(value, 0.0)))


def fdd_distance(samples_a: Samples, samples_b: Samples) -> FddDistance:
    """KS per time label plus the energy distance of the joint samples.

    Rows are samples, columns are time labels; both sets must carry the same labels.
    """
    a = _as_frame(samples_a, "a")
    b = _as_frame(samples_b, "b")
    if set(a.columns) != set(b.columns):
        msg = f"Time labels differ: {sorted(map(str, a.columns))} vs {sorted(map(str, b.columns))}."
        logger.error(msg)
        raise LabelMismatchError(msg)
    labels = list(a.columns)
    rows: Dict[str, list] = {"label": [], "statistic": [], "pvalue": []}
    for label in labels:
        result = stats.ks_2samp(a[label].to_numpy(), b[label].to_numpy())
        rows["label"].append(label)
        rows["statistic"].append(float(result.statistic))
        rows["pvalue"].append(float(result.pvalue))
    energy = energy_distance(a[labels].to_numpy(), b[labels].to_numpy())
    return FddDistance(ks=pd.DataFrame(rows), energy=energy)
