#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/visual/seaborn/charts.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 1st 2026 05:46:46 pm                                               #
# Modified   : Saturday October 3rd 2026 08:46:07 am                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Report charts."""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np
import pandas as pd
from dependency_injector.wiring import Provide, inject

from levykin.container import LevykinContainer
from levykin.visual.base import Visual
from levykin.visual.seaborn.plot import SeabornVisualizer


# ------------------------------------------------------------------------------------------------ #
class LogLogChart(Visual):
    """Estimates against a scale parameter on log-log axes, with an optional reference power."""

    @inject
    def __init__(
        self,
        data: pd.DataFrame,
        x: str,
        y: str,
        title: Optional[str] = None,
        reference_slope: Optional[float] = None,
        visualizer: SeabornVisualizer = Provide[LevykinContainer.visualizer.seaborn],
    ) -> None:
        self._visualizer = visualizer
        self._data = data
        self._x = x
        self._y = y
        self._title = title
        self._reference_slope = reference_slope
        self._ax = None

    def plot(self) -> None:
        self._ax = self._visualizer.lineplot(
            data=self._data, x=self._x, y=self._y, title=self._title, loglog=True
        )
        if self._reference_slope is not None:
            x = self._data[self._x].to_numpy(dtype=float)
            y = self._data[self._y].to_numpy(dtype=float)
            # Anchored at the first point.
            reference = y[0] * (x / x[0]) ** self._reference_slope
            self._visualizer.reference(
                self._ax, x, reference, label=f"slope {self._reference_slope:.4g}"
            )

    def save(self, filepath: str) -> None:
        if self._ax is None:
            self.plot()
        self._visualizer.save(self._ax, filepath)


# ------------------------------------------------------------------------------------------------ #
class EcdfChart(Visual):
    """Empirical distribution functions of several labelled samples."""

    @inject
    def __init__(
        self,
        samples: Sequence[np.ndarray],
        labels: Sequence[str],
        title: Optional[str] = None,
        visualizer: SeabornVisualizer = Provide[LevykinContainer.visualizer.seaborn],
    ) -> None:
        self._visualizer = visualizer
        self._data = pd.concat(
            [
                pd.DataFrame({"value": np.asarray(s), "sample": name})
                for s, name in zip(samples, labels)
            ],
            ignore_index=True,
        )
        self._title = title
        self._ax = None

    def plot(self) -> None:
        self._ax = self._visualizer.ecdfplot(
            data=self._data, x="value", hue="sample", title=self._title
        )

    def save(self, filepath: str) -> None:
        if self._ax is None:
            self.plot()
        self._visualizer.save(self._ax, filepath)
