#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/visual/seaborn/plot.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 03:52:50 pm                                                 #
# Modified   : Tuesday October 13th 2026 03:11:48 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Wrapper for the Seaborn plotting functions used by experiment reports."""
from __future__ import annotations

import logging
import os
from typing import Optional

import matplotlib.pyplot as plt
import pandas as pd
import seaborn as sns

from levykin.visual.base import Visualizer
from levykin.visual.seaborn.config import SeabornCanvas


# ------------------------------------------------------------------------------------------------ #
class SeabornVisualizer(Visualizer):
    """Draws line and ECDF charts and saves them as SVG.

    Args:
        canvas (SeabornCanvas): Figure size, style, palette and per-chart defaults.
    """

    def __init__(self, canvas: SeabornCanvas):
        super().__init__(canvas)
        self._canvas = canvas
        self._logger = logging.getLogger(f"{self.__class__.__name__}")
        sns.set_style(style=self._canvas.style)
        sns.set_palette(palette=self._canvas.palette)

    def lineplot(
        self,
        data: pd.DataFrame,
        x: str,
        y: str,
        hue: Optional[str] = None,
        title: Optional[str] = None,
        loglog: bool = False,
        ax: Optional[plt.Axes] = None,
        **kwargs,
    ) -> plt.Axes:
        """Draws y against x, optionally on log-log axes.

        Args:
            data (pd.DataFrame): Long-form table.
            x,y (str): Keys in data.
            hue (str): Grouping variable, one line per group. Optional.
            title (str): Title for the plot. Optional.
            loglog (bool): Logarithmic x and y axes.
            ax (plt.Axes): Axes to draw on. A new figure is created if omitted.
        """
        if ax is None:
            _, ax = self._canvas.get_figaxes()
        config = self._canvas.lineplot_config
        sns.lineplot(
            data=data,
            x=x,
            y=y,
            hue=hue,
            ax=ax,
            color=self._canvas.colors.estimate if hue is None else None,
            marker="o" if config.markers and hue is None else None,
            sort=config.sort,
            legend=config.legend if hue is not None else False,
            errorbar=None,
            **kwargs,
        )
        if loglog:
            ax.set_xscale("log")
            ax.set_yscale("log")
        if title is not None:
            ax.set_title(title, fontsize=self._canvas.fontsize_title)
        return ax

    def reference(self, ax: plt.Axes, x, y, label: Optional[str] = None) -> plt.Axes:
        """Overlays a theoretical curve."""
        ax.plot(x, y, linestyle="--", color=self._canvas.colors.reference, label=label)
        if label is not None:
            ax.legend(**self._canvas.legend_config.as_dict())
        return ax

    def ecdfplot(
        self,
        data: pd.DataFrame,
        x: str,
        hue: Optional[str] = None,
        title: Optional[str] = None,
        ax: Optional[plt.Axes] = None,
        **kwargs,
    ) -> plt.Axes:
        """Plots empirical cumulative distributions, one per hue group.

        Args:
            data (pd.DataFrame): Long-form table.
            x (str): Key in data of the sample values.
            hue (str): Grouping variable. Optional.
            title (str): Title for the plot. Optional.
            ax (plt.Axes): Axes to draw on. A new figure is created if omitted.
        """
        if ax is None:
            _, ax = self._canvas.get_figaxes()
        config = self._canvas.ecdfplot_config
        sns.ecdfplot(
            data=data,
            x=x,
            hue=hue,
            ax=ax,
            stat=config.stat,
            complementary=config.complementary,
            legend=config.legend,
            **kwargs,
        )
        if title is not None:
            ax.set_title(title, fontsize=self._canvas.fontsize_title)
        return ax

    def save(self, ax: plt.Axes, filepath: str) -> None:
        """Writes the figure of ``ax`` as SVG without a creation date, then closes it."""
        directory = os.path.dirname(filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)
        fig = ax.get_figure()
        fig.tight_layout()
        fig.savefig(filepath, format="svg", metadata={"Date": None})
        plt.close(fig)
        self._logger.debug(f"Saved chart {filepath}.")
