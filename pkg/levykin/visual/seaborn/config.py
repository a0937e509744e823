#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/visual/seaborn/config.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 3rd 2026 09:49:02 am                                               #
# Modified   : Thursday October 8th 2026 03:42:06 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from levykin.data.dataclass import DataClass  # noqa: E402
from levykin.visual.base import Canvas  # noqa: E402

# ------------------------------------------------------------------------------------------------ #
plt.rcParams["font.size"] = "10"
# Deterministic SVG output: fixed element ids and text as paths.
plt.rcParams["svg.hashsalt"] = "levykin"
plt.rcParams["svg.fonttype"] = "path"


# ------------------------------------------------------------------------------------------------ #
#                                           COLORS                                                 #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class Colors(DataClass):
    estimate: str = "#1F4690"
    reference: str = "#E8AA42"


# ------------------------------------------------------------------------------------------------ #
#                                            LEGEND                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class LegendConfig(DataClass):
    loc: str = "best"
    ncols: int = 1
    fontsize: int = 8
    frameon: bool = False
    title_fontsize: int = 8
    alignment: str = "left"


# ------------------------------------------------------------------------------------------------ #
#                                      LINEPLOT CONFIG                                             #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class LineDataClass(DataClass):
    markers: bool = True
    dashes: bool = True
    sort: bool = True
    legend: str = "auto"  # Valid values: ['auto','brief','full',False]


# ------------------------------------------------------------------------------------------------ #
#                                        ECDF CONFIG                                               #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class EcdfDataClass(DataClass):
    stat: str = "proportion"
    complementary: bool = False
    legend: bool = True


# ------------------------------------------------------------------------------------------------ #
#                                            CANVAS                                                #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class SeabornCanvas(Canvas):
    """SeabornCanvas class encapsulating figure level configuration."""

    width: int = 8
    height: int = 5
    palette: str = "Blues_r"  # Seaborn palette or matplotlib colormap
    style: str = "whitegrid"  # A Seaborn aesthetic
    fontsize: int = 10
    fontsize_title: int = 12
    dpi: int = 100
    colors: Colors = field(default_factory=Colors)
    legend_config: LegendConfig = field(default_factory=LegendConfig)
    lineplot_config: LineDataClass = field(default_factory=LineDataClass)
    ecdfplot_config: EcdfDataClass = field(default_factory=EcdfDataClass)

    def get_figaxes(self, figsize: tuple = None) -> tuple:  # pragma: no cover
        """Returns a new figure and its single axes."""
        figsize = figsize or (self.width, self.height)
        fig, ax = plt.subplots(figsize=figsize, dpi=self.dpi)
        return fig, ax
