#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/visual/base.py                                                             #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 5th 2026 08:18:50 am                                                 #
# Modified   : Tuesday October 6th 2026 12:33:48 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

from levykin.data.dataclass import DataClass


# ------------------------------------------------------------------------------------------------ #
#                                           CANVAS                                                 #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class Canvas(DataClass):  # pragma: no cover
    """Namespace for Canvas subclasses"""


# ------------------------------------------------------------------------------------------------ #
#                                       VISUALIZER                                                 #
# ------------------------------------------------------------------------------------------------ #
class Visualizer(ABC):  # pragma: no cover
    """Draws report charts on a canvas.

    Args:
        canvas (Canvas): Figure level configuration.
    """

    @abstractmethod
    def __init__(self, canvas: Canvas, *args, **kwargs) -> None:
        """Defines the construction requirement for Visualizers"""

    @abstractmethod
    def lineplot(self, *args, **kwargs) -> None:
        """Renders a line chart"""

    @abstractmethod
    def ecdfplot(self, *args, **kwargs) -> None:
        """Renders empirical distribution functions"""

    @abstractmethod
    def save(self, *args, **kwargs) -> None:
        """Writes the current figure"""


# ------------------------------------------------------------------------------------------------ #
#                                          Visual                                                  #
# ------------------------------------------------------------------------------------------------ #
class Visual(ABC):  # pragma: no cover
    """Wrapper classes for Visualizer methods."""

    @abstractmethod
    def plot(self) -> None:
        """Renders the visualization."""

    @abstractmethod
    def save(self, filepath: str) -> None:
        """Renders the visualization into a file."""
