#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/container.py                                                               #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 4th 2026 12:16:09 pm                                                 #
# Modified   : Wednesday October 7th 2026 01:59:22 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Framework Dependency Container"""
import logging.config
import os

from dependency_injector import containers, providers

from levykin.visual.seaborn.config import SeabornCanvas
from levykin.visual.seaborn.plot import SeabornVisualizer

# ------------------------------------------------------------------------------------------------ #
CONFIG_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "config")
CONFIG_FILES = [os.path.join(CONFIG_DIR, "levykin.yml"), os.path.join(CONFIG_DIR, "logging.yml")]


# ------------------------------------------------------------------------------------------------ #
#                                    VISUALIZER CONTAINER                                          #
# ------------------------------------------------------------------------------------------------ #
class VisualizerContainer(containers.DeclarativeContainer):
    canvas = providers.Dependency()
    seaborn = providers.Factory(SeabornVisualizer, canvas=canvas)


# ------------------------------------------------------------------------------------------------ #
#                                     CANVAS CONTAINER                                             #
# ------------------------------------------------------------------------------------------------ #
class CanvasContainer(containers.DeclarativeContainer):
    seaborn = providers.Factory(SeabornCanvas)


# ------------------------------------------------------------------------------------------------ #
#                                          FRAMEWORK                                               #
# ------------------------------------------------------------------------------------------------ #
class LevykinContainer(containers.DeclarativeContainer):
    config = providers.Configuration(yaml_files=CONFIG_FILES)

    logging = providers.Resource(logging.config.dictConfig, config=config.logging)

    canvas = providers.Container(CanvasContainer)

    visualizer = providers.Container(VisualizerContainer, canvas=canvas.seaborn)
