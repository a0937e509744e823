#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/__init__.py                                                                #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 7th 2026 08:03:14 am                                              #
# Modified   : Monday October 12th 2026 01:29:20 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

from levykin.container import LevykinContainer

# ------------------------------------------------------------------------------------------------ #
logging.getLogger(__name__).addHandler(logging.NullHandler())
# ------------------------------------------------------------------------------------------------ #
__version__ = "0.1.0"

container = LevykinContainer()
container.wire(modules=["levykin.visual.seaborn.charts"])
