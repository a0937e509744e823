#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/__init__.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 08:01:30 am                                                 #
# Modified   : Wednesday October 14th 2026 05:50:02 pm                                             #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
