#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/convergence/__init__.py                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 12:06:51 pm                                                #
# Modified   : Wednesday October 14th 2026 10:37:05 am                                             #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
