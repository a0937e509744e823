#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_quantitative/test_convergence/__init__.py                               #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 09:39:47 am                                                #
# Modified   : Friday October 16th 2026 09:03:30 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
