#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_quantitative/__init__.py                                                #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 2nd 2026 04:00:15 pm                                                 #
# Modified   : Wednesday October 7th 2026 08:43:48 am                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
