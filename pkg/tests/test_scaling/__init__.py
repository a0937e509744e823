#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_scaling/__init__.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 1st 2026 05:19:25 pm                                               #
# Modified   : Friday October 2nd 2026 09:34:10 am                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
