#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_experiment/__init__.py                                                  #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 05:08:13 pm                                                #
# Modified   : Friday October 16th 2026 03:59:46 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
