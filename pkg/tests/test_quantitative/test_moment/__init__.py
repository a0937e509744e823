#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_quantitative/test_moment/__init__.py                                    #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 3rd 2026 02:29:43 pm                                               #
# Modified   : Tuesday October 6th 2026 12:08:00 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
