#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_noise/__init__.py                                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 1st 2026 12:05:32 pm                                               #
# Modified   : Saturday October 3rd 2026 11:41:42 am                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
