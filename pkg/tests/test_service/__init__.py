#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_service/__init__.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 5th 2026 03:43:58 pm                                                 #
# Modified   : Thursday October 8th 2026 03:06:10 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
