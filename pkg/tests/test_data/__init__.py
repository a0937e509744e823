#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_data/__init__.py                                                        #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 09:43:52 am                                                #
# Modified   : Tuesday October 13th 2026 12:22:28 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
