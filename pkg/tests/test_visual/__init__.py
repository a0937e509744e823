#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_visual/__init__.py                                                      #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 8th 2026 04:34:38 pm                                               #
# Modified   : Sunday October 11th 2026 12:22:02 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
