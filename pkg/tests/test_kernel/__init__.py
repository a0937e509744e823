#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_kernel/__init__.py                                                      #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 12:06:23 pm                                                #
# Modified   : Friday October 16th 2026 06:14:58 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
