#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/noise/__init__.py                                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Tuesday October 6th 2026 06:16:29 pm                                                #
# Modified   : Saturday October 10th 2026 06:54:08 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
