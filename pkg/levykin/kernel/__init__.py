#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/kernel/__init__.py                                                         #
# ------------------------------------------------------------------------------------------------ #
# Created    : Tuesday October 6th 2026 06:00:36 pm                                                #
# Modified   : Wednesday October 7th 2026 04:33:07 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
