#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/quantitative/moment/__init__.py                                            #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 5th 2026 03:58:14 pm                                                 #
# Modified   : Wednesday October 7th 2026 07:37:03 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
