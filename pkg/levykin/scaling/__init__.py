#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/scaling/__init__.py                                                        #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 2nd 2026 11:35:07 am                                                 #
# Modified   : Wednesday October 7th 2026 05:55:04 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
