#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/service/__init__.py                                                        #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 2nd 2026 03:58:29 pm                                                 #
# Modified   : Wednesday October 7th 2026 07:37:13 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
