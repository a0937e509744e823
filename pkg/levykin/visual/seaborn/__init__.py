#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/visual/seaborn/__init__.py                                                 #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 3rd 2026 08:46:14 am                                               #
# Modified   : Thursday October 8th 2026 07:23:58 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
