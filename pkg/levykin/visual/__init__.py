#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/visual/__init__.py                                                         #
# ------------------------------------------------------------------------------------------------ #
# Created    : Thursday October 1st 2026 11:01:12 am                                               #
# Modified   : Tuesday October 6th 2026 01:11:40 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
