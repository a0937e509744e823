#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/experiment/__init__.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Created    : Tuesday October 6th 2026 02:13:31 pm                                                #
# Modified   : Friday October 9th 2026 07:35:52 pm                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
