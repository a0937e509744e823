#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/__init__.py                                                                  #
# ------------------------------------------------------------------------------------------------ #
# Created    : Tuesday October 6th 2026 04:33:31 pm                                                #
# Modified   : Friday October 9th 2026 12:21:20 pm                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
