#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/data/__init__.py                                                           #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 5th 2026 01:53:36 pm                                                 #
# Modified   : Friday October 9th 2026 10:39:34 am                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import numpy as np

# ------------------------------------------------------------------------------------------------ #
IMMUTABLE_TYPES: tuple = (
    str,
    int,
    float,
    bool,
    type(None),
    np.int32,
    np.int64,
    np.float32,
    np.float64,
    np.bool_,
)
SEQUENCE_TYPES: tuple = (
    list,
    tuple,
)
