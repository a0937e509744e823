#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/__main__.py                                                                #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 07:12:49 pm                                                #
# Modified   : Tuesday October 13th 2026 04:13:36 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
from levykin.experiment.cli import app

# ------------------------------------------------------------------------------------------------ #
if __name__ == "__main__":  # pragma: no cover
    app(prog_name="levykin")
