#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_dataclass.py                                                            #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 06:24:47 pm                                                 #
# Modified   : Tuesday October 13th 2026 12:26:41 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging
from enum import Enum

import pandas as pd
import pytest

from levykin.kernel.config import SchemeSettings, StepRule


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #


@pytest.mark.dataclass
class TestDataClass:  # pragma: no cover
    # ============================================================================================ #
    def test_repr_str(self, dataklass, caplog):
        repr = dataklass.__repr__()
        assert isinstance(repr, str)
        assert "size=8329" in repr
        assert "grid" not in repr
        logging.debug(repr)

    # ============================================================================================ #
    def test_str(self, dataklass, caplog):
        s = dataklass.__str__()
        assert isinstance(s, str)
        assert "Length" in s

    # ============================================================================================ #
    def test_as_df(self, dataklass, caplog):
        df = dataklass.as_df()
        assert isinstance(df, pd.DataFrame)
        assert list(df.columns) == ["name", "size", "length"]
        assert len(df) == 1

    # ============================================================================================ #
    def test_as_dict(self, dataklass, caplog):
        d = dataklass.as_dict()
        assert isinstance(d, dict)
        assert d["grid"] == [1.0, 2.0, 4.0]
        assert d["ladder"] == [1e2, 1e4]
        assert d["eps"] == [0.5, 0.25]

    # ============================================================================================ #
    def test_nested_records(self, caplog):
        settings = SchemeSettings(step_rule=StepRule.UNIFORM, radii=(10.0, 100.0))
        d = settings.as_dict()
        assert not isinstance(d["step_rule"], Enum)
        assert d["step_rule"] == StepRule.UNIFORM.value
        assert d["radii"] == [10.0, 100.0]
