#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_service/test_io.py                                                      #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 03:21:23 pm                                                #
# Modified   : Tuesday October 13th 2026 01:46:20 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging
import os

import numpy as np
import pandas as pd
import pytest

from levykin.service.io import CSVIO, IOService


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #


@pytest.mark.io
class TestIOService:  # pragma: no cover
    # ============================================================================================ #
    def test_csv_with_header(self, tmp_path, caplog):
        filepath = str(tmp_path / "nested" / "table.csv")
        data = pd.DataFrame({"time": [1.0, 2.0], "value": [0.1, 1.0 / 3.0]})
        header = {"kind": "simulate", "seed": 3, "eps": [0.5, 0.25]}
        IOService.write(filepath, data, header=header)
        with open(filepath) as f:
            assert f.readline().startswith("# ")
        assert CSVIO.read_header(filepath) == header
        table = IOService.read(filepath)
        # Round-trip precision.
        assert table["value"].iloc[1] == 1.0 / 3.0
        pd.testing.assert_frame_equal(table, data)

    # ============================================================================================ #
    def test_csv_bytes_are_stable(self, tmp_path, caplog):
        data = pd.DataFrame({"x": np.linspace(0.0, 1.0, 7)})
        a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
        IOService.write(a, data, header={"seed": 1})
        IOService.write(b, data.copy(), header={"seed": 1})
        with open(a, "rb") as fa, open(b, "rb") as fb:
            assert fa.read() == fb.read()

    # ============================================================================================ #
    def test_yaml_and_json(self, tmp_path, caplog):
        d = {"b": [1, 2], "a": {"c": None}}
        for name in ("config.yml", "config.yaml", "runtime.json"):
            filepath = str(tmp_path / name)
            IOService.write(filepath, d)
            assert IOService.read(filepath) == d
        with pytest.raises(ValueError):
            IOService.write(str(tmp_path / "list.json"), [1, 2])

    # ============================================================================================ #
    def test_unsupported(self, tmp_path, caplog):
        with pytest.raises(ValueError):
            IOService.write(str(tmp_path / "table.parquet"), pd.DataFrame())
        with pytest.raises(ValueError):
            IOService.read(None)
        assert not os.listdir(tmp_path)
