#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_quantitative/test_convergence/test_fdd.py                               #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 10th 2026 05:37:11 pm                                              #
# Modified   : Sunday October 11th 2026 03:12:45 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

import numpy as np
import pandas as pd
import pytest

from levykin.exceptions import InputError, LabelMismatchError
from levykin.quantitative.convergence.fdd import energy_distance, fdd_distance


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
SIZE = 20_000


@pytest.mark.fdd
class TestFdd:  # pragma: no cover
    # ============================================================================================ #
    def test_identical(self, streams, caplog):
        rng = streams.generator(0)
        samples = pd.DataFrame({"t=1": rng.normal(size=2000), "t=2": rng.normal(size=2000)})
        distance = fdd_distance(samples, samples)
        assert distance.max_ks == 0.0
        assert distance.energy == 0.0
        assert list(distance.ks.columns) == ["label", "statistic", "pvalue"]

    # ============================================================================================ #
    def test_disjoint_supports(self, streams, caplog):
        rng = streams.generator(1)
        a = {"t=1": rng.uniform(0.0, 1.0, size=2000)}
        b = {"t=1": rng.uniform(2.0, 3.0, size=2000)}
        distance = fdd_distance(a, b)
        assert distance.max_ks == 1.0
        assert distance.energy > 1.0

    # ============================================================================================ #
    def test_same_law(self, streams, caplog):
        a = {"t=1": streams.generator(2).standard_t(3, size=SIZE)}
        b = {"t=1": streams.generator(3).standard_t(3, size=SIZE)}
        assert fdd_distance(a, b).max_ks < 0.03

    # ============================================================================================ #
    def test_energy_two_dimensional(self, streams, caplog):
        rng = streams.generator(4)
        x = rng.normal(size=(500, 2))
        assert energy_distance(x, x) == 0.0
        assert energy_distance(x, x + 3.0) > 1.0

    # ============================================================================================ #
    def test_invalid(self, caplog):
        a = {"t=1": np.zeros(1000)}
        with pytest.raises(LabelMismatchError):
            fdd_distance(a, {"t=2": np.zeros(1000)})
        with pytest.raises(InputError):
            fdd_distance(a, {"t=1": np.zeros(999)})
