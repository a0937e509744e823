#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_quantitative/test_convergence/test_brownian.py                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 2nd 2026 04:00:13 pm                                                 #
# Modified   : Sunday October 4th 2026 01:05:36 pm                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

import numpy as np
import pytest

from levykin.noise.stable import StableLaw
from levykin.quantitative.convergence.brownian import brownian_negligibility


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #


@pytest.mark.brownian
class TestBrownianNegligibility:  # pragma: no cover
    # ============================================================================================ #
    def test_no_brownian_term(self, power_config, streams, caplog):
        report = brownian_negligibility(power_config, [0.5, 0.25], streams, n_paths=50, sigma=0.0)
        assert np.all(report.deviations == 0.0)
        assert report.decreasing
        assert report.ratio == np.inf
        assert report.precondition_ok
        assert report.theta == pytest.approx(1.0 / 1.5)

    # ============================================================================================ #
    def test_precondition(self, power_config, streams, caplog):
        report = brownian_negligibility(
            power_config, [0.5, 0.25], streams, n_paths=20, theta=0.4
        )
        assert not report.precondition_ok
        assert np.all(report.deviations > 0.0)

    # ============================================================================================ #
    @pytest.mark.slow
    def test_deviation_vanishes(self, power_config, streams, caplog):
        cfg = power_config.with_(noise=StableLaw(alpha=1.2))
        report = brownian_negligibility(cfg, [0.1, 0.01, 0.001], streams, n_paths=300)
        logger.info(f"Brownian deviations: {report.deviations}")
        assert report.decreasing
        assert report.ratio >= 2.0
