#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_quantitative/test_convergence/test_rate.py                              #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 06:12:11 pm                                                #
# Modified   : Friday October 16th 2026 02:29:34 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

import numpy as np
import pandas as pd
import pytest

from levykin.exceptions import InputError
from levykin.quantitative.convergence.rate import (
    RATE_COLUMNS,
    RateReport,
    check_eps,
    sup_deviation_rate,
    theoretical_rate,
)


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
EPS = [0.5, 0.25, 0.125, 0.0625, 0.03125]


@pytest.mark.rate
class TestRate:  # pragma: no cover
    # ============================================================================================ #
    def test_check_eps(self, caplog):
        assert np.array_equal(check_eps([0.1, 0.01]), [0.1, 0.01])
        for bad in ([0.1], [0.01, 0.1], [1.5, 0.1], [0.1, 0.0]):
            with pytest.raises(InputError):
                check_eps(bad)

    # ============================================================================================ #
    def test_theoretical_rate(self, power_config, critical_config, free_config, caplog):
        q, p, theta = theoretical_rate(power_config)
        assert theta == pytest.approx(1.0 / 1.5)
        assert p == pytest.approx(0.5 / 1.5)
        assert q == pytest.approx(theta)
        q, _, _ = theoretical_rate(critical_config)
        assert q == pytest.approx(0.0, abs=1e-12)
        assert theoretical_rate(free_config) == (pytest.approx(theta), None, pytest.approx(theta))

    # ============================================================================================ #
    def test_free_motion(self, free_config, streams, caplog):
        report = sup_deviation_rate(free_config, EPS, streams, n_paths=200)
        assert list(report.frame.columns) == RATE_COLUMNS
        normalized = report.normalized()
        # V - L = v0 - L_{t0} on every grid, so only eps^theta varies.
        assert np.allclose(normalized, normalized[0], rtol=1e-6)
        assert report.q == pytest.approx(report.theta, abs=1e-6)
        assert report.above_critical and not report.log_corrected
        assert report.summary()["q_theory"].iloc[0] == pytest.approx(report.theta)

    # ============================================================================================ #
    def test_critical_line_is_not_above(self, critical_config, streams, caplog):
        report = sup_deviation_rate(critical_config, [0.5, 0.25], streams, n_paths=50)
        assert not report.above_critical
        assert report.q_fit is None and np.isnan(report.q)

    # ============================================================================================ #
    def test_log_corrected_normalization(self, caplog):
        eps = np.array([0.1, 0.01])
        frame = pd.DataFrame({"deviation": [1.0, 2.0]})
        report = RateReport(
            eps_list=eps, frame=frame, q_fit=None, q_theory=0.5, theta=0.5, log_corrected=True
        )
        expected = np.array([1.0, 2.0]) / (eps**0.5 * np.abs(np.log(eps)))
        assert np.allclose(report.normalized(), expected)

    # ============================================================================================ #
    @pytest.mark.slow
    def test_fitted_rate(self, power_config, streams, caplog):
        eps = np.geomspace(0.1, 0.001, 5)
        report = sup_deviation_rate(power_config, eps, streams, n_paths=500)
        logger.info(f"Fitted q = {report.q}, predicted {report.q_theory}")
        assert report.q == pytest.approx(2.0 / 3.0, abs=0.2)
