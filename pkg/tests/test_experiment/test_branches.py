#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_experiment/test_branches.py                                             #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 10th 2026 02:03:09 pm                                              #
# Modified   : Monday October 12th 2026 03:07:28 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

import numpy as np
import pytest

from levykin.experiment.branches import BRANCH_COLUMNS, list_branches


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #


@pytest.mark.branches
class TestBranches:  # pragma: no cover
    # ============================================================================================ #
    def test_default_sweep(self, caplog):
        table = list_branches()
        assert list(table.columns) == BRANCH_COLUMNS
        assert len(table) == 2 * 5
        assert set(table["regime"]) == {"stable"}

    # ============================================================================================ #
    def test_rows(self, caplog):
        table = list_branches(alphas=[1.5], gammas=[0.5, 1.6], betas=[2.0, 0.5])
        known = table[(table["gamma"] == 0.5) & (table["beta"] == 2.0)].iloc[0]
        assert known["p"] == pytest.approx(1.0 / 3.0)
        assert known["theta"] == pytest.approx(2.0 / 3.0)
        assert known["beta_star"] == pytest.approx(2.0 / 3.0)
        assert known["critical_beta"] == pytest.approx(2.0 / 3.0)
        assert known["converges"]
        below = table[(table["gamma"] == 0.5) & (table["beta"] == 0.5)].iloc[0]
        assert not below["converges"]
        unknown = table[table["gamma"] == 1.6]
        assert set(unknown["branch"]) == {"none"}
        assert unknown["p"].isna().all() and not unknown["converges"].any()

    # ============================================================================================ #
    def test_regimes(self, caplog):
        h1 = list_branches(alphas=[0.5], gammas=[0.5], regime="H1", b_zero=False)
        assert h1["theta"].iloc[0] == pytest.approx(2.0)
        assert h1["p"].iloc[0] == pytest.approx(1.0)
        h2 = list_branches(alphas=[1.5], gammas=[0.5], regime="H2", alpha0=3.0)
        assert h2["p"].iloc[0] == pytest.approx(min(0.5, 0.5 / 3.0 + 0.25))
        assert h2["theta"].iloc[0] == 1.0
        with pytest.raises(ValueError):
            list_branches(regime="H3")
        assert np.isnan(list_branches(gammas=[0.5], regime="H2")["p"]).all()
