#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_experiment/test_report.py                                               #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 10th 2026 10:55:54 am                                              #
# Modified   : Tuesday October 13th 2026 05:30:07 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging
import os

import numpy as np
import pandas as pd
import pytest

from levykin.experiment.config import parse_config
from levykin.experiment.report import VERDICT_COLUMNS, ExperimentReport, Verdict
from levykin.service.io import CSVIO, IOService
from levykin.visual.seaborn.charts import LogLogChart


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #


@pytest.mark.report
class TestVerdict:  # pragma: no cover
    # ============================================================================================ #
    def test_constructors(self, caplog):
        assert Verdict.within("q", 0.6, 2.0 / 3.0, 0.2).passed
        assert not Verdict.within("q", 0.3, 2.0 / 3.0, 0.2).passed
        assert Verdict.below("ks", 0.01, 0.015).passed
        assert not Verdict.below("ks", 0.02, 0.015).passed
        assert Verdict.above("ratio", 3.0, 2.0).passed
        assert Verdict.below("zero", 0.0, 0.0).passed
        holds = Verdict.holds("decreasing", True)
        assert holds.value == 1.0 and holds.passed
        assert not Verdict.holds("decreasing", False).passed
        assert not Verdict.below("ks", np.nan, 1.0).passed


@pytest.mark.report
class TestExperimentReport:  # pragma: no cover
    # ============================================================================================ #
    def test_exit_code(self, caplog):
        report = ExperimentReport(config=parse_config({"kind": "metric"}))
        assert report.passed and report.exit_code == 0
        report.verdicts.append(Verdict.below("ks", 0.5, 0.1))
        assert not report.passed and report.exit_code == 1
        frame = report.verdict_frame()
        assert list(frame.columns) == VERDICT_COLUMNS
        assert np.isnan(frame.loc[0, "reference"])

    # ============================================================================================ #
    def test_write(self, tmp_path, caplog):
        config = parse_config({"kind": "rescale-converge", "seed": 5, "charts": True})
        frame = pd.DataFrame({"eps": [0.5, 0.25, 0.125], "deviation": [1.0, 0.6, 0.35]})
        report = ExperimentReport(
            config=config,
            tables={"deviation": frame},
            verdicts=[Verdict.within("rate_q", 0.7, 2.0 / 3.0, 0.2)],
            charts={
                "deviation": lambda: LogLogChart(frame, "eps", "deviation", reference_slope=0.75)
            },
            runtime={"wall_time": 0.1, "jobs": 1, "version": "0.1.0"},
        )
        directory = report.write(str(tmp_path / "out"))
        for name in (
            "deviation.csv",
            "verdicts.csv",
            "resolved_config.yml",
            "deviation.svg",
            "runtime.json",
        ):
            assert os.path.exists(os.path.join(directory, name))
        header = CSVIO.read_header(os.path.join(directory, "deviation.csv"))
        assert header["kind"] == "rescale-converge" and header["seed"] == 5
        table = IOService.read(os.path.join(directory, "deviation.csv"))
        pd.testing.assert_frame_equal(table, frame)
        resolved = IOService.read(os.path.join(directory, "resolved_config.yml"))
        assert resolved == header
        assert IOService.read(os.path.join(directory, "runtime.json"))["jobs"] == 1

    # ============================================================================================ #
    def test_write_without_charts(self, tmp_path, caplog):
        config = parse_config({"kind": "metric", "charts": False, "out": str(tmp_path / "cfg")})
        report = ExperimentReport(config=config, charts={"never": lambda: 1 / 0})
        directory = report.write()
        assert directory == str(tmp_path / "cfg")
        assert not os.path.exists(os.path.join(directory, "never.svg"))
        assert os.path.exists(os.path.join(directory, "verdicts.csv"))
