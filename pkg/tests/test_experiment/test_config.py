#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_experiment/test_config.py                                               #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 12:25:53 pm                                                #
# Modified   : Wednesday October 14th 2026 08:38:17 am                                             #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

import pytest

from levykin.exceptions import ConfigError
from levykin.experiment.config import (
    ExperimentConfig,
    Kind,
    MomentsSection,
    load_config,
    parse_config,
)
from levykin.kernel.drift import Homogeneous
from levykin.noise.measure import PowerLaw
from levykin.noise.stable import StableLaw
from levykin.noise.triplet import LevyTriplet


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #


@pytest.mark.config
class TestExperimentConfig:  # pragma: no cover
    # ============================================================================================ #
    def test_defaults(self, caplog):
        config = parse_config(None)
        assert isinstance(config, ExperimentConfig)
        assert config.experiment is Kind.SIMULATE
        assert config.seed == 0 and config.jobs == 1 and config.charts
        cfg = config.kinetic_config()
        assert isinstance(cfg.noise, StableLaw) and cfg.alpha == 1.5
        assert isinstance(cfg.drift, Homogeneous) and cfg.gamma == 0.5
        assert cfg.beta == 2.0

    # ============================================================================================ #
    def test_sections(self, caplog):
        config = parse_config(
            {
                "kind": "moments",
                "seed": 7,
                "moments": {"kappa": 0.25, "n_paths": 10},
                "scheme": {"max_step": 0.5, "radii": [10, 100]},
                "noise": {"kind": "triplet", "measure": {"kind": "power_law", "alpha": 0.8}},
                "drift": {"kind": "homogeneous", "gamma": 1.0, "F1": 2.0},
            }
        )
        assert isinstance(config.section, MomentsSection)
        assert config.section.kappa == 0.25 and config.section.horizon == 1000.0
        assert config.scheme.radii == (10.0, 100.0)
        cfg = config.kinetic_config()
        assert isinstance(cfg.noise, LevyTriplet)
        assert isinstance(cfg.noise.measure, PowerLaw) and cfg.alpha == 0.8
        assert cfg.drift.F1 == 2.0 and cfg.drift.Fm1 == -2.0
        assert cfg.scheme.max_step == 0.5

    # ============================================================================================ #
    def test_critical_beta(self, caplog):
        config = parse_config({"kinetic": {"beta": "critical"}})
        cfg = config.kinetic_config()
        assert cfg.beta == pytest.approx(1.0 + (0.5 - 1.0) / 1.5)
        assert cfg.is_critical
        untyped = parse_config({"kinetic": {"beta": "critical"}, "noise": {"kind": "triplet"}})
        with pytest.raises(ConfigError) as e:
            untyped.kinetic_config()
        assert e.value.key == "kinetic.beta"

    # ============================================================================================ #
    def test_invalid(self, caplog):
        cases = [
            ({"kind": "nonsense"}, "kind"),
            ({"seed": -1}, "seed"),
            ({"noise": {"alpah": 1.5}}, "noise.alpah"),
            ({"scheme": {"max_step": -1.0}}, "scheme"),
            ({"scheme": {"step_rule": "random"}}, "scheme"),
            ({"moments": [1, 2]}, "moments"),
        ]
        for data, key in cases:
            with pytest.raises(ConfigError) as e:
                parse_config(data)
            assert e.value.key == key
        bad_model = parse_config({"noise": {"alpha": 2.5}})
        with pytest.raises(ConfigError) as e:
            bad_model.kinetic_config()
        assert e.value.key == "kinetic"

    # ============================================================================================ #
    def test_overrides(self, caplog):
        config = parse_config({"kind": "metric", "seed": 3, "out": "a"})
        changed = config.with_overrides(seed=11, jobs=4)
        assert changed.seed == 11 and changed.jobs == 4 and changed.out == "a"
        assert changed.kind == "metric"
        assert config.with_overrides().as_dict() == config.as_dict()

    # ============================================================================================ #
    def test_load(self, tmp_path, caplog):
        path = tmp_path / "experiment.yml"
        path.write_text(
            "kind: brownian-negligibility\njobs: 2\nbrownian_negligibility:\n  sigma: 0.5\n"
        )
        config = load_config(str(path), defaults={"jobs": 1, "out": "elsewhere"})
        assert config.experiment is Kind.BROWNIAN_NEGLIGIBILITY
        assert config.jobs == 2 and config.out == "elsewhere"
        assert config.section.sigma == 0.5

        broken = tmp_path / "broken.yml"
        broken.write_text("kind: metric\nseed: [1, 2\n")
        with pytest.raises(ConfigError) as e:
            load_config(str(broken))
        assert e.value.line is not None

        with pytest.raises(ConfigError):
            load_config(str(tmp_path / "missing.yml"))
