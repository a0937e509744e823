#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_noise/test_triplet.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 04:03:10 pm                                                #
# Modified   : Friday October 16th 2026 06:34:44 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

import pytest

from levykin.exceptions import ClassificationError, DegenerateLimitError, InputError
from levykin.noise.measure import PowerLaw, Rescaled, Tabulated, Tempered, ZeroMeasure
from levykin.noise.triplet import (
    LevyTriplet,
    LimitCase,
    limit_convergence,
    limit_triplet,
    rescaled_triplet,
    triplet_functionals,
)


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
EPS = [1e-2, 1e-4, 1e-6]


@pytest.mark.triplet
class TestTriplet:  # pragma: no cover
    # ============================================================================================ #
    def test_construction(self, caplog):
        with pytest.raises(InputError):
            LevyTriplet(A=-1.0)
        triplet = LevyTriplet(A=0.5, b=1.0, measure=None)
        assert isinstance(triplet.measure, ZeroMeasure)
        assert triplet.alpha == 2.0
        assert not triplet.is_deterministic
        assert LevyTriplet(b=3.0).is_deterministic
        assert LevyTriplet(b=3.0).alpha is None

    # ============================================================================================ #
    def test_canonical_round_trip(self, caplog):
        triplet = LevyTriplet(A=0.0, b=0.5, measure=Tempered(base=PowerLaw(alpha_index=1.5)))
        rebuilt = LevyTriplet.from_dict(triplet.as_dict())
        assert rebuilt.canonical() == triplet.canonical()
        assert triplet.canonical().startswith("(0.0, 0.5, tempered(")

    # ============================================================================================ #
    def test_rescaled_triplet(self, caplog):
        with pytest.raises(InputError):
            rescaled_triplet(LevyTriplet(), 0.0, 1.0)
        with pytest.raises(InputError):
            rescaled_triplet(LevyTriplet(), 0.5, 0.0)
        gaussian = rescaled_triplet(LevyTriplet(A=2.0, b=1.0), 0.25, 0.5)
        assert gaussian.A == pytest.approx(2.0)
        assert gaussian.b == pytest.approx(2.0)
        jumps = rescaled_triplet(LevyTriplet(measure=PowerLaw(alpha_index=1.5)), 0.1, 0.2)
        assert isinstance(jumps.measure, Rescaled)
        same = rescaled_triplet(LevyTriplet(b=1.0), 1.0, 1.0)
        assert same.b == 1.0


@pytest.mark.triplet
class TestLimitTriplet:  # pragma: no cover
    # ============================================================================================ #
    def test_cases(self, caplog):
        cauchy = limit_triplet(LevyTriplet(measure=PowerLaw(alpha_index=1.0)))
        assert cauchy.case is LimitCase.CAUCHY
        assert cauchy.theta == 1.0
        heavy = limit_triplet(LevyTriplet(b=1.0, measure=PowerLaw(alpha_index=1.5)))
        assert heavy.case is LimitCase.DRIFT_HEAVY
        assert heavy.limit.b == pytest.approx(1.0)
        assert heavy.limit.is_deterministic
        integrable = limit_triplet(LevyTriplet(b=0.5, measure=Tabulated()))
        assert integrable.case is LimitCase.DRIFT_INTEGRABLE
        assert integrable.limit.b == pytest.approx(0.5)
        sublinear = limit_triplet(
            LevyTriplet(measure=PowerLaw(alpha_index=0.5, c_plus=2.0, c_minus=1.0))
        )
        assert sublinear.case is LimitCase.STABLE_SUBLINEAR
        assert sublinear.theta == pytest.approx(2.0)
        assert sublinear.limit.b == pytest.approx(4.0)
        centered = limit_triplet(LevyTriplet(measure=PowerLaw(alpha_index=1.5)))
        assert centered.case is LimitCase.STABLE_CENTERED
        assert centered.theta == pytest.approx(1.0 / 1.5)
        assert centered.scale(0.01) == pytest.approx(0.01 ** (1.0 / 1.5))

    # ============================================================================================ #
    def test_drift_of_integrable_tail(self, caplog):
        atoms = Tabulated(atoms=((3.0, 1.0), (-2.0, 0.5)))
        result = limit_triplet(LevyTriplet(b=0.25, measure=atoms))
        # b + (3 - 1) * 1 + (-2 + 1) * 0.5
        assert result.limit.b == pytest.approx(0.25 + 2.0 - 0.5)

    # ============================================================================================ #
    def test_no_limit(self, caplog):
        with pytest.raises(DegenerateLimitError):
            limit_triplet(LevyTriplet(b=0.0, measure=Tabulated()))
        with pytest.raises(ClassificationError):
            limit_triplet(
                LevyTriplet(measure=PowerLaw(alpha_index=1.0, c_plus=2.0, c_minus=1.0))
            )
        with pytest.raises(ClassificationError):
            limit_triplet(LevyTriplet(measure=PowerLaw(alpha_index=0.8, c_minus=0.0)))

    # ============================================================================================ #
    def test_functionals(self, caplog):
        values = triplet_functionals(LevyTriplet(A=1.0, b=2.0, measure=Tabulated()))
        assert set(values) == {"b", "A", "h2", "ramp", "signed_ramp", "damped_ramp"}
        assert values["h2"] == pytest.approx(3.0)
        assert values["ramp"] == pytest.approx(1.0)
        assert values["signed_ramp"] == pytest.approx(0.0)

    # ============================================================================================ #
    @pytest.mark.parametrize(
        "triplet, case",
        [
            (LevyTriplet(measure=PowerLaw(alpha_index=1.0)), "i"),
            (LevyTriplet(b=1.0, measure=PowerLaw(alpha_index=1.5)), "ii"),
            (LevyTriplet(b=0.5, measure=Tabulated()), "iii"),
            (LevyTriplet(measure=PowerLaw(alpha_index=0.5, c_plus=2.0, c_minus=1.0)), "iv"),
            (LevyTriplet(measure=PowerLaw(alpha_index=1.5)), "v"),
        ],
    )
    def test_convergence(self, triplet, case, caplog):
        frame = limit_convergence(triplet, EPS)
        assert set(frame["case"]) == {case}
        assert list(frame.columns) == ["case", "eps", "functional", "value", "limit", "error"]
        last = frame[frame["eps"] == EPS[-1]]
        assert last["error"].max() <= 0.01
        if case == "iv":
            drift = last[last["functional"] == "b"].iloc[0]
            assert abs(drift["value"] - 4.0) < 1e-3
