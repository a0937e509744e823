#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_noise/test_measure.py                                                   #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 10th 2026 11:39:20 am                                              #
# Modified   : Wednesday October 14th 2026 02:41:23 pm                                             #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

import numpy as np
import pytest

from levykin.exceptions import InputError
from levykin.noise.measure import (
    PowerLaw,
    Rescaled,
    Tabulated,
    Tempered,
    Truncated,
    ZeroMeasure,
    measure_from_dict,
    truncation,
)


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #


@pytest.mark.measure
class TestPowerLaw:  # pragma: no cover
    # ============================================================================================ #
    def test_validation(self, caplog):
        for alpha in (0.0, 2.0, 2.5):
            with pytest.raises(InputError):
                PowerLaw(alpha_index=alpha)
        with pytest.raises(InputError):
            PowerLaw(c_plus=0.0, c_minus=0.0)
        with pytest.raises(InputError):
            PowerLaw(c_plus=1.0, k_plus=-2.0)
        with pytest.raises(InputError):
            PowerLaw(decay=0.0)

    # ============================================================================================ #
    def test_closed_forms(self, caplog):
        m = PowerLaw(alpha_index=1.5)
        delta = 1e-3
        assert m.mass(delta) == pytest.approx(2.0 * delta**-1.5 / 1.5, rel=1e-6)
        assert m.small_jump_variance(delta) == pytest.approx(2.0 * delta**0.5 / 0.5, rel=1e-6)
        assert m.tail_moment(1.0) == pytest.approx(4.0, rel=1e-6)
        assert np.array_equal(truncation(np.array([-3.0, 0.5, 2.0])), [-1.0, 0.5, 1.0])

    # ============================================================================================ #
    def test_hypotheses(self, caplog):
        m = PowerLaw(alpha_index=1.5, c_plus=2.0, c_minus=1.0, k_plus=0.5)
        assert m.satisfies_h1
        assert m.satisfies_hg
        assert m.satisfies_h2(1.2)
        assert not m.satisfies_h2(1.6)
        assert not m.is_stable
        assert not m.is_symmetric
        assert m.stable_part().is_stable
        one_sided = PowerLaw(alpha_index=1.5, c_plus=1.0, c_minus=0.0)
        assert not one_sided.satisfies_h1
        cauchy = PowerLaw(alpha_index=1.0, c_plus=2.0, c_minus=1.0)
        assert not cauchy.satisfies_hg

    # ============================================================================================ #
    def test_sizes(self, streams, caplog):
        m = PowerLaw(alpha_index=1.5, c_plus=3.0, c_minus=1.0)
        z = m.sample_sizes(0.01, 20_000, streams.generator(0))
        assert len(z) == 20_000
        assert np.all(np.abs(z) >= 0.01)
        assert np.mean(z > 0) == pytest.approx(0.75, abs=0.02)
        # P(|Z| > 0.1 | |Z| >= 0.01) = 10^-1.5
        assert np.mean(np.abs(z) > 0.1) == pytest.approx(10**-1.5, abs=0.005)


@pytest.mark.measure
class TestMeasureFamily:  # pragma: no cover
    # ============================================================================================ #
    def test_zero(self, streams, caplog):
        m = ZeroMeasure()
        assert m.is_zero
        assert m.mass(1e-3) == 0.0
        assert len(m.sample_sizes(1e-3, 5, streams.generator(0))) == 0

    # ============================================================================================ #
    def test_truncated_and_tempered(self, streams, caplog):
        truncated = Truncated(base=PowerLaw(alpha_index=1.5), radius=10.0)
        assert truncated.satisfies_h2(2.0)
        assert truncated.mass(1.0) == pytest.approx(2.0 * (1.0 - 10**-1.5) / 1.5, rel=1e-6)
        z = truncated.sample_sizes(0.5, 5000, streams.generator(0))
        assert np.all(np.abs(z) <= 10.0)
        tempered = Tempered(base=PowerLaw(alpha_index=1.5), rate=1.0)
        assert tempered.satisfies_h2(2.0)
        assert tempered.mass(1.0) < PowerLaw(alpha_index=1.5).mass(1.0)
        with pytest.raises(InputError):
            Tempered(rate=0.0)
        with pytest.raises(InputError):
            Tempered(alpha0=1.0)

    # ============================================================================================ #
    def test_tabulated(self, streams, caplog):
        m = Tabulated(atoms=((2.0, 0.5), (-1.0, 1.5)))
        assert m.mass(1.0) == pytest.approx(2.0)
        assert m.mass(1.5) == pytest.approx(0.5)
        assert m.integrate(lambda z: z) == pytest.approx(-0.5)
        assert not m.is_symmetric
        assert Tabulated().is_symmetric
        z = m.sample_sizes(0.5, 1000, streams.generator(0))
        assert set(np.unique(z)) <= {2.0, -1.0}
        with pytest.raises(InputError):
            Tabulated(atoms=((0.0, 1.0),))

    # ============================================================================================ #
    def test_rescaled(self, caplog):
        base = Tabulated(atoms=((2.0, 1.0), (-4.0, 1.0)))
        m = Rescaled(base=base, eps=0.5, scale=0.25)
        # atoms move to 0.5 and -1.0 with weights 1 / eps
        assert m.mass(0.75) == pytest.approx(2.0)
        assert m.integrate(np.square) == pytest.approx(2.0 * (0.25 + 1.0))
        nested = Rescaled(base=m, eps=0.5, scale=2.0)
        assert nested.eps == pytest.approx(0.25)
        assert nested.scale == pytest.approx(0.5)
        assert isinstance(nested.base, Tabulated)
        stable = PowerLaw(alpha_index=1.5)
        scaled = Rescaled(base=stable, eps=0.01, scale=0.01 ** (1 / 1.5))
        assert scaled.mass(1.0) == pytest.approx(stable.mass(1.0), rel=1e-6)

    # ============================================================================================ #
    def test_from_dict(self, caplog):
        tempered = Tempered(base=PowerLaw(alpha_index=1.2, c_plus=2.0), rate=0.5)
        rebuilt = measure_from_dict(tempered.as_dict())
        assert rebuilt.canonical() == tempered.canonical()
        assert measure_from_dict({"kind": "power_law", "alpha": 0.7}).alpha == 0.7
        assert isinstance(measure_from_dict(None), ZeroMeasure)
        tabulated = measure_from_dict({"kind": "tabulated", "atoms": [[1.0, 2.0]]})
        assert tabulated.atoms == ((1.0, 2.0),)
        with pytest.raises(InputError):
            measure_from_dict({"kind": "cauchy"})
        with pytest.raises(InputError):
            measure_from_dict({"kind": "power_law", "exponent": 1.0})
