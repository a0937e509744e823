#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_scaling/test_ergodic.py                                                 #
# ------------------------------------------------------------------------------------------------ #
# Created    : Tuesday October 6th 2026 02:25:05 pm                                                #
# Modified   : Saturday October 10th 2026 05:32:20 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

import numpy as np
import pytest
from scipy import stats

from levykin.exceptions import ErgodicityError, InputError
from levykin.kernel.config import KineticConfig
from levykin.kernel.drift import BoundedExample, Homogeneous, linear, power, zero
from levykin.noise.measure import Tabulated
from levykin.noise.stable import StableLaw
from levykin.noise.triplet import LevyTriplet
from levykin.scaling.ergodic import ergodicity_margin, pushforward_T, sample_ergodic_H


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
ALPHA = 1.5


@pytest.mark.ergodic
class TestErgodic:  # pragma: no cover
    # ============================================================================================ #
    def test_margin(self, caplog):
        assert ergodicity_margin(power(1.0, 0.5), ALPHA) == pytest.approx(-1.0 / ALPHA)
        assert ergodicity_margin(linear(1.0), ALPHA) == pytest.approx(-1.0 / ALPHA - 1.0)
        repelling = Homogeneous(exponent=1.0, F1=-1.0, Fm1=1.0)
        assert ergodicity_margin(repelling, ALPHA) == pytest.approx(1.0 - 1.0 / ALPHA)
        assert ergodicity_margin(power(1.0, 1.2), ALPHA) == -np.inf
        assert ergodicity_margin(BoundedExample(), ALPHA) == pytest.approx(-1.0 / ALPHA)

    # ============================================================================================ #
    def test_pushforward(self, caplog):
        u = np.array([1.0, -2.0])
        assert np.allclose(pushforward_T(u, [8.0], 3.0), [2.0, -4.0])
        grid = np.array([[1.0, 1.0], [2.0, 3.0]])
        assert np.allclose(pushforward_T(grid, [1.0, 4.0], 2.0), [[1.0, 2.0], [2.0, 6.0]])
        with pytest.raises(InputError):
            pushforward_T(u, [0.0], 1.5)
        with pytest.raises(InputError):
            pushforward_T(u, [1.0, 2.0], 1.5)

    # ============================================================================================ #
    def test_preconditions(self, power_config, critical_config, streams, caplog):
        with pytest.raises(InputError):
            sample_ergodic_H(power_config, streams, n_samples=100)
        triplet = critical_config.with_(noise=LevyTriplet(A=1.0, measure=Tabulated()))
        with pytest.raises(InputError):
            sample_ergodic_H(triplet, streams, n_samples=100)
        repelling = critical_config.with_(
            drift=Homogeneous(exponent=1.0, F1=-1.0, Fm1=1.0), beta=1.0
        )
        with pytest.raises(ErgodicityError):
            sample_ergodic_H(repelling, streams, n_samples=100)
        with pytest.raises(InputError):
            sample_ergodic_H(critical_config, streams, n_samples=100, offsets=(-1.0,))

    # ============================================================================================ #
    def test_sample(self, critical_config, streams, caplog):
        sample = sample_ergodic_H(
            critical_config,
            streams,
            n_samples=400,
            burn_in=5.0,
            offsets=(0.0, 0.5),
            step=0.05,
        )
        assert sample.samples.shape == (400, 2)
        assert np.all(np.isfinite(sample.samples))
        assert np.array_equal(sample.marginal, sample.samples[:, 0])
        assert 0.0 <= sample.ks_halves <= 1.0
        frame = sample.to_frame(2.0)
        assert list(frame.columns) == ["t=2", f"t={2.0 * np.exp(0.5):.6g}"]
        again = sample_ergodic_H(
            critical_config, streams, n_samples=400, burn_in=5.0, offsets=(0.0, 0.5), step=0.05
        )
        assert np.array_equal(sample.samples, again.samples)

    # ============================================================================================ #
    @pytest.mark.slow
    def test_chain_halves_agree(self, critical_config, streams, caplog):
        sample = sample_ergodic_H(critical_config, streams, n_samples=20_000, thinning=3.0)
        logger.info(f"KS between chain halves: {sample.ks_halves}")
        assert sample.stationary
        assert sample.ks_halves < 0.03

    # ============================================================================================ #
    def test_scale_equivariance(self, settings, streams, caplog):
        c = 2.0
        base = KineticConfig(noise=StableLaw(alpha=ALPHA), drift=zero(), beta=1.0, scheme=settings)
        scaled = base.with_(noise=StableLaw(alpha=ALPHA, a_plus=c**ALPHA, a_minus=c**ALPHA))
        kwargs = dict(n_samples=2000, burn_in=10.0, step=0.02, h0=0.0)
        plain = sample_ergodic_H(base, streams, **kwargs)
        stretched = sample_ergodic_H(scaled, streams, **kwargs)
        ks = stats.ks_2samp(stretched.marginal / c, plain.marginal).statistic
        logger.info(f"KS after rescaling by {c}: {ks}")
        assert ks < 0.02

    # ============================================================================================ #
    @pytest.mark.slow
    def test_gaussian_stationary_variance(self, settings, streams, caplog):
        cfg = KineticConfig(noise=StableLaw(alpha=2.0), drift=zero(), beta=1.0, scheme=settings)
        sample = sample_ergodic_H(cfg, streams, n_samples=20_000, thinning=4.0)
        variance = float(np.var(sample.marginal))
        logger.info(f"Stationary variance of the Gaussian chain: {variance}")
        assert variance == pytest.approx(1.0, rel=0.05)

    # ============================================================================================ #
    @pytest.mark.slow
    def test_restoring_drift_tightens(self, critical_config, settings, streams, caplog):
        free = KineticConfig(noise=critical_config.noise, drift=zero(), beta=1.0, scheme=settings)
        kwargs = dict(n_samples=20_000, h0=0.0)
        with_drift = sample_ergodic_H(critical_config, streams, **kwargs)
        without = sample_ergodic_H(free, streams, **kwargs)
        tight = float(np.mean(np.abs(with_drift.marginal)))
        loose = float(np.mean(np.abs(without.marginal)))
        logger.info(f"Stationary E|H| with drift {tight}, without {loose}")
        assert tight <= loose
