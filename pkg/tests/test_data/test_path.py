#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /tests/test_data/test_path.py                                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 7th 2026 06:23:48 pm                                              #
# Modified   : Sunday October 11th 2026 05:53:20 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging

import numpy as np
import pytest

from levykin.data.path import PathBundle, SamplePath, locate
from levykin.exceptions import DomainMismatchError, InputError


# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #


@pytest.fixture
def path():
    return SamplePath(
        t=np.array([1.0, 2.0, 3.0, 4.0]),
        v=np.array([0.0, 1.5, 1.0, 3.0]),
        jumps=np.array([[2.0, 1.5], [4.0, 2.0]]),
    )


@pytest.mark.path
class TestSamplePath:  # pragma: no cover
    # ============================================================================================ #
    def test_validation(self, caplog):
        with pytest.raises(InputError):
            SamplePath(t=np.array([1.0]), v=np.array([0.0]))
        with pytest.raises(InputError):
            SamplePath(t=np.array([1.0, 1.0]), v=np.zeros(2))
        with pytest.raises(InputError):
            SamplePath(t=np.array([1.0, 2.0]), v=np.zeros(3))
        with pytest.raises(InputError):
            SamplePath(t=np.array([1.0, 2.0]), v=np.zeros(2), exploded=True, explosion_time=5.0)

    # ============================================================================================ #
    def test_cadlag_lookup(self, path, caplog):
        assert np.array_equal(path.at(np.array([1.0, 1.5, 2.0, 10.0])), [0.0, 0.0, 1.5, 3.0])
        # A time a hair below a grid point resolves to that point.
        assert path.at(np.array([2.0 * (1 - 1e-14)]))[0] == 1.5
        with pytest.raises(DomainMismatchError):
            path.at(np.array([0.5]))
        assert np.array_equal(locate(path.t, np.array([3.5])), [2])

    # ============================================================================================ #
    def test_views(self, path, caplog):
        assert path.covers(1.0, 4.0) and not path.covers(0.5, 4.0)
        assert np.array_equal(path.jump_mask(), [False, True, False, True])
        window = path.window(2.0, 3.0)
        assert np.array_equal(window.t, [2.0, 3.0])
        assert np.array_equal(window.jumps, [[2.0, 1.5]])
        sub = path.subsample(2)
        assert np.array_equal(sub.t, [1.0, 3.0, 4.0])
        assert np.array_equal(path.shift(1.0).v, path.v + 1.0)
        assert np.array_equal(path.increments(), [1.5, -0.5, 2.0])

    # ============================================================================================ #
    def test_frame_round_trip(self, path, tmp_path, caplog):
        filepath = str(tmp_path / "path.csv")
        path.write_csv(filepath, header={"seed": 1})
        back = SamplePath.read_csv(filepath)
        assert np.array_equal(back.t, path.t) and np.array_equal(back.v, path.v)
        assert np.allclose(back.jumps, [[2.0, 1.5], [4.0, 2.0]])
        with pytest.raises(InputError):
            SamplePath.from_frame(path.to_frame().drop(columns="is_jump"))

    # ============================================================================================ #
    def test_absorbed(self, caplog):
        frame = SamplePath(t=np.arange(1.0, 5.0), v=np.array([0.0, 1.0, np.inf, np.inf])).to_frame()
        back = SamplePath.from_frame(frame)
        assert back.exploded and back.explosion_time == 3.0
        assert np.array_equal(back.absorbed, [False, False, True, True])
        assert back.window(1.0, 2.0).exploded is False


@pytest.mark.path
class TestPathBundle:  # pragma: no cover
    # ============================================================================================ #
    def test_bundle(self, path, caplog):
        bundle = PathBundle.stack([path, path.shift(2.0)])
        assert bundle.n_paths == 2 and len(bundle) == 2
        assert bundle.exploded_fraction == 0.0
        assert np.array_equal(bundle.at(np.array([2.5])), [[1.5], [3.5]])
        assert np.array_equal(bundle.path(1).v, path.v + 2.0)
        assert bundle.increments().shape == (2, 3)
        assert bundle.subsample(3).t.tolist() == [1.0, 4.0]

    # ============================================================================================ #
    def test_invalid(self, path, caplog):
        other = SamplePath(t=np.array([1.0, 2.0]), v=np.zeros(2))
        with pytest.raises(InputError):
            PathBundle.stack([path, other])
        with pytest.raises(InputError):
            PathBundle(t=np.array([1.0, 2.0]), values=np.zeros((2, 3)))
