#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/noise/rng.py                                                               #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 10th 2026 02:34:01 pm                                              #
# Modified   : Tuesday October 13th 2026 12:10:44 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Counter-based random streams keyed by (seed, path index, stream role)."""
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from levykin.data.dataclass import DataClass


# ------------------------------------------------------------------------------------------------ #
class Role(IntEnum):
    """Purpose of a stream. Each role draws from its own independent Philox key."""

    NOISE = 0
    BROWNIAN = 1
    JUMPS = 2
    SMALL_JUMPS = 3
    CHAIN = 4
    BOOTSTRAP = 5
    FEED = 6


# ------------------------------------------------------------------------------------------------ #
@dataclass
class StreamFactory(DataClass):
    """Hands out reproducible generators.

    The generator for a given (path index, role) is the same no matter which other streams were
    created before it, so paths can be simulated in any order, chunking or process.
    """

    seed: int = 0

    def generator(self, index: int, role: Role = Role.NOISE) -> np.random.Generator:
        sequence = np.random.SeedSequence(entropy=int(self.seed), spawn_key=(int(index), int(role)))
        return np.random.Generator(np.random.Philox(sequence))

    def generators(self, indices, role: Role = Role.NOISE) -> list:
        return [self.generator(i, role) for i in indices]
