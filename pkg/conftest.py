#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /conftest.py                                                                        #
# ------------------------------------------------------------------------------------------------ #
# Created    : Tuesday October 6th 2026 12:03:57 pm                                                #
# Modified   : Friday October 9th 2026 02:57:03 pm                                                 #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import List

import numpy as np
import pytest

from levykin.container import LevykinContainer
from levykin.data.dataclass import DataClass
from levykin.kernel.config import KineticConfig, SchemeSettings
from levykin.kernel.drift import linear, power, zero
from levykin.noise.rng import StreamFactory
from levykin.noise.stable import StableLaw

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
logging.getLogger("matplotlib").setLevel(logging.WARNING)
# ------------------------------------------------------------------------------------------------ #
SEED = 20240601
double_line = f"\n{100 * '='}"
single_line = f"\n{100 * '-'}"

# ------------------------------------------------------------------------------------------------ #
collect_ignore_glob = []


# ------------------------------------------------------------------------------------------------ #
#                                      DATACLASS                                                   #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class TestDataClass(DataClass):
    name: str = "test"
    size: int = 8329
    length: float = 920932.98
    grid: np.ndarray = field(default_factory=lambda: np.array([1.0, 2.0, 4.0]))
    ladder: tuple = (1e2, 1e4)
    eps: List[float] = field(default_factory=lambda: [0.5, 0.25])


# ------------------------------------------------------------------------------------------------ #
#                              DEPENDENCY INJECTION                                                #
# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="module", autouse=True)
def container():
    container = LevykinContainer()
    container.init_resources()
    container.wire(modules=["levykin.visual.seaborn.charts"])
    return container


# ------------------------------------------------------------------------------------------------ #
#                                     DATACLASS                                                    #
# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="module", autouse=False)
def dataklass():
    return TestDataClass()


# ------------------------------------------------------------------------------------------------ #
#                                        STREAMS                                                   #
# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="function", autouse=False)
def streams():
    return StreamFactory(seed=SEED)


# ------------------------------------------------------------------------------------------------ #
#                                         MODELS                                                   #
# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="module", autouse=False)
def stable():
    return StableLaw(alpha=1.5)


@pytest.fixture(scope="module", autouse=False)
def settings():
    return SchemeSettings(max_step=1.0, points_per_decade=50)


@pytest.fixture(scope="module", autouse=False)
def power_config(stable, settings):
    """alpha = 1.5, gamma = 0.5, beta = 2: the above-critical reference instance."""
    return KineticConfig(noise=stable, drift=power(1.0, 0.5), beta=2.0, scheme=settings)


@pytest.fixture(scope="module", autouse=False)
def linear_config(stable, settings):
    return KineticConfig(noise=stable, drift=linear(1.0), beta=2.0, scheme=settings)


@pytest.fixture(scope="module", autouse=False)
def free_config(stable, settings):
    return KineticConfig(noise=stable, drift=zero(), beta=2.0, scheme=settings)


@pytest.fixture(scope="module", autouse=False)
def critical_config(stable, settings):
    """gamma = 0.5 on the critical line beta = 1 + (gamma - 1) / alpha."""
    return KineticConfig(
        noise=stable, drift=power(1.0, 0.5), beta=1.0 + (0.5 - 1.0) / 1.5, scheme=settings
    )


# ------------------------------------------------------------------------------------------------ #
#                                      TEST BANNERS                                                #
# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="function", autouse=True)
def banner(request):
    """Logs the start and the duration of every test."""
    owner = request.cls.__name__ if request.cls is not None else request.module.__name__
    start = datetime.now()
    logger.info(
        f"\n\nStarted {owner} {request.node.name} at {start:%I:%M:%S %p} on {start:%m/%d/%Y}"
    )
    logger.info(double_line)
    yield
    end = datetime.now()
    duration = round((end - start).total_seconds(), 1)
    logger.info(
        f"\nCompleted {owner} {request.node.name} in {duration} seconds at "
        f"{end:%I:%M:%S %p} on {end:%m/%d/%Y}"
    )
    logger.info(single_line)
