#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/service/parallel.py                                                        #
# ------------------------------------------------------------------------------------------------ #
# Created    : Friday October 9th 2026 06:18:37 pm                                                 #
# Modified   : Tuesday October 13th 2026 12:22:45 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Chunked fan-out of per-path work with joblib. Results are reassembled in path order."""
import logging
from typing import Any, Callable, List, Sequence

import numpy as np
from joblib import Parallel, delayed

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
DEFAULT_CHUNK = 512


def chunk_ranges(start: int, n: int, chunk_size: int = DEFAULT_CHUNK) -> List[range]:
    """Splits path indices [start, start + n) into contiguous chunks."""
    return [range(i, min(i + chunk_size, start + n)) for i in range(start, start + n, chunk_size)]


def fan_out(
    func: Callable[[range], Any],
    start: int,
    n: int,
    n_jobs: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
) -> List[Any]:
    """Applies func to every chunk of path indices, returning the results in index order.

    Each chunk derives its random streams from the path indices it receives, so the output does
    not depend on n_jobs or on the chunk size.
    """
    chunks = chunk_ranges(start, n, chunk_size)
    if n_jobs == 1 or len(chunks) == 1:
        return [func(chunk) for chunk in chunks]
    logger.debug(f"Fanning out {n} paths over {len(chunks)} chunks on {n_jobs} jobs.")
    return Parallel(n_jobs=n_jobs)(delayed(func)(chunk) for chunk in chunks)


def stack_rows(parts: Sequence[np.ndarray]) -> np.ndarray:
    return np.concatenate([np.atleast_2d(p) for p in parts], axis=0)
