#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/data/path.py                                                               #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 5th 2026 10:18:57 am                                                 #
# Modified   : Thursday October 8th 2026 01:50:14 pm                                               #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Trajectory records: a single càdlàg path and a bundle of paths on a shared grid."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
import pandas as pd

from levykin.data.dataclass import DataClass
from levykin.exceptions import DomainMismatchError, InputError
from levykin.service.io import IOService

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
LOOKUP_RTOL = 1e-12
PATH_COLUMNS = ["time", "value", "is_jump"]


# ------------------------------------------------------------------------------------------------ #
def locate(t: np.ndarray, times: np.ndarray, rtol: float = LOOKUP_RTOL) -> np.ndarray:
    """Index of the last grid point at or before each requested time.

    A requested time within a relative ``rtol`` below a grid point resolves to that grid point,
    so times produced by floating point maps (phi(psi(t)), eps * (t / eps)) land on the grid.
    """
    times = np.asarray(times, dtype=float)
    slack = rtol * np.maximum(1.0, np.abs(times))
    idx = np.searchsorted(t, times + slack, side="right") - 1
    if np.any(idx < 0):
        msg = (
            f"Requested time {float(np.min(times))} precedes the start of the path at {t[0]}."
        )
        logger.error(msg)
        raise DomainMismatchError(msg)
    return idx


def check_grid(t: np.ndarray) -> None:
    if t.ndim != 1 or len(t) < 2:
        msg = f"A time grid needs at least two points, got shape {t.shape}."
        logger.error(msg)
        raise InputError(msg)
    if not np.all(np.diff(t) > 0):
        msg = "Time grid must be strictly increasing."
        logger.error(msg)
        raise InputError(msg)


# ------------------------------------------------------------------------------------------------ #
#                                        SAMPLE PATH                                               #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class SamplePath(DataClass):
    """Time grid and càdlàg values, with the recorded jumps and explosion metadata.

    Values after the explosion time are +/- inf (absorbed). ``jumps`` is an array of
    (time, size) rows for every simulated jump at or above the cutoff.
    """

    t: np.ndarray
    v: np.ndarray
    jumps: Optional[np.ndarray] = None
    exploded: bool = False
    explosion_time: Optional[float] = None

    def __post_init__(self) -> None:
        self.t = np.asarray(self.t, dtype=float)
        self.v = np.asarray(self.v, dtype=float)
        check_grid(self.t)
        if self.v.shape != self.t.shape:
            msg = f"Values shape {self.v.shape} does not match grid shape {self.t.shape}."
            logger.error(msg)
            raise InputError(msg)
        if self.jumps is not None:
            self.jumps = np.asarray(self.jumps, dtype=float).reshape(-1, 2)
        if self.exploded:
            if self.explosion_time is None or not (
                self.t[0] <= self.explosion_time <= self.t[-1]
            ):
                msg = f"Explosion time {self.explosion_time} outside [{self.t[0]}, {self.t[-1]}]."
                logger.error(msg)
                raise InputError(msg)

    def __len__(self) -> int:
        return len(self.t)

    @property
    def start(self) -> float:
        return float(self.t[0])

    @property
    def end(self) -> float:
        return float(self.t[-1])

    @property
    def absorbed(self) -> np.ndarray:
        return ~np.isfinite(self.v)

    def covers(self, lo: float, hi: float) -> bool:
        return self.t[0] <= lo * (1 + LOOKUP_RTOL) and self.t[-1] >= hi * (1 - LOOKUP_RTOL)

    def at(self, times: np.ndarray) -> np.ndarray:
        """Evaluates the càdlàg step interpolation at the given times."""
        return self.v[locate(self.t, times)]

    def increments(self) -> np.ndarray:
        return np.diff(self.v)

    def jump_mask(self) -> np.ndarray:
        """Flags the grid points at which a recorded jump happened."""
        if self.jumps is None or len(self.jumps) == 0:
            return np.zeros(len(self.t), dtype=bool)
        return np.isin(self.t, self.jumps[:, 0])

    def window(self, lo: float, hi: float) -> SamplePath:
        """Restriction to the grid points in [lo, hi]."""
        keep = (self.t >= lo * (1 - LOOKUP_RTOL)) & (self.t <= hi * (1 + LOOKUP_RTOL))
        jumps = None
        if self.jumps is not None:
            jumps = self.jumps[(self.jumps[:, 0] >= lo) & (self.jumps[:, 0] <= hi)]
        exploded = self.exploded and self.explosion_time <= hi
        return SamplePath(
            t=self.t[keep],
            v=self.v[keep],
            jumps=jumps,
            exploded=exploded,
            explosion_time=self.explosion_time if exploded else None,
        )

    def subsample(self, every: int) -> SamplePath:
        """Keeps every ``every``-th grid point, the last point included."""
        idx = np.arange(0, len(self.t), every)
        if idx[-1] != len(self.t) - 1:
            idx = np.append(idx, len(self.t) - 1)
        return SamplePath(
            t=self.t[idx],
            v=self.v[idx],
            jumps=self.jumps,
            exploded=self.exploded,
            explosion_time=self.explosion_time,
        )

    def shift(self, value: float) -> SamplePath:
        return SamplePath(
            t=self.t,
            v=self.v + value,
            jumps=self.jumps,
            exploded=self.exploded,
            explosion_time=self.explosion_time,
        )

    # -------------------------------------------------------------------------------------------- #
    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"time": self.t, "value": self.v, "is_jump": self.jump_mask()})

    @classmethod
    def from_frame(cls, df: pd.DataFrame) -> SamplePath:
        missing = set(PATH_COLUMNS) - set(df.columns)
        if missing:
            msg = f"Path table is missing columns {sorted(missing)}."
            logger.error(msg)
            raise InputError(msg)
        t = df["time"].to_numpy(dtype=float)
        v = df["value"].to_numpy(dtype=float)
        flags = df["is_jump"].astype(bool).to_numpy()
        jumps = None
        if flags.any():
            idx = np.flatnonzero(flags)
            # Jump sizes are recovered from the left limits at the flagged points.
            left = np.where(idx > 0, v[np.maximum(idx - 1, 0)], v[idx])
            jumps = np.column_stack([t[idx], v[idx] - left])
        absorbed = ~np.isfinite(v)
        exploded = bool(absorbed.any())
        explosion_time = float(t[np.argmax(absorbed)]) if exploded else None
        return cls(t=t, v=v, jumps=jumps, exploded=exploded, explosion_time=explosion_time)

    @classmethod
    def read_csv(cls, filepath: str) -> SamplePath:
        return cls.from_frame(IOService.read(filepath, comment="#"))

    def write_csv(self, filepath: str, header: Optional[dict] = None) -> None:
        IOService.write(filepath, data=self.to_frame(), header=header)


# ------------------------------------------------------------------------------------------------ #
#                                         PATH BUNDLE                                              #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class PathBundle(DataClass):
    """Many paths sharing one time grid. ``values`` has shape (n_paths, n_times)."""

    t: np.ndarray
    values: np.ndarray
    jumps: Optional[List[np.ndarray]] = None
    exploded: np.ndarray = field(default=None)
    explosion_time: np.ndarray = field(default=None)

    def __post_init__(self) -> None:
        self.t = np.asarray(self.t, dtype=float)
        self.values = np.atleast_2d(np.asarray(self.values, dtype=float))
        check_grid(self.t)
        if self.values.shape[1] != len(self.t):
            msg = f"Values shape {self.values.shape} does not match grid length {len(self.t)}."
            logger.error(msg)
            raise InputError(msg)
        if self.exploded is None:
            self.exploded = np.zeros(self.n_paths, dtype=bool)
        if self.explosion_time is None:
            self.explosion_time = np.full(self.n_paths, np.nan)

    def __len__(self) -> int:
        return self.n_paths

    @property
    def n_paths(self) -> int:
        return self.values.shape[0]

    @property
    def exploded_fraction(self) -> float:
        return float(np.mean(self.exploded))

    def path(self, i: int) -> SamplePath:
        jumps = None if self.jumps is None else self.jumps[i]
        exploded = bool(self.exploded[i])
        return SamplePath(
            t=self.t,
            v=self.values[i],
            jumps=jumps,
            exploded=exploded,
            explosion_time=float(self.explosion_time[i]) if exploded else None,
        )

    def at(self, times: np.ndarray) -> np.ndarray:
        """Càdlàg evaluation of every path, shape (n_paths, len(times))."""
        return self.values[:, locate(self.t, times)]

    def increments(self) -> np.ndarray:
        return np.diff(self.values, axis=1)

    def covers(self, lo: float, hi: float) -> bool:
        return self.t[0] <= lo * (1 + LOOKUP_RTOL) and self.t[-1] >= hi * (1 - LOOKUP_RTOL)

    def subsample(self, every: int) -> PathBundle:
        idx = np.arange(0, len(self.t), every)
        if idx[-1] != len(self.t) - 1:
            idx = np.append(idx, len(self.t) - 1)
        return PathBundle(
            t=self.t[idx],
            values=self.values[:, idx],
            jumps=self.jumps,
            exploded=self.exploded,
            explosion_time=self.explosion_time,
        )

    @classmethod
    def stack(cls, paths: List[SamplePath]) -> PathBundle:
        """Bundles single paths that share a grid."""
        t = paths[0].t
        for path in paths[1:]:
            if path.t.shape != t.shape or not np.array_equal(path.t, t):
                msg = "Only paths on an identical grid can be bundled."
                logger.error(msg)
                raise InputError(msg)
        return cls(
            t=t,
            values=np.vstack([p.v for p in paths]),
            jumps=[p.jumps for p in paths],
            exploded=np.array([p.exploded for p in paths]),
            explosion_time=np.array(
                [p.explosion_time if p.exploded else np.nan for p in paths], dtype=float
            ),
        )
