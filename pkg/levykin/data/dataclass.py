#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/data/dataclass.py                                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Wednesday October 7th 2026 08:16:09 am                                              #
# Modified   : Saturday October 10th 2026 09:15:44 am                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Base record for every configuration and result object in the package."""
from abc import ABC
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd

from levykin.data import IMMUTABLE_TYPES, SEQUENCE_TYPES


# ------------------------------------------------------------------------------------------------ #
@dataclass
class DataClass(ABC):
    """Adds printing and dictionary/DataFrame export to dataclasses.

    Private attributes (leading underscore) are never exported.
    """

    def __repr__(self) -> str:  # pragma: no cover
        s = "{}({})".format(
            self.__class__.__name__,
            ", ".join(
                "{}={!r}".format(k, v)
                for k, v in self.__dict__.items()
                if isinstance(v, IMMUTABLE_TYPES) and not k.startswith("_")
            ),
        )
        return s

    def __str__(self) -> str:
        width = 32
        breadth = width * 2
        s = f"\n\n{self.__class__.__name__.center(breadth, ' ')}"
        d = self.as_dict()
        for k, v in d.items():
            if isinstance(v, IMMUTABLE_TYPES):
                k = k.replace("_", " ").capitalize()
                s += f"\n{k.rjust(width,' ')} | {v}"
        s += "\n\n"
        return s

    def as_dict(self) -> dict:
        """Returns a dictionary representation of the object, nested records included."""
        return {
            k: self._export_config(v) for k, v in self.__dict__.items() if not k.startswith("_")
        }

    @classmethod
    def _export_config(cls, v):
        """Returns v with records converted to dicts, recursively."""
        if isinstance(v, Enum):
            return v.value
        elif isinstance(v, (np.floating, np.integer, np.bool_)):
            return v.item()
        elif isinstance(v, IMMUTABLE_TYPES):
            return v
        elif isinstance(v, SEQUENCE_TYPES):
            return [cls._export_config(item) for item in v]
        elif isinstance(v, np.ndarray):
            return v.tolist()
        elif isinstance(v, dict):
            return {k: cls._export_config(item) for k, item in v.items()}
        elif hasattr(v, "as_dict"):
            return v.as_dict()
        else:
            return repr(v)

    def as_df(self) -> pd.DataFrame:
        """Returns the scalar fields in a one-row DataFrame."""
        d = {k: v for k, v in self.as_dict().items() if isinstance(v, IMMUTABLE_TYPES)}
        return pd.DataFrame(data=d, index=[0])
