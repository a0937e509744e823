#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/experiment/report.py                                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 02:47:13 pm                                                #
# Modified   : Friday October 16th 2026 07:57:19 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Experiment reports: tables, verdicts against theoretical references, charts and run metadata."""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from levykin.data.dataclass import DataClass
from levykin.experiment.config import ExperimentConfig
from levykin.service.io import IOService
from levykin.visual.base import Visual

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
VERDICT_COLUMNS = ["check", "value", "reference", "lower", "upper", "passed"]


# ------------------------------------------------------------------------------------------------ #
@dataclass
class Verdict(DataClass):
    """``value`` must lie in [lower, upper]; ``reference`` is the theoretical value it targets."""

    check: str
    value: float
    lower: float = -np.inf
    upper: float = np.inf
    reference: Optional[float] = None

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.value) and self.lower <= self.value <= self.upper)

    @classmethod
    def within(cls, check: str, value: float, reference: float, tolerance: float) -> Verdict:
        return cls(
            check=check,
            value=value,
            lower=reference - tolerance,
            upper=reference + tolerance,
            reference=reference,
        )

    @classmethod
    def below(cls, check: str, value: float, upper: float) -> Verdict:
        return cls(check=check, value=value, upper=upper, reference=None)

    @classmethod
    def above(cls, check: str, value: float, lower: float) -> Verdict:
        return cls(check=check, value=value, lower=lower, reference=None)

    @classmethod
    def holds(cls, check: str, condition: bool) -> Verdict:
        return cls(check=check, value=float(bool(condition)), lower=1.0, upper=1.0, reference=1.0)


# ------------------------------------------------------------------------------------------------ #
@dataclass
class ExperimentReport(DataClass):
    """Everything an experiment produced. Charts are built lazily so they are only drawn when
    written."""

    config: ExperimentConfig
    tables: Dict[str, pd.DataFrame] = field(default_factory=dict)
    verdicts: List[Verdict] = field(default_factory=list)
    charts: Dict[str, Callable[[], Visual]] = field(default_factory=dict)
    runtime: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def verdict_frame(self) -> pd.DataFrame:
        rows = [
            {
                "check": v.check,
                "value": v.value,
                "reference": np.nan if v.reference is None else v.reference,
                "lower": v.lower,
                "upper": v.upper,
                "passed": v.passed,
            }
            for v in self.verdicts
        ]
        return pd.DataFrame(rows, columns=VERDICT_COLUMNS)

    def write(self, out: Optional[str] = None) -> str:
        """Writes every artefact below ``out`` (default: the configured directory)."""
        directory = out or self.config.out
        os.makedirs(directory, exist_ok=True)
        resolved = self.config.as_dict()
        for name, table in self.tables.items():
            IOService.write(os.path.join(directory, f"{name}.csv"), table, header=resolved)
        IOService.write(
            os.path.join(directory, "verdicts.csv"), self.verdict_frame(), header=resolved
        )
        IOService.write(os.path.join(directory, "resolved_config.yml"), resolved)
        if self.config.charts:
            for name, build in self.charts.items():
                build().save(os.path.join(directory, f"{name}.svg"))
        IOService.write(os.path.join(directory, "runtime.json"), dict(self.runtime))
        logger.info(
            f"Wrote {len(self.tables)} tables and {len(self.verdicts)} verdicts to {directory}; "
            f"{'all checks passed' if self.passed else 'some checks failed'}."
        )
        return directory
