#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/experiment/config.py                                                       #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 5th 2026 05:39:46 pm                                                 #
# Modified   : Wednesday October 7th 2026 06:30:46 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Experiment configuration: nested records parsed from one YAML file per experiment."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields, is_dataclass
from enum import Enum
from typing import Any, List, Optional, Union, get_type_hints

import yaml

from levykin.data.dataclass import DataClass
from levykin.exceptions import ConfigError, LevykinError
from levykin.kernel.config import KineticConfig, SchemeSettings
from levykin.kernel.drift import DriftSpec, drift_from_dict
from levykin.noise.measure import measure_from_dict
from levykin.noise.stable import StableLaw
from levykin.noise.triplet import LevyTriplet
from levykin.service.io import IOService

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
CRITICAL = "critical"


class Kind(Enum):
    NOISE_CHECK = "noise-check"
    SIMULATE = "simulate"
    MOMENTS = "moments"
    RESCALE_CONVERGE = "rescale-converge"
    CRITICAL_ERGODIC = "critical-ergodic"
    TRIPLET_LIMIT = "triplet-limit"
    METRIC = "metric"
    BROWNIAN_NEGLIGIBILITY = "brownian-negligibility"


# ------------------------------------------------------------------------------------------------ #
#                                      MODEL SECTIONS                                              #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class NoiseSection(DataClass):
    """Either a stable law (alpha, a_plus, a_minus) or a triplet (A, b, measure)."""

    kind: str = "stable"
    alpha: float = 1.5
    a_plus: float = 1.0
    a_minus: float = 1.0
    A: float = 0.0
    b: float = 0.0
    measure: Optional[dict] = None

    def build(self) -> Union[StableLaw, LevyTriplet]:
        if self.kind == "stable":
            return StableLaw(alpha=self.alpha, a_plus=self.a_plus, a_minus=self.a_minus)
        if self.kind == "triplet":
            return LevyTriplet(A=self.A, b=self.b, measure=measure_from_dict(self.measure))
        msg = f"Unknown noise kind {self.kind!r}; expected 'stable' or 'triplet'."
        logger.error(msg)
        raise ConfigError(msg, key="noise.kind")


@dataclass
class DriftSection(DataClass):
    """``power`` gives rho sgn(v)|v|^gamma; ``homogeneous`` takes F1, Fm1; ``bounded`` has no
    parameters."""

    kind: str = "power"
    rho: float = 1.0
    gamma: float = 0.5
    F1: Optional[float] = None
    Fm1: Optional[float] = None

    def build(self) -> DriftSpec:
        if self.kind == "power":
            return drift_from_dict({"kind": "power", "rho": self.rho, "gamma": self.gamma})
        if self.kind == "homogeneous":
            F1 = self.rho if self.F1 is None else self.F1
            Fm1 = -F1 if self.Fm1 is None else self.Fm1
            spec = {"kind": "homogeneous", "gamma": self.gamma, "F1": F1, "Fm1": Fm1}
            return drift_from_dict(spec)
        return drift_from_dict({"kind": self.kind})


@dataclass
class KineticSection(DataClass):
    """beta may be the string 'critical' for beta = 1 + (gamma - 1) / alpha."""

    beta: Union[float, str] = 2.0
    t0: float = 1.0
    v0: float = 1.0
    x0: float = 0.0


# ------------------------------------------------------------------------------------------------ #
#                                     EXPERIMENT SECTIONS                                          #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class NoiseCheckSection(DataClass):
    n_paths: int = 100_000
    dt: float = 0.01
    hill_fraction: float = 0.01
    hill_tolerance: float = 0.1
    ks_tolerance: float = 0.015


@dataclass
class SimulateSection(DataClass):
    horizon: float = 100.0
    n_paths: int = 10
    paths_written: int = 1


@dataclass
class MomentsSection(DataClass):
    horizon: float = 1000.0
    kappa: float = 0.5
    n_paths: int = 10_000
    n_checkpoints: int = 21
    slope_tolerance: float = 0.15
    min_slope: float = 0.1
    n_resamples: int = 500


@dataclass
class RescaleSection(DataClass):
    eps: List[float] = field(default_factory=lambda: [2.0**-k for k in range(2, 8)])
    horizon: float = 1.0
    n_paths: int = 1000
    q_tolerance: float = 0.2


@dataclass
class ErgodicSection(DataClass):
    eps: float = 1e-3
    t1_factor: float = 2.0
    n_paths: int = 10_000
    n_samples: int = 10_000
    burn_in: float = 20.0
    thinning: float = 1.0
    step: float = 0.01
    ks_tolerance: float = 0.05
    halves_tolerance: float = 0.03
    modulus_delta: float = 0.1


@dataclass
class TripletSection(DataClass):
    eps: List[float] = field(default_factory=lambda: [1e-2, 1e-4, 1e-6])
    tolerance: float = 0.01


@dataclass
class MetricSection(DataClass):
    n_terms: int = 20
    lambda_search: str = "coarse-grid"
    n_pairs: int = 100


@dataclass
class BrownianSection(DataClass):
    eps: List[float] = field(default_factory=lambda: [2.0**-k for k in range(2, 9)])
    n_paths: int = 1000
    sigma: float = 1.0
    horizon: float = 1.0
    theta: Optional[float] = None
    min_ratio: float = 2.0


# ------------------------------------------------------------------------------------------------ #
#                                     EXPERIMENT CONFIG                                            #
# ------------------------------------------------------------------------------------------------ #
@dataclass
class ExperimentConfig(DataClass):
    kind: str = Kind.SIMULATE.value
    seed: int = 0
    out: str = "results"
    jobs: int = 1
    charts: bool = True
    noise: NoiseSection = field(default_factory=NoiseSection)
    drift: DriftSection = field(default_factory=DriftSection)
    kinetic: KineticSection = field(default_factory=KineticSection)
    scheme: SchemeSettings = field(default_factory=SchemeSettings)
    noise_check: NoiseCheckSection = field(default_factory=NoiseCheckSection)
    simulate: SimulateSection = field(default_factory=SimulateSection)
    moments: MomentsSection = field(default_factory=MomentsSection)
    rescale_converge: RescaleSection = field(default_factory=RescaleSection)
    critical_ergodic: ErgodicSection = field(default_factory=ErgodicSection)
    triplet_limit: TripletSection = field(default_factory=TripletSection)
    metric: MetricSection = field(default_factory=MetricSection)
    brownian_negligibility: BrownianSection = field(default_factory=BrownianSection)

    def __post_init__(self) -> None:
        try:
            Kind(self.kind)
        except ValueError:
            kinds = [k.value for k in Kind]
            msg = f"Unknown experiment kind {self.kind!r}; expected one of {kinds}."
            logger.error(msg)
            raise ConfigError(msg, key="kind")
        if not 0 <= int(self.seed) < 2**64:
            msg = f"Seed must be a 64-bit unsigned integer, got {self.seed}."
            logger.error(msg)
            raise ConfigError(msg, key="seed")

    @property
    def experiment(self) -> Kind:
        return Kind(self.kind)

    @property
    def section(self) -> DataClass:
        """Parameters of the configured experiment kind."""
        return getattr(self, self.kind.replace("-", "_"))

    def kinetic_config(self) -> KineticConfig:
        """The equation instance; a 'critical' beta is resolved from alpha and gamma."""
        beta = self.kinetic.beta
        try:
            noise = self.noise.build()
            drift = self.drift.build()
            if beta == CRITICAL:
                alpha = noise.alpha
                if alpha is None:
                    msg = "beta = 'critical' needs a noise with an index alpha."
                    logger.error(msg)
                    raise ConfigError(msg, key="kinetic.beta")
                beta = 1.0 + (drift.gamma - 1.0) / alpha
            return KineticConfig(
                noise=noise,
                drift=drift,
                beta=float(beta),
                t0=self.kinetic.t0,
                v0=self.kinetic.v0,
                x0=self.kinetic.x0,
                scheme=self.scheme,
            )
        except ConfigError:
            raise
        except LevykinError as e:
            msg = f"Invalid model configuration: {e}"
            logger.error(msg)
            raise ConfigError(msg, key="kinetic") from e

    def with_overrides(
        self, seed: Optional[int] = None, out: Optional[str] = None, jobs: Optional[int] = None
    ) -> ExperimentConfig:
        """Command line values take precedence over the file."""
        d = self.as_dict()
        for key, value in (("seed", seed), ("out", out), ("jobs", jobs)):
            if value is not None:
                d[key] = value
        return parse_config(d)


# ------------------------------------------------------------------------------------------------ #
#                                          PARSING                                                 #
# ------------------------------------------------------------------------------------------------ #
def _build(cls: type, data: Any, path: str) -> Any:
    if data is None:
        data = {}
    if not isinstance(data, dict):
        msg = f"Section {path or '<root>'} must be a mapping, got {type(data).__name__}."
        logger.error(msg)
        raise ConfigError(msg, key=path or None)
    hints = get_type_hints(cls)
    names = {f.name for f in fields(cls)}
    unknown = sorted(set(data) - names)
    if unknown:
        key = ".".join(filter(None, [path, str(unknown[0])]))
        msg = f"Unknown configuration key {key!r}."
        logger.error(msg)
        raise ConfigError(msg, key=key)
    kwargs = {}
    for name, value in data.items():
        hint = hints[name]
        key = ".".join(filter(None, [path, name]))
        if isinstance(hint, type) and is_dataclass(hint):
            kwargs[name] = _build(hint, value, key)
        else:
            kwargs[name] = value
    try:
        return cls(**kwargs)
    except ConfigError:
        raise
    except (LevykinError, TypeError, ValueError) as e:
        msg = f"Invalid values in section {path or '<root>'}: {e}"
        logger.error(msg)
        raise ConfigError(msg, key=path or None) from e


def parse_config(data: Optional[dict]) -> ExperimentConfig:
    """Builds the config from a nested dictionary, rejecting unknown keys."""
    return _build(ExperimentConfig, data, "")


def load_config(filepath: str, defaults: Optional[dict] = None) -> ExperimentConfig:
    """Reads a YAML experiment file. Syntax errors report the offending line.

    Top-level ``defaults`` (the packaged runner settings) apply where the file is silent.
    """
    try:
        data = IOService.read(filepath)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        line = None if mark is None else mark.line + 1
        msg = f"YAML syntax error in {filepath}" + ("" if line is None else f" at line {line}")
        logger.error(msg)
        raise ConfigError(msg, line=line) from e
    except FileNotFoundError as e:
        msg = f"Experiment file {filepath} does not exist."
        logger.error(msg)
        raise ConfigError(msg) from e
    logger.info(f"Loaded experiment configuration from {filepath}.")
    if defaults and (data is None or isinstance(data, dict)):
        data = {**defaults, **(data or {})}
    return parse_config(data)
