#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/experiment/cli.py                                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 3rd 2026 01:09:38 pm                                               #
# Modified   : Wednesday October 7th 2026 01:27:56 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Command line entry point: ``levykin run`` and ``levykin branches``."""
from __future__ import annotations

import logging
from typing import List, Optional

import typer

from levykin import container
from levykin.exceptions import ConfigError, LevykinError
from levykin.experiment.branches import (
    DEFAULT_ALPHAS,
    DEFAULT_BETAS,
    DEFAULT_GAMMAS,
    list_branches,
)
from levykin.experiment.config import load_config
from levykin.experiment.runner import run_experiment
from levykin.service.io import IOService

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
EXIT_FAILED = 1
EXIT_CONFIG = 2

app = typer.Typer(
    help="Simulate kinetic equations driven by Levy noise and check their asymptotics.",
    add_completion=False,
)


# ------------------------------------------------------------------------------------------------ #
@app.command()
def run(
    config: str = typer.Argument(..., help="YAML experiment file."),
    seed: Optional[int] = typer.Option(None, help="Overrides the seed of the file."),
    out: Optional[str] = typer.Option(None, help="Output directory."),
    jobs: Optional[int] = typer.Option(None, help="Parallel jobs for path simulation."),
) -> None:
    """Runs one experiment and writes its report. Exits 1 when a check fails."""
    container.init_resources()
    defaults = container.config.runner() or {}
    try:
        experiment = load_config(config, defaults=defaults).with_overrides(
            seed=seed, out=out, jobs=jobs
        )
    except ConfigError as e:
        where = "".join(
            [f" (key {e.key})" if e.key else "", f" (line {e.line})" if e.line else ""]
        )
        typer.echo(f"Configuration error{where}: {e}", err=True)
        raise typer.Exit(code=EXIT_CONFIG)
    try:
        report = run_experiment(experiment)
    except LevykinError as e:
        typer.echo(f"Experiment {experiment.kind} failed: {e}", err=True)
        raise typer.Exit(code=EXIT_FAILED)
    directory = report.write()
    typer.echo(report.verdict_frame().to_string(index=False))
    typer.echo(f"Report written to {directory}.")
    raise typer.Exit(code=report.exit_code)


@app.command()
def branches(
    alpha: Optional[List[float]] = typer.Option(None, help="Noise index, repeatable."),
    gamma: Optional[List[float]] = typer.Option(None, help="Drift exponent, repeatable."),
    beta: Optional[List[float]] = typer.Option(None, help="Time exponent, repeatable."),
    regime: str = typer.Option("stable", help="stable, H1 or H2."),
    alpha0: Optional[float] = typer.Option(None, help="Tail-moment index of an H2 measure."),
    sign_ok: bool = typer.Option(True, help="x F(x) >= 0 holds."),
    b_zero: bool = typer.Option(True, help="The triplet has no drift."),
    out: Optional[str] = typer.Option(None, help="Also write the table to this CSV file."),
) -> None:
    """Prints p(gamma), theta and the critical lines for a sweep of parameters."""
    container.init_resources()
    try:
        table = list_branches(
            alpha or DEFAULT_ALPHAS,
            gamma or DEFAULT_GAMMAS,
            beta or DEFAULT_BETAS,
            regime=regime,
            sign_ok=sign_ok,
            b_zero=b_zero,
            alpha0=alpha0,
        )
    except ValueError as e:
        typer.echo(f"Invalid sweep: {e}", err=True)
        raise typer.Exit(code=EXIT_CONFIG)
    typer.echo(table.to_string(index=False))
    if out is not None:
        IOService.write(out, table)
