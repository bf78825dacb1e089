"""Command line front end.

Subcommands: ``check`` (consistency of an assessment), ``choose``
(evaluate the choice function on an option set), ``simplify`` (print the
simplified generators and their sizes) and ``experiment`` (run a
benchmark and write CSV).  All JSON output uses sorted keys; options are
printed in input order.  Exit codes: 0 on success, 1 when ``check``
finds an inconsistency, 2 on bad input.
"""

from __future__ import annotations

import os
import sys

import click

from .bench import (
    EPSILON_COLUMNS,
    SIZE_COLUMNS,
    TIMING_COLUMNS,
    ExperimentConfig,
    run_epsilon_experiment,
    run_size_experiment,
    run_timing_experiment,
    write_csv,
)
from .choice import Method, check_consistency, full_generator, natural_extension
from .core import InputError, ToleranceConfig
from .generators import (
    assessment_to_conjunctive,
    assessment_to_conjunctive_naive,
    disjunctive_size,
)
from .io import dump_canonical, load_json, parse_assessment, parse_options

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_INPUT_ERROR = 2


def tolerance_from_env() -> ToleranceConfig:
    """Default tolerances, with CHOIX_LP_TOL overriding the LP slack."""
    raw = os.environ.get("CHOIX_LP_TOL")
    if raw is None:
        return ToleranceConfig()
    try:
        return ToleranceConfig(lp_tol=float(raw))
    except (ValueError, InputError) as exc:
        raise InputError(f"bad CHOIX_LP_TOL value {raw!r}: {exc}") from exc


def _method(name: str) -> Method:
    return Method.parse(name)


method_option = click.option(
    "--method",
    default="full",
    type=click.Choice([m.value for m in Method]),
    show_default=True,
    help="Evaluation method.",
)


@click.group()
def main() -> None:
    """Consistency checking and choice evaluation for finite assessments."""


def _fail_input(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT_ERROR)


@main.command()
@click.option("--assessment", "assessment_path", required=True, type=click.Path())
@method_option
def check(assessment_path: str, method: str) -> None:
    """Check whether an assessment admits a coherent extension."""
    try:
        cfg = tolerance_from_env()
        a = parse_assessment(load_json(assessment_path))
        consistent = check_consistency(a, _method(method), cfg)
    except InputError as exc:
        _fail_input(str(exc))
        return
    click.echo(dump_canonical({"consistent": consistent}))
    sys.exit(EXIT_OK if consistent else EXIT_INCONSISTENT)


@main.command()
@click.option("--assessment", "assessment_path", required=True, type=click.Path())
@click.option("--options", "options_path", required=True, type=click.Path())
@method_option
def choose(assessment_path: str, options_path: str, method: str) -> None:
    """Evaluate the induced choice function on an option set."""
    try:
        cfg = tolerance_from_env()
        a = parse_assessment(load_json(assessment_path))
        options = parse_options(load_json(options_path))
        result = natural_extension(options, a, _method(method), cfg)
    except InputError as exc:
        _fail_input(str(exc))
        return
    click.echo(
        dump_canonical(
            {
                "chosen": [list(v) for v in result.chosen],
                "rejected": [list(v) for v in result.rejected],
                "consistent": result.consistent,
            }
        )
    )


@main.command()
@click.option("--assessment", "assessment_path", required=True, type=click.Path())
def simplify(assessment_path: str) -> None:
    """Print the simplified generators of an assessment, with sizes."""
    try:
        cfg = tolerance_from_env()
        a = parse_assessment(load_json(assessment_path))
        naive = assessment_to_conjunctive_naive(a)
        conj = assessment_to_conjunctive(a, cfg)
        full = full_generator(a, cfg)
    except InputError as exc:
        _fail_input(str(exc))
        return
    click.echo(
        dump_canonical(
            {
                "conjunctive": [[list(v) for v in hs] for hs in conj.sets],
                "disjunctive": [[list(v) for v in g] for g in full.sets],
                "sizes": {
                    "h_naive": len(naive.sets),
                    "h_simplified": len(conj.sets),
                    "g_naive": str(disjunctive_size(naive)),
                    "g_full": len(full.sets),
                },
            }
        )
    )


@main.command()
@click.argument("kind", type=click.Choice(["size", "epsilon", "timing"]))
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--out", "out_path", required=True, type=click.Path())
def experiment(kind: str, config_path: str, out_path: str) -> None:
    """Run a benchmark experiment and write its rows as CSV."""
    try:
        tol = tolerance_from_env()
        cfg = ExperimentConfig.from_doc(load_json(config_path))
    except InputError as exc:
        _fail_input(str(exc))
        return
    if kind == "size":
        rows, columns = run_size_experiment(cfg, tol), SIZE_COLUMNS
    elif kind == "epsilon":
        rows, columns = run_epsilon_experiment(cfg, tol), EPSILON_COLUMNS
    else:
        rows, columns = run_timing_experiment(cfg, tol), TIMING_COLUMNS
    write_csv(rows, columns, out_path)
    click.echo(f"wrote {len(rows)} rows to {out_path}")


if __name__ == "__main__":
    main()
