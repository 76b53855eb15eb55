"""Options and helpers shared by the commands."""

from collections.abc import Sequence
from pathlib import Path

import click

from models import RunManifest
from services import util
from services.measures import NamedMeasure, builtin_measure

FORMATS = ("csv", "json", "table")


def output_options(f):
    """Add --format and --out to a command."""
    f = click.option(
        "--out",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Write results to this file instead of stdout.",
    )(f)
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(FORMATS),
        default="csv",
        show_default=True,
    )(f)


def seed_option(f):
    return click.option(
        "--seed",
        type=int,
        envvar="EFFNUM_SEED",
        default=None,
        help="Random seed (default: EFFNUM_SEED or the configured seed).",
    )(f)


def measure_names(
    measures: Sequence[str], alphas: Sequence[float], prefix: str = ""
) -> list[str]:
    """Flatten repeated or comma-separated --measure values and --alpha."""
    names = [
        name.strip()
        for option in measures
        for name in option.split(",")
        if name.strip()
    ]
    names.extend(f"{prefix}alpha:{a:g}" for a in alphas)
    return list(dict.fromkeys(names))


def resolve_measures(names: Sequence[str]) -> list[NamedMeasure]:
    return [builtin_measure(name) for name in names]


def manifest(command: str, config, **settings) -> RunManifest:
    echo = {
        "digits": config.FLOAT_DIGITS,
        "rng_algorithm": config.RNG_ALGORITHM,
        **settings,
    }
    return RunManifest(command=command, config=echo)


def emit(rows, output_format, run_manifest, out, config) -> None:
    util.emit(
        rows, output_format, run_manifest, out, digits=config.FLOAT_DIGITS
    )
