from pathlib import Path
from typing import TextIO

import click

from commands.options import (
    emit,
    manifest,
    measure_names,
    output_options,
)
from models import CountingVector, ProbabilityVector, QuantumState
from services.measures import measure_report
from services.quantum_counting import weights_in_basis
from services.util import parse_amplitude_rows, parse_weight_rows
from services.wrappers import exit_codes

DEFAULT_MEASURES = {
    "weights": ("n_star", "participation", "exp_shannon", "support"),
    "prob": ("f_star", "f_participation", "f_exp_shannon", "f_support"),
    "state": ("n_star", "participation", "exp_shannon", "support"),
}


def _counting_vectors(
    text: str, input_kind: str, renormalize: bool
) -> list[tuple[int, CountingVector]]:
    if input_kind == "state":
        return [
            (line, weights_in_basis(QuantumState(row, renormalize)))
            for line, row in parse_amplitude_rows(text)
        ]
    if input_kind == "prob":
        return [
            (line, ProbabilityVector(row, renormalize).to_counting())
            for line, row in parse_weight_rows(text)
        ]
    return [
        (line, CountingVector(row, renormalize))
        for line, row in parse_weight_rows(text)
    ]


@click.command("eval")
@click.argument("source", type=click.File("r"))
@click.option(
    "--measure",
    "-m",
    "measures",
    multiple=True,
    help="Measure name; repeat or separate by commas.",
)
@click.option(
    "--alpha", "alphas", multiple=True, type=float, help="Add alpha:<a>."
)
@click.option(
    "--input",
    "input_kind",
    type=click.Choice(["weights", "prob", "state"]),
    default="weights",
    show_default=True,
)
@click.option(
    "--renormalize",
    is_flag=True,
    help="Rescale rows that miss the sum or norm constraint.",
)
@output_options
@click.pass_obj
@exit_codes
def eval_cmd(
    config,
    source: TextIO,
    measures: tuple[str, ...],
    alphas: tuple[float, ...],
    input_kind: str,
    renormalize: bool,  # noqa: FBT001
    output_format: str,
    out: Path | None,
) -> None:
    """Evaluate effective numbers of the vectors in SOURCE, one per row."""
    prefix = "f_" if input_kind == "prob" else ""
    names = measure_names(measures, alphas, prefix)
    if not names:
        names = list(DEFAULT_MEASURES[input_kind])
    rows = []
    for line, w in _counting_vectors(source.read(), input_kind, renormalize):
        report = measure_report(w, names)
        rows.append({"row": line, "n": w.n, **report.values})
    run_manifest = manifest(
        "eval",
        config,
        source=source.name,
        input=input_kind,
        measures=names,
        renormalize=renormalize,
    )
    emit(rows, output_format, run_manifest, out, config)
