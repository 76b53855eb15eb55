from pathlib import Path
from typing import TextIO

import click

from commands.options import (
    emit,
    manifest,
    measure_names,
    output_options,
    resolve_measures,
)
from models import CountingFunctionSpec, QuantumState, SubspacePartition
from services import quantum_counting
from services.exceptions import DomainError, ParseError
from services.util import (
    parse_amplitude_rows,
    parse_orthonormal_set,
    parse_partition,
)
from services.wrappers import exit_codes


def _specs(names: list[str]) -> list[CountingFunctionSpec]:
    specs = []
    for measure in resolve_measures(names):
        if measure.spec is None:
            msg = (
                f"{measure.name} has no counting function; "
                "count takes n_star, alpha:<a> or support"
            )
            raise DomainError(msg)
        specs.append(measure.spec)
    return specs


def _read_structure(structure: str | None) -> str:
    if structure is None:
        msg = "subset and partition modes need --structure"
        raise ParseError(msg)
    path = Path(structure)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return structure


def _count(
    psi: QuantumState,
    mode: str,
    structure: str,
    spec: CountingFunctionSpec,
    total_blocks: int | None,
) -> float:
    if mode == "subset":
        subset = parse_orthonormal_set(structure, psi.n)
        return quantum_counting.count_subset(psi, subset, spec)
    if mode == "partition":
        partition: SubspacePartition = parse_partition(structure, psi.n)
        if partition.is_full and total_blocks is None:
            return quantum_counting.count_subspaces(psi, partition, spec)
        return quantum_counting.count_subspace_subset(
            psi, partition, spec, total_blocks
        )
    return quantum_counting.count_identities(psi, spec)


@click.command("count")
@click.argument("state_file", type=click.File("r"))
@click.option(
    "--mode",
    type=click.Choice(["basis", "subset", "partition"]),
    default="basis",
    show_default=True,
)
@click.option(
    "--structure",
    default=None,
    help="Subset vectors file, or a partition like '1,2|3,4' or its file.",
)
@click.option(
    "--measure",
    "-m",
    "measures",
    multiple=True,
    help="n_star, alpha:<a> or support; repeat or separate by commas.",
)
@click.option("--alpha", "alphas", multiple=True, type=float)
@click.option("--total-blocks", type=int, default=None)
@click.option("--renormalize", is_flag=True)
@output_options
@click.pass_obj
@exit_codes
def count_cmd(
    config,
    state_file: TextIO,
    mode: str,
    structure: str | None,
    measures: tuple[str, ...],
    alphas: tuple[float, ...],
    total_blocks: int | None,
    renormalize: bool,  # noqa: FBT001
    output_format: str,
    out: Path | None,
) -> None:
    """Count the basis states, subset vectors or subspaces that the states
    in STATE_FILE effectively occupy.
    """
    names = measure_names(measures, alphas) or ["n_star"]
    specs = _specs(names)
    structure_text = "" if mode == "basis" else _read_structure(structure)
    rows = []
    for line, amplitudes in parse_amplitude_rows(state_file.read()):
        psi = QuantumState(amplitudes, renormalize)
        row: dict = {"row": line, "n": psi.n, "mode": mode}
        for spec in specs:
            row[spec.name] = _count(
                psi, mode, structure_text, spec, total_blocks
            )
            if mode == "basis":
                row[f"co:{spec.name}"] = quantum_counting.co_count_identities(
                    psi, spec
                )
        rows.append(row)
    run_manifest = manifest(
        "count",
        config,
        source=state_file.name,
        mode=mode,
        structure=structure,
        measures=[spec.name for spec in specs],
        total_blocks=total_blocks,
        renormalize=renormalize,
    )
    emit(rows, output_format, run_manifest, out, config)
