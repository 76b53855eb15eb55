from pathlib import Path
from typing import TextIO

import click

from commands.options import emit, manifest, output_options
from models import CountingVector, ProbabilityVector, TrialConfig
from services import enf_core
from services.util import parse_weight_rows
from services.wrappers import exit_codes


@click.command("sweep")
@click.argument("source", type=click.File("r"))
@click.option(
    "--alpha",
    "alphas",
    multiple=True,
    type=float,
    help="Alpha grid (repeatable; default: the configured grid).",
)
@click.option(
    "--input",
    "input_kind",
    type=click.Choice(["weights", "prob"]),
    default="weights",
    show_default=True,
)
@click.option("--renormalize", is_flag=True)
@output_options
@click.pass_obj
@exit_codes
def sweep_cmd(
    config,
    source: TextIO,
    alphas: tuple[float, ...],
    input_kind: str,
    renormalize: bool,  # noqa: FBT001
    output_format: str,
    out: Path | None,
) -> None:
    """Sweep the alpha family over each vector in SOURCE.

    Each row also carries the exact range of ENF values and of co-ENF
    values at the vector.
    """
    cfg = TrialConfig(
        seed=config.DEFAULT_SEED,
        alpha_grid=tuple(alphas) or config.ALPHA_GRID,
    )
    rows = []
    for line, values in parse_weight_rows(source.read()):
        w = (
            ProbabilityVector(values, renormalize).to_counting()
            if input_kind == "prob"
            else CountingVector(values, renormalize)
        )
        sweep = enf_core.alpha_sweep(w, cfg.alpha_grid)
        n_star, n_plus = enf_core.enf_range(w)
        co_lo, co_hi = enf_core.co_enf_range(w)
        rows.extend(
            {
                "row": line,
                "n": w.n,
                "alpha": alpha,
                "value": value,
                "co_value": w.n - value,
                "n_star": n_star,
                "n_plus": n_plus,
                "co_min": co_lo,
                "co_max": co_hi,
            }
            for alpha, value in sweep
        )
    run_manifest = manifest(
        "sweep",
        config,
        source=source.name,
        input=input_kind,
        alpha_grid=sorted({*cfg.alpha_grid, 1.0}),
        renormalize=renormalize,
    )
    emit(rows, output_format, run_manifest, out, config)
