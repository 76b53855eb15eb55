from pathlib import Path

import click

from commands.options import emit, manifest, output_options, seed_option
from models import Band, Boundary, LatticeModel
from services.exceptions import ParseError
from services.localization_lab import STATE_MEASURES, scaling_study
from services.util import parse_sizes
from services.wrappers import exit_codes


@click.command("localize")
@click.option(
    "--sizes",
    default=None,
    help="Comma-separated, strictly increasing chain lengths.",
)
@click.option("--ensemble", type=int, default=None)
@click.option(
    "--band",
    type=click.Choice([b.value for b in Band]),
    default=Band.GROUND.value,
    show_default=True,
)
@click.option("--disorder", type=float, default=0.0, show_default=True)
@click.option("--hopping", type=float, default=-1.0, show_default=True)
@click.option(
    "--boundary",
    type=click.Choice([b.value for b in Boundary]),
    default=Boundary.OPEN.value,
    show_default=True,
)
@click.option(
    "--measure",
    type=click.Choice(STATE_MEASURES),
    default="f_star",
    show_default=True,
)
@seed_option
@output_options
@click.pass_obj
@exit_codes
def localize_cmd(
    config,
    sizes: str | None,
    ensemble: int | None,
    band: str,
    disorder: float,
    hopping: float,
    boundary: str,
    measure: str,
    seed: int | None,
    output_format: str,
    out: Path | None,
) -> None:
    """Follow an effective fraction of Anderson chain eigenstates with size."""
    size_list = (
        parse_sizes(sizes) if sizes is not None else list(config.LATTICE_SIZES)
    )
    if not size_list or any(
        b <= a for a, b in zip(size_list, size_list[1:], strict=False)
    ):
        msg = f"sizes must be strictly increasing, got {size_list}"
        raise ParseError(msg)
    ensemble = ensemble if ensemble is not None else config.ENSEMBLE
    seed = seed if seed is not None else config.DEFAULT_SEED
    base = LatticeModel(
        n_sites=size_list[0],
        hopping=hopping,
        disorder_strength=disorder,
        seed=seed,
        boundary=Boundary(boundary),
    )
    curve = scaling_study(base, size_list, ensemble, Band(band), measure)
    rows = [
        {
            "n_sites": point.n_sites,
            "measure": curve.measure,
            "value": point.value,
            "stderr": point.stderr,
        }
        for point in curve.points
    ]
    run_manifest = manifest(
        "localize",
        config,
        sizes=size_list,
        ensemble=ensemble,
        band=band,
        disorder_strength=disorder,
        hopping=hopping,
        boundary=boundary,
        measure=measure,
        seed=seed,
        rng_algorithm=curve.rng_algorithm,
    )
    emit(rows, output_format, run_manifest, out, config)
