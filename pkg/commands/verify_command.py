import json
import logging
from pathlib import Path

import click

from commands.options import emit, manifest, output_options, seed_option
from models import AxiomVerdict, TrialConfig
from services.axiom_verifier import recommended_continuity_bound, verify_all
from services.exceptions import VerificationError
from services.measures import (
    NamedMeasure,
    builtin_measure,
    separable_measure,
)
from services.util import parse_tabulated
from services.wrappers import exit_codes

logger = logging.getLogger(__name__)


def _target_measure(target: str) -> NamedMeasure:
    path = Path(target)
    if path.is_file():
        spec = parse_tabulated(path.read_text(encoding="utf-8"))
        return separable_measure(spec)
    return builtin_measure(target)


def _verdict_row(verdict: AxiomVerdict) -> dict:
    witness = verdict.witness
    return {
        "axiom": str(verdict.axiom),
        "status": verdict.status,
        "trials": verdict.trials,
        "tolerance": verdict.tolerance,
        "violation": witness.violation if witness else None,
        "witness": json.dumps(witness.inputs) if witness else None,
        "observed": json.dumps(witness.observed) if witness else None,
        "note": verdict.note,
    }


@click.command("verify")
@click.argument("target")
@seed_option
@click.option("--trials", type=int, default=None)
@click.option("--max-dim", type=int, default=None)
@click.option(
    "--delta", type=float, default=None, help="Continuity probe step."
)
@click.option(
    "--bound",
    type=float,
    default=None,
    help="Allowed continuity response (default: recommended for TARGET).",
)
@output_options
@click.pass_obj
@exit_codes
def verify_cmd(
    config,
    target: str,
    seed: int | None,
    trials: int | None,
    max_dim: int | None,
    delta: float | None,
    bound: float | None,
    output_format: str,
    out: Path | None,
) -> None:
    """Check a measure against the effective number axioms.

    TARGET is a measure name (n_star, alpha:<a>, support, participation,
    exp_shannon, renyi:<q>) or a file of ``w,value`` knots. Exits with 1
    unless every verdict passes.
    """
    measure = _target_measure(target)
    delta = delta if delta is not None else config.CONTINUITY_DELTA
    if bound is None:
        bound = recommended_continuity_bound(measure.spec, delta)
    cfg = TrialConfig(
        seed=seed if seed is not None else config.DEFAULT_SEED,
        trials=trials if trials is not None else config.TRIALS,
        max_dim=max_dim if max_dim is not None else config.MAX_DIM,
        alpha_grid=config.ALPHA_GRID,
        continuity_delta=delta,
        continuity_bound=bound,
    )
    logger.info("Verifying %s with seed %d", measure.name, cfg.seed)
    verdicts = verify_all(measure, cfg)
    run_manifest = manifest(
        "verify",
        config,
        target=target,
        measure=measure.name,
        seed=cfg.seed,
        trials=cfg.trials,
        max_dim=cfg.max_dim,
        alpha_grid=list(cfg.alpha_grid),
        continuity_delta=cfg.continuity_delta,
        continuity_bound=cfg.continuity_bound,
    )
    emit(
        [_verdict_row(v) for v in verdicts],
        output_format,
        run_manifest,
        out,
        config,
    )
    failed = [str(v.axiom) for v in verdicts if not v.passed]
    if failed:
        msg = f"{measure.name} fails: {', '.join(failed)}"
        raise VerificationError(msg)
