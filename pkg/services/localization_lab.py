"""Effective fractions as localization measures on 1D Anderson chains.

The Hamiltonian has hopping t between neighbouring sites and on-site
energies drawn uniformly from [-W, W]. Eigenstates are read in the
position basis at every size.
"""

import logging
import math

import numpy as np
from scipy.linalg import eigh, eigh_tridiagonal

from models import (
    Band,
    Boundary,
    CountingFunctionSpec,
    EigenSystem,
    LatticeModel,
    MeasureReport,
    QuantumState,
    Scale,
    ScalingCurve,
    ScalingPoint,
)
from services import enf_core
from services.const import STANDARD_ALPHAS, TOL_RESIDUAL
from services.exceptions import (
    ConstructionError,
    DomainError,
    PreconditionError,
)
from services.quantum_counting import weights_in_basis

logger = logging.getLogger(__name__)

RNG_ALGORITHM = "numpy.random.PCG64"

STATE_MEASURES = (
    "f_star",
    *(f"f_alpha:{a:g}" for a in STANDARD_ALPHAS),
    "participation_fraction",
    "exp_shannon_fraction",
    "support_fraction",
    "renyi2_fraction",
)


def build_model(cfg: LatticeModel) -> np.ndarray:
    """Dense Hamiltonian of the chain; periodic chains couple the ends."""
    rng = np.random.default_rng(cfg.seed)
    n = cfg.n_sites
    diagonal = (
        rng.uniform(-cfg.disorder_strength, cfg.disorder_strength, n)
        if cfg.disorder_strength > 0
        else np.zeros(n)
    )
    hamiltonian = np.diag(diagonal)
    bond = np.arange(n - 1)
    hamiltonian[bond, bond + 1] = cfg.hopping
    hamiltonian[bond + 1, bond] = cfg.hopping
    if cfg.boundary is Boundary.PERIODIC:
        # For N = 2 the closing bond doubles the single one.
        hamiltonian[0, n - 1] += cfg.hopping
        hamiltonian[n - 1, 0] += cfg.hopping
    return hamiltonian


def _is_tridiagonal(matrix: np.ndarray) -> bool:
    return not np.any(np.triu(matrix, 2)) and not np.any(np.tril(matrix, -2))


def eigensolve(hamiltonian: np.ndarray) -> EigenSystem:
    """Full spectrum in ascending order with orthonormal eigenvectors."""
    matrix = np.asarray(hamiltonian, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        msg = f"Hamiltonian must be square, got shape {matrix.shape}"
        raise PreconditionError(msg)
    if not np.array_equal(matrix, matrix.T):
        msg = "Hamiltonian must be real symmetric"
        raise PreconditionError(msg)
    if _is_tridiagonal(matrix) and matrix.shape[0] > 1:
        energies, vectors = eigh_tridiagonal(
            np.diag(matrix).copy(), np.diag(matrix, 1).copy()
        )
    else:
        energies, vectors = eigh(matrix)
    residual = float(
        np.max(np.linalg.norm(matrix @ vectors - vectors * energies, axis=0))
    )
    if residual > TOL_RESIDUAL * max(1.0, float(np.abs(energies).max())):
        msg = f"eigensolver residual {residual:.3g} above {TOL_RESIDUAL:g}"
        raise PreconditionError(msg)
    logger.debug(
        "Solved %d-site chain, max residual %.3g", matrix.shape[0], residual
    )
    return EigenSystem(
        energies=energies, vectors=vectors, max_residual=residual
    )


def state_measures(psi: QuantumState) -> MeasureReport:
    """Effective fractions of a state in the position basis."""
    w = weights_in_basis(psi)
    n = w.n
    values = {"f_star": enf_core.effective_number_min(w) / n}
    for alpha in STANDARD_ALPHAS:
        spec = CountingFunctionSpec.power(alpha)
        values[f"f_{spec.name}"] = enf_core.eval_separable(spec, w) / n
    values["participation_fraction"] = enf_core.participation_number(w) / n
    values["exp_shannon_fraction"] = enf_core.exp_shannon(w) / n
    values["support_fraction"] = enf_core.support_count(w) / n
    values["renyi2_fraction"] = enf_core.exp_renyi(w, 2.0) / n
    enf_keys = frozenset(
        ["f_star", *(f"f_alpha:{a:g}" for a in STANDARD_ALPHAS)]
    )
    return MeasureReport(
        values=values, n=n, scale=Scale.FRACTION, enf_keys=enf_keys
    )


def select_state(system: EigenSystem, band: Band) -> QuantumState:
    """Ground state, or the state at index ceil(N/2) - 1 for mid-band."""
    if band is Band.GROUND:
        return system.state(0)
    return system.state(math.ceil(system.size / 2) - 1)


def scaling_study(
    base_cfg: LatticeModel,
    sizes: list[int],
    ensemble: int,
    band: Band = Band.GROUND,
    measure: str = "f_star",
) -> ScalingCurve:
    """Ensemble-average one measure of the selected eigenstate per size.

    Realization r uses seed base_cfg.seed + r at every size.
    """
    if measure not in STATE_MEASURES:
        msg = f"unknown state measure {measure!r}"
        raise DomainError(msg)
    if ensemble < 1:
        msg = f"ensemble must be >= 1, got {ensemble}"
        raise ConstructionError(msg)
    if any(b <= a for a, b in zip(sizes, sizes[1:], strict=False)):
        msg = f"sizes must be strictly increasing, got {list(sizes)}"
        raise ConstructionError(msg)
    band = Band(band)
    points = []
    for size in sizes:
        samples = np.empty(ensemble)
        for r in range(ensemble):
            model = base_cfg.resized(size, base_cfg.seed + r)
            system = eigensolve(build_model(model))
            samples[r] = state_measures(select_state(system, band))[measure]
        stderr = (
            float(np.std(samples, ddof=1) / math.sqrt(ensemble))
            if ensemble > 1
            else 0.0
        )
        points.append(
            ScalingPoint(
                n_sites=size, value=float(samples.mean()), stderr=stderr
            )
        )
        logger.info(
            "N=%d: %s = %.6f +- %.2g", size, measure, points[-1].value, stderr
        )
    return ScalingCurve(
        points=tuple(points),
        measure=measure,
        disorder_strength=base_cfg.disorder_strength,
        ensemble=ensemble,
        band=band,
        rng_algorithm=RNG_ALGORITHM,
        metadata={
            "seed": base_cfg.seed,
            "hopping": base_cfg.hopping,
            "boundary": str(base_cfg.boundary),
        },
    )
