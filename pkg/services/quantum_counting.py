"""Counting quantum identities: basis states, orthonormal subsets and
orthogonal subspaces a state is effectively spread over.

Inner products conjugate the left argument.
"""

import logging

import numpy as np

from models import (
    CountingFunctionSpec,
    CountingVector,
    GeneralWeights,
    OrthonormalSet,
    ProbabilityVector,
    QuantumState,
    SubspacePartition,
)
from services import enf_core
from services.const import TOL_EVAL
from services.exceptions import (
    ConstructionError,
    DimensionMismatchError,
    PreconditionError,
)

logger = logging.getLogger(__name__)


def _check_dimension(psi: QuantumState, dimension: int, what: str) -> None:
    if psi.n != dimension:
        msg = f"state has dimension {psi.n}, {what} has dimension {dimension}"
        raise DimensionMismatchError(msg)


def state_probabilities(psi: QuantumState) -> ProbabilityVector:
    """Born probabilities |psi_i|^2 in the computational basis."""
    return ProbabilityVector(np.abs(psi.amplitudes) ** 2, renormalize=True)


def weights_in_basis(psi: QuantumState) -> CountingVector:
    """Counting weights N |psi_i|^2."""
    return CountingVector(psi.n * np.abs(psi.amplitudes) ** 2, renormalize=True)


def count_identities(psi: QuantumState, f: CountingFunctionSpec) -> float:
    """Effective number of basis states psi occupies."""
    return enf_core.eval_separable(f, weights_in_basis(psi))


def co_count_identities(psi: QuantumState, f: CountingFunctionSpec) -> float:
    """Effective number of basis states psi leaves out."""
    return enf_core.co_enf_value(f, weights_in_basis(psi))


def _subset_weights(
    psi: QuantumState, subset: OrthonormalSet
) -> GeneralWeights:
    _check_dimension(psi, subset.dimension, "subset")
    overlaps = subset.vectors.conj() @ psi.amplitudes
    return GeneralWeights(psi.n * np.abs(overlaps) ** 2)


def count_subset(
    psi: QuantumState, subset: OrthonormalSet, f: CountingFunctionSpec
) -> float:
    """Sum of f(N |<j|psi>|^2) over the vectors |j> of the subset."""
    return enf_core.eval_separable(f, _subset_weights(psi, subset))


def check_completion_independence(
    psi: QuantumState,
    subset: OrthonormalSet,
    completion_a: OrthonormalSet,
    completion_b: OrthonormalSet,
    f: CountingFunctionSpec,
) -> bool:
    """Check that the subset count is the same whichever basis it is
    completed to.

    Each completion, joined with the subset, must be an orthonormal basis
    of the whole space.
    """
    in_subset = count_subset(psi, subset, f)
    agree = True
    for name, completion in (("a", completion_a), ("b", completion_b)):
        _check_dimension(psi, completion.dimension, f"completion {name}")
        try:
            basis = subset.union(completion)
        except ConstructionError as exc:
            msg = f"completion {name} is not orthogonal to the subset: {exc}"
            raise PreconditionError(msg) from exc
        if basis.size != psi.n:
            msg = (
                f"completion {name} spans {basis.size} of "
                f"{psi.n} dimensions together with the subset"
            )
            raise PreconditionError(msg)
        total = count_subset(psi, basis, f)
        rest = count_subset(psi, completion, f)
        defect = abs(total - in_subset - rest)
        logger.debug("completion %s: defect %.3g", name, defect)
        agree = agree and defect <= TOL_EVAL * max(1.0, psi.n)
    return agree


def _block_probabilities(
    psi: QuantumState, partition: SubspacePartition
) -> np.ndarray:
    _check_dimension(psi, partition.dimension, "partition")
    if partition.index_blocks is not None:
        squares = np.abs(psi.amplitudes) ** 2
        return np.array(
            [
                np.sum(np.sort(squares[list(block)]))
                for block in partition.index_blocks
            ]
        )
    return np.array(
        [
            np.sum(np.abs(span.vectors.conj() @ psi.amplitudes) ** 2)
            for span in partition.spans
        ]
    )


def count_subspaces(
    psi: QuantumState, partition: SubspacePartition, f: CountingFunctionSpec
) -> float:
    """Effective number of subspaces of a full orthogonal decomposition.

    Block m gets probability <chi_m|chi_m>, the squared norm of the
    projection of psi onto it, and weight M times that.
    """
    if not partition.is_full:
        msg = (
            f"blocks span {sum(partition.block_dims)} of {partition.dimension} "
            "dimensions; use count_subspace_subset for partial families"
        )
        raise PreconditionError(msg)
    probs = _block_probabilities(psi, partition)
    weights = CountingVector(partition.size * probs, renormalize=True)
    return enf_core.eval_separable(f, weights)


def count_subspace_subset(
    psi: QuantumState,
    partition: SubspacePartition,
    f: CountingFunctionSpec,
    total_blocks: int | None = None,
) -> float:
    """Effective number of subspaces within a partial orthogonal family.

    Weights are M <chi_m|chi_m> on GeneralWeights, where M is the number of
    blocks of the full decomposition. Unless given, the uncovered remainder
    counts as one more block.
    """
    if total_blocks is None:
        total_blocks = partition.size + (0 if partition.is_full else 1)
    if total_blocks < partition.size:
        msg = (
            f"total_blocks={total_blocks} is smaller than the "
            f"{partition.size} blocks given"
        )
        raise PreconditionError(msg)
    probs = _block_probabilities(psi, partition)
    return enf_core.eval_separable(f, GeneralWeights(total_blocks * probs))
