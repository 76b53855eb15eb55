import math
from collections.abc import Iterable, Sequence
from dataclasses import InitVar, dataclass, field

import numpy as np

from services.const import TOL_NORM, TOL_ORTHO
from services.exceptions import (
    ConstraintViolationError,
    ConstructionError,
    DimensionMismatchError,
)


def _complex_vector(values: Iterable[complex] | np.ndarray) -> np.ndarray:
    try:
        array = np.array(values, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        msg = f"amplitudes must be complex numbers: {exc}"
        raise ConstructionError(msg) from exc
    if array.ndim != 1 or array.size < 1:
        msg = "amplitudes must form a nonempty flat sequence"
        raise ConstructionError(msg)
    if not np.all(np.isfinite(array)):
        msg = "amplitudes must be finite"
        raise ConstructionError(msg)
    return array


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Normalized state vector in an N-dimensional Hilbert space."""

    amplitudes: np.ndarray
    renormalize: InitVar[bool] = False

    def __post_init__(self, renormalize: bool) -> None:  # noqa: FBT001
        array = _complex_vector(self.amplitudes)
        norm_sq = math.fsum(np.abs(array) ** 2)
        if renormalize:
            if norm_sq == 0:
                msg = "cannot renormalize the zero vector"
                raise ConstructionError(msg)
            array = array / math.sqrt(norm_sq)
            norm_sq = math.fsum(np.abs(array) ** 2)
        if abs(norm_sq - 1.0) > TOL_NORM:
            msg = (
                f"state has squared norm {norm_sq!r}, expected 1 "
                f"(tolerance {TOL_NORM:g}); pass renormalize to rescale"
            )
            raise ConstraintViolationError(msg)
        array.setflags(write=False)
        object.__setattr__(self, "amplitudes", array)

    @property
    def n(self) -> int:
        return int(self.amplitudes.size)

    @classmethod
    def basis(cls, n: int, index: int) -> "QuantumState":
        array = np.zeros(n, dtype=np.complex128)
        array[index] = 1.0
        return cls(array)

    @classmethod
    def uniform(cls, n: int) -> "QuantumState":
        return cls(np.full(n, 1.0 / math.sqrt(n), dtype=np.complex128))

    def __repr__(self) -> str:
        """Return string representation of the amplitudes."""
        return f"QuantumState({self.amplitudes.tolist()})"


@dataclass(frozen=True, eq=False)
class OrthonormalSet:
    """Collection of n orthonormal vectors from an N-dimensional space.

    ``dimension`` is required only for the empty set, which has no vector to
    read it from.
    """

    vectors: np.ndarray
    dimension: int | None = None

    def __post_init__(self) -> None:
        rows = [_complex_vector(v) for v in self.vectors]
        if not rows:
            if self.dimension is None:
                msg = "empty orthonormal set needs an explicit dimension"
                raise ConstructionError(msg)
            matrix = np.zeros((0, self.dimension), dtype=np.complex128)
        else:
            sizes = {row.size for row in rows}
            if len(sizes) != 1:
                msg = f"vectors differ in dimension: {sorted(sizes)}"
                raise DimensionMismatchError(msg)
            matrix = np.vstack(rows)
            if self.dimension is not None and self.dimension != matrix.shape[1]:
                msg = (
                    f"vectors have dimension {matrix.shape[1]}, "
                    f"declared {self.dimension}"
                )
                raise DimensionMismatchError(msg)
        count, dim = matrix.shape
        if count > dim:
            msg = f"{count} vectors cannot be orthonormal in dimension {dim}"
            raise ConstructionError(msg)
        gram = matrix.conj() @ matrix.T
        defect = np.abs(gram - np.eye(count)).max(initial=0.0)
        if defect > TOL_ORTHO:
            msg = f"vectors are not orthonormal (max Gram defect {defect:.3g})"
            raise ConstructionError(msg)
        matrix.setflags(write=False)
        object.__setattr__(self, "vectors", matrix)
        object.__setattr__(self, "dimension", dim)

    @property
    def size(self) -> int:
        return int(self.vectors.shape[0])

    def union(self, other: "OrthonormalSet") -> "OrthonormalSet":
        """Return the joint set; raises unless the two sets are orthogonal."""
        return OrthonormalSet(
            np.vstack([self.vectors, other.vectors]), dimension=self.dimension
        )


@dataclass(frozen=True, eq=False)
class SubspacePartition:
    """Mutually orthogonal subspaces, given as index blocks or spanning sets.

    Index blocks are 0-based and disjoint. Spanning sets must be mutually
    orthogonal. ``is_full`` tells whether the blocks span the whole space.
    """

    dimension: int
    index_blocks: tuple[tuple[int, ...], ...] | None = None
    spans: tuple[OrthonormalSet, ...] | None = None
    block_dims: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        if (self.index_blocks is None) == (self.spans is None):
            msg = "give exactly one of index_blocks or spans"
            raise ConstructionError(msg)
        if self.index_blocks is not None:
            dims = self._check_index_blocks(self.index_blocks)
        else:
            dims = self._check_spans(self.spans)
        if not dims:
            msg = "partition needs at least one block"
            raise ConstructionError(msg)
        object.__setattr__(self, "block_dims", dims)

    def _check_index_blocks(
        self, blocks: tuple[tuple[int, ...], ...]
    ) -> tuple[int, ...]:
        seen: set[int] = set()
        for block in blocks:
            if not block:
                msg = "index blocks must be nonempty"
                raise ConstructionError(msg)
            for index in block:
                if not 0 <= index < self.dimension:
                    msg = f"index {index} outside 0..{self.dimension - 1}"
                    raise ConstructionError(msg)
                if index in seen:
                    msg = f"index {index} appears in more than one block"
                    raise ConstructionError(msg)
                seen.add(index)
        return tuple(len(block) for block in blocks)

    def _check_spans(
        self, spans: tuple[OrthonormalSet, ...]
    ) -> tuple[int, ...]:
        for span in spans:
            if span.dimension != self.dimension:
                msg = (
                    f"span of dimension {span.dimension} in a "
                    f"{self.dimension}-dimensional space"
                )
                raise DimensionMismatchError(msg)
        # Mutual orthogonality is the orthonormality of the stacked set.
        OrthonormalSet(
            np.vstack([span.vectors for span in spans]),
            dimension=self.dimension,
        )
        return tuple(span.size for span in spans)

    @classmethod
    def from_blocks(
        cls, dimension: int, blocks: Sequence[Sequence[int]]
    ) -> "SubspacePartition":
        return cls(
            dimension, index_blocks=tuple(tuple(b) for b in blocks)
        )

    @classmethod
    def from_spans(
        cls, dimension: int, spans: Sequence[OrthonormalSet]
    ) -> "SubspacePartition":
        return cls(dimension, spans=tuple(spans))

    @classmethod
    def singletons(cls, dimension: int) -> "SubspacePartition":
        return cls.from_blocks(dimension, [[i] for i in range(dimension)])

    @property
    def size(self) -> int:
        return len(self.block_dims)

    @property
    def is_full(self) -> bool:
        return sum(self.block_dims) == self.dimension
