from collections.abc import Iterable, Iterator

import numpy as np

from services.exceptions import ConstructionError


def readonly_array(values: Iterable[float] | np.ndarray) -> np.ndarray:
    """Copy ``values`` into a frozen float64 vector of nonnegative entries."""
    try:
        array = np.array(values, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        msg = f"weights must be real numbers: {exc}"
        raise ConstructionError(msg) from exc
    if array.ndim != 1:
        msg = "weights must be a flat sequence"
        raise ConstructionError(msg)
    if not np.all(np.isfinite(array)):
        msg = "weights must be finite"
        raise ConstructionError(msg)
    if array.size and array.min() < 0:
        msg = f"weights must be >= 0, got {array.min()!r}"
        raise ConstructionError(msg)
    array.setflags(write=False)
    return array


class WeightArray:
    """Basic container behaviour for the immutable weight vectors."""

    weights: np.ndarray

    @property
    def n(self) -> int:
        return int(self.weights.size)

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[float]:
        return iter(self.weights.tolist())

    def tolist(self) -> list[float]:
        return self.weights.tolist()

    def __eq__(self, other: object) -> bool:
        """Compare type and entries exactly."""
        if type(other) is not type(self):
            return NotImplemented
        return bool(np.array_equal(self.weights, other.weights))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Return string representation of the weights."""
        return f"{type(self).__name__}({self.tolist()})"
