import math
from collections.abc import Iterable
from dataclasses import InitVar, dataclass

import numpy as np

from services.const import TOL_SUM
from services.exceptions import ConstraintViolationError, ConstructionError

from .base import WeightArray, readonly_array


def _renormalized(array: np.ndarray, target: float) -> np.ndarray:
    total = math.fsum(array)
    if total <= 0:
        msg = "cannot renormalize an all-zero vector"
        raise ConstructionError(msg)
    scaled = array * (target / total)
    scaled.setflags(write=False)
    return scaled


@dataclass(frozen=True, eq=False, repr=False)
class CountingVector(WeightArray):
    """Nonnegative counting weights over N objects summing to N."""

    weights: np.ndarray
    renormalize: InitVar[bool] = False

    def __post_init__(self, renormalize: bool) -> None:  # noqa: FBT001
        array = readonly_array(self.weights)
        n = array.size
        if n < 1:
            msg = "counting vector needs dimension N >= 1"
            raise ConstructionError(msg)
        if renormalize:
            array = _renormalized(array, float(n))
        total = math.fsum(array)
        if abs(total - n) > TOL_SUM * n:
            msg = (
                f"weights sum to {total!r}, expected N={n} "
                f"(tolerance {TOL_SUM * n:g}); pass renormalize to rescale"
            )
            raise ConstraintViolationError(msg)
        object.__setattr__(self, "weights", array)

    @classmethod
    def uniform(cls, n: int) -> "CountingVector":
        return cls(np.ones(n))

    @classmethod
    def delta(cls, n: int, position: int = 0) -> "CountingVector":
        """Return the fully cumulated vector with all weight at ``position``."""
        array = np.zeros(n)
        array[position] = n
        return cls(array)

    def to_probabilities(self) -> "ProbabilityVector":
        return ProbabilityVector(self.weights / self.n, renormalize=True)

    def to_general(self) -> "GeneralWeights":
        return GeneralWeights(self.weights)


@dataclass(frozen=True, eq=False, repr=False)
class ProbabilityVector(WeightArray):
    """Probability vector P over N objects."""

    weights: np.ndarray
    renormalize: InitVar[bool] = False

    def __post_init__(self, renormalize: bool) -> None:  # noqa: FBT001
        array = readonly_array(self.weights)
        if array.size < 1:
            msg = "probability vector needs dimension N >= 1"
            raise ConstructionError(msg)
        if renormalize:
            array = _renormalized(array, 1.0)
        total = math.fsum(array)
        if abs(total - 1.0) > TOL_SUM:
            msg = (
                f"probabilities sum to {total!r}, expected 1 "
                f"(tolerance {TOL_SUM:g}); pass renormalize to rescale"
            )
            raise ConstraintViolationError(msg)
        object.__setattr__(self, "weights", array)

    @property
    def probs(self) -> np.ndarray:
        return self.weights

    def to_counting(self) -> CountingVector:
        """Return W = N * P, rescaled so the sum is exactly N."""
        return CountingVector(self.weights * self.n, renormalize=True)


@dataclass(frozen=True, eq=False, repr=False)
class GeneralWeights(WeightArray):
    """Nonnegative weights without a sum constraint; may be empty."""

    weights: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", readonly_array(self.weights))


def as_general(
    weights: "CountingVector | GeneralWeights | Iterable[float]",
) -> GeneralWeights:
    if isinstance(weights, GeneralWeights):
        return weights
    if isinstance(weights, CountingVector | ProbabilityVector):
        return GeneralWeights(weights.weights)
    return GeneralWeights(np.asarray(list(weights), dtype=np.float64))
