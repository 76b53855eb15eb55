from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from services.const import TOL_CONCAVE, TOL_EXTRACT
from services.exceptions import ConstructionError


class FunctionKind(StrEnum):
    """Kinds of one-variable counting functions."""

    MINIMAL_STAR = "n_star"
    ALPHA = "alpha"
    SUPPORT_PLUS = "support"
    TABULATED = "tabulated"


@dataclass(frozen=True)
class CountingFunctionSpec:
    """One-variable counting function n(w) whose sum over weights is an ENF.

    Built-in kinds are min{w, 1}, min{w^alpha, 1} and the support indicator.
    Tabulated functions are piecewise linear between their knots and equal
    one from w = 1 on; construction rejects knot data that is not concave.
    """

    kind: FunctionKind
    alpha: float | None = None
    knots: tuple[tuple[float, float], ...] | None = None
    _xs: np.ndarray = field(init=False, repr=False, compare=False)
    _ys: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind is FunctionKind.ALPHA:
            if self.alpha is None or not 0 < self.alpha <= 1:
                msg = f"alpha must lie in (0, 1], got {self.alpha!r}"
                raise ConstructionError(msg)
        elif self.alpha is not None:
            msg = f"alpha only applies to the alpha kind, not {self.kind}"
            raise ConstructionError(msg)

        if self.kind is FunctionKind.TABULATED:
            xs, ys = _validated_knots(self.knots)
        elif self.knots is not None:
            msg = "knots are only meaningful for tabulated functions"
            raise ConstructionError(msg)
        else:
            xs = ys = np.empty(0)
        object.__setattr__(self, "_xs", xs)
        object.__setattr__(self, "_ys", ys)

    @classmethod
    def minimal_star(cls) -> "CountingFunctionSpec":
        return cls(FunctionKind.MINIMAL_STAR)

    @classmethod
    def power(cls, alpha: float) -> "CountingFunctionSpec":
        return cls(FunctionKind.ALPHA, alpha=float(alpha))

    @classmethod
    def support_plus(cls) -> "CountingFunctionSpec":
        return cls(FunctionKind.SUPPORT_PLUS)

    @classmethod
    def tabulated(
        cls, knots: Sequence[Sequence[float]]
    ) -> "CountingFunctionSpec":
        pairs = tuple((float(w), float(v)) for w, v in knots)
        return cls(FunctionKind.TABULATED, knots=pairs)

    @property
    def name(self) -> str:
        if self.kind is FunctionKind.ALPHA:
            return f"alpha:{self.alpha:g}"
        return str(self.kind)

    @property
    def is_enf(self) -> bool:
        """Support counting is discontinuous at zero and so is no ENF."""
        return self.kind is not FunctionKind.SUPPORT_PLUS

    @property
    def grid(self) -> np.ndarray:
        """Knot abscissae of a tabulated function, including w = 1."""
        return self._xs

    def __call__(self, w: np.ndarray | float) -> np.ndarray:
        """Evaluate n(w) elementwise."""
        w = np.asarray(w, dtype=np.float64)
        match self.kind:
            case FunctionKind.MINIMAL_STAR:
                return np.minimum(w, 1.0)
            case FunctionKind.ALPHA:
                # 0**alpha is 0 for alpha > 0, so n(0) = 0 holds as is
                return np.minimum(np.power(w, self.alpha), 1.0)
            case FunctionKind.SUPPORT_PLUS:
                return (w > 0).astype(np.float64)
            case FunctionKind.TABULATED:
                return np.where(w >= 1.0, 1.0, np.interp(w, self._xs, self._ys))
        msg = f"unknown counting function kind {self.kind!r}"
        raise ConstructionError(msg)

    def first_slope(self) -> float:
        """Largest slope of the function; the Lipschitz constant if finite."""
        match self.kind:
            case FunctionKind.MINIMAL_STAR:
                return 1.0
            case FunctionKind.TABULATED:
                return float((self._ys[1] - self._ys[0]) / self._xs[1])
            case FunctionKind.ALPHA if self.alpha == 1.0:
                return 1.0
        return float("inf")


def _validated_knots(
    knots: tuple[tuple[float, float], ...] | None,
) -> tuple[np.ndarray, np.ndarray]:
    if not knots:
        msg = "tabulated counting function needs knots"
        raise ConstructionError(msg)
    xs = np.array([w for w, _ in knots], dtype=np.float64)
    ys = np.array([v for _, v in knots], dtype=np.float64)
    if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
        msg = "knots must be finite"
        raise ConstructionError(msg)
    if xs[0] != 0.0 or abs(ys[0]) > TOL_EXTRACT:
        msg = f"knots must begin at (0, 0), got ({xs[0]!r}, {ys[0]!r})"
        raise ConstructionError(msg)
    if np.any(np.diff(xs) <= 0):
        msg = "knot abscissae must be strictly increasing"
        raise ConstructionError(msg)
    if np.any(np.diff(ys) < -TOL_EXTRACT):
        msg = "knot values must be nondecreasing"
        raise ConstructionError(msg)
    beyond = xs >= 1.0
    if np.any(np.abs(ys[beyond] - 1.0) > TOL_EXTRACT):
        msg = "knot values must equal 1 for w >= 1"
        raise ConstructionError(msg)

    # Keep the part below one and glue at (1, 1).
    xs = np.append(xs[~beyond], 1.0)
    ys = np.append(ys[~beyond], 1.0)
    ys[0] = 0.0

    slopes = np.diff(ys) / np.diff(xs)
    rising = np.diff(slopes)
    if np.any(rising > TOL_CONCAVE):
        at = int(np.argmax(rising)) + 1
        msg = f"knot data is not concave at w={xs[at]!r}"
        raise ConstructionError(msg)
    xs.setflags(write=False)
    ys.setflags(write=False)
    return xs, ys
