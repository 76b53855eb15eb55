"""Effective number functions, their co-numbers and comparison measures.

Every function here is pure. Weights are sorted ascending before summation,
so permuted inputs give bitwise identical results.
"""

import logging
import math
from collections.abc import Callable, Sequence

import numpy as np
from scipy.optimize import brentq
from scipy.special import xlogy

from models import (
    CountingFunctionSpec,
    CountingVector,
    GeneralWeights,
    ProbabilityVector,
    as_general,
)
from services.const import TOL_EVAL
from services.exceptions import DomainError, TransferError

logger = logging.getLogger(__name__)

MINIMAL_STAR = CountingFunctionSpec.minimal_star()
SUPPORT_PLUS = CountingFunctionSpec.support_plus()

Evaluator = Callable[[CountingVector], float]


def _ascending_sum(terms: np.ndarray) -> float:
    return float(np.sum(terms))


def eval_separable(
    f: CountingFunctionSpec,
    w: GeneralWeights | CountingVector | Sequence[float],
) -> float:
    """Return sum_j f(w_j), summed in ascending order of weight."""
    weights = np.sort(as_general(w).weights)
    return _ascending_sum(f(weights))


def effective_number_min(w: CountingVector) -> float:
    """Minimal effective number: sum of min(w_i, 1)."""
    return eval_separable(MINIMAL_STAR, w)


def support_count(w: GeneralWeights | CountingVector) -> float:
    """Count weights strictly greater than zero."""
    return float(np.count_nonzero(as_general(w).weights > 0))


def co_support_count(w: GeneralWeights | CountingVector) -> float:
    """Count weights that are exactly zero."""
    return float(np.count_nonzero(as_general(w).weights == 0))


def participation_number(w: CountingVector) -> float:
    """Participation number N^2 / sum w_i^2."""
    squares = np.sort(w.weights) ** 2
    total = _ascending_sum(squares)
    if total == 0:
        msg = "participation number is undefined for the all-zero vector"
        raise DomainError(msg)
    return w.n**2 / total


def exp_shannon(w: CountingVector) -> float:
    """Exponentiated Shannon entropy of p = w / N."""
    p = np.sort(w.weights) / w.n
    return math.exp(-_ascending_sum(xlogy(p, p)))


def exp_renyi(w: CountingVector, q: float) -> float:
    """Exponentiated Renyi entropy of order q (the Hill number of order q).

    q = 0 counts the support, q = 1 is exp_shannon, q = 2 is the
    participation number and q = inf gives N / max w.
    """
    if q < 0 or math.isnan(q):
        msg = f"Renyi order must be >= 0, got {q!r}"
        raise DomainError(msg)
    if q == 0:
        return support_count(w)
    if q == 1:
        return exp_shannon(w)
    p = np.sort(w.weights) / w.n
    if math.isinf(q):
        return 1.0 / float(p[-1])
    if q == 2:
        return participation_number(w)
    moment = _ascending_sum(np.power(p[p > 0], q))
    return moment ** (1.0 / (1.0 - q))


def concat(
    a: CountingVector | GeneralWeights, b: CountingVector | GeneralWeights
) -> CountingVector | GeneralWeights:
    """Concatenate two weight vectors of the same type."""
    if type(a) is not type(b):
        msg = (
            f"cannot concatenate {type(a).__name__} with {type(b).__name__}"
        )
        raise DomainError(msg)
    joined = np.concatenate([a.weights, b.weights])
    if isinstance(a, CountingVector):
        # Sum constraint is inherited: N1 + N2.
        return CountingVector(joined)
    return GeneralWeights(joined)


def elementary_transfer(
    w: CountingVector, i: int, j: int, eps: float
) -> CountingVector:
    """Move eps of weight from entry i to an entry j that is at least as large.

    Indices are 0-based.
    """
    if i == j:
        msg = f"transfer needs i != j, got i = j = {i}"
        raise TransferError(msg)
    for index in (i, j):
        if not 0 <= index < w.n:
            msg = f"index {index} outside 0..{w.n - 1}"
            raise TransferError(msg)
    wi, wj = w.weights[i], w.weights[j]
    if wi > wj:
        msg = f"w_i <= w_j violated: w[{i}]={wi!r} > w[{j}]={wj!r}"
        raise TransferError(msg)
    if eps < 0:
        msg = f"0 <= eps violated: eps={eps!r}"
        raise TransferError(msg)
    if eps > wi:
        msg = f"eps <= w_i violated: eps={eps!r} > w[{i}]={wi!r}"
        raise TransferError(msg)
    moved = w.weights.copy()
    moved[i] -= eps
    moved[j] += eps
    moved[i] = max(moved[i], 0.0)
    return CountingVector(moved)


def co_counting_value(f: CountingFunctionSpec, w: float) -> float:
    """Co-counting function m(w) = 1 - n(w)."""
    return float(1.0 - f(w))


def co_enf_value(f: CountingFunctionSpec, w: CountingVector) -> float:
    """Effective co-number M[W] = N - N[W]."""
    return w.n - eval_separable(f, w)


def enf_range(w: CountingVector) -> tuple[float, float]:
    """Interval of values taken by all ENFs at w: [N_star, N_plus]."""
    return effective_number_min(w), support_count(w)


def co_enf_range(w: CountingVector) -> tuple[float, float]:
    """Interval of values taken by all co-ENFs at w."""
    lo, hi = enf_range(w)
    return w.n - hi, w.n - lo


def alpha_sweep(
    w: CountingVector, alphas: Sequence[float]
) -> list[tuple[float, float]]:
    """Values of the alpha family at w, by ascending alpha (1 included)."""
    return [
        (a, eval_separable(CountingFunctionSpec.power(a), w))
        for a in sorted({*alphas, 1.0})
    ]


def attain_value(w: CountingVector, target: float) -> float:
    """Return alpha in (0, 1] whose alpha-ENF takes ``target`` at w.

    The alpha family sweeps [N_star, N_plus) continuously, so every
    attainable value has such a representative; N_plus itself is a limit.
    """
    lo, hi = enf_range(w)
    if abs(target - lo) <= TOL_EVAL:
        return 1.0
    if not lo < target < hi:
        msg = (
            f"target {target!r} is not attainable at this vector; "
            f"ENF values fill [{lo!r}, {hi!r})"
        )
        raise DomainError(msg)

    def gap(alpha: float) -> float:
        return eval_separable(CountingFunctionSpec.power(alpha), w) - target

    floor = 1e-300
    if gap(floor) < 0:
        msg = f"target {target!r} too close to the supremum {hi!r}"
        raise DomainError(msg)
    alpha = brentq(gap, floor, 1.0, xtol=1e-15, rtol=8.9e-16)
    logger.debug("alpha=%r reaches target %r", alpha, target)
    return float(alpha)


def majorizes(a: CountingVector, b: CountingVector) -> bool:
    """Return True if a majorizes b (a is at least as cumulated as b)."""
    if a.n != b.n:
        msg = f"majorization compares equal dimensions, got {a.n} and {b.n}"
        raise DomainError(msg)
    top_a = np.cumsum(np.sort(a.weights)[::-1])
    top_b = np.cumsum(np.sort(b.weights)[::-1])
    return bool(np.all(top_a >= top_b - TOL_EVAL * a.n))


def effective_fraction(
    f: CountingFunctionSpec, p: ProbabilityVector
) -> float:
    """Effective fraction F[P] = N[N P] / N."""
    return eval_separable(f, p.weights * p.n) / p.n


def effective_fraction_min(p: ProbabilityVector) -> float:
    """Minimal effective fraction: sum of min(p_i, 1/N)."""
    return _ascending_sum(np.minimum(np.sort(p.weights), 1.0 / p.n))


def generating_function_values(
    evaluator: Evaluator, grid: Sequence[float]
) -> tuple[np.ndarray, np.ndarray, float]:
    """Probe a black-box measure on two-object vectors (x, 2 - x).

    Returns the grid, g(x) = G(x, 2 - x) - G(1) on it and G(1), where
    G(1) is taken as G(1, 1) / 2.
    """
    xs = np.asarray(sorted(set(grid)), dtype=np.float64)
    if xs.size == 0 or xs[0] < 0 or xs[-1] > 1:
        msg = "extraction grid must be nonempty and inside [0, 1]"
        raise DomainError(msg)
    g_one = evaluator(CountingVector([1.0, 1.0])) / 2
    values = np.array(
        [evaluator(CountingVector([x, 2.0 - x])) - g_one for x in xs]
    )
    return xs, values, g_one


def extract_counting_function(
    evaluator: Evaluator, grid: Sequence[float]
) -> CountingFunctionSpec:
    """Recover the counting function of a separable measure on a grid.

    The probe always includes x = 0. Raises ConstructionError when the
    probed values do not form a valid counting function, which is the case
    for measures that are no ENF.
    """
    xs, values, _ = generating_function_values(evaluator, [0.0, *grid])
    knots = list(zip(xs.tolist(), values.tolist(), strict=True))
    if knots[-1][0] < 1.0:
        knots.append((1.0, 1.0))
    return CountingFunctionSpec.tabulated(knots)
