"""Property checks of black-box measures against the ENF axioms.

Each check samples random counting vectors, records the worst violation
seen and returns an AxiomVerdict. Checks are seeded from the TrialConfig
and produce identical verdicts on identical configurations.
"""

import logging
import math
from collections.abc import Callable

import numpy as np

from models import (
    Axiom,
    AxiomVerdict,
    CountingFunctionSpec,
    CountingVector,
    FunctionKind,
    TrialConfig,
    Witness,
)
from services import enf_core
from services.const import TOL_AXIOM, TOL_EVAL
from services.exceptions import VerificationError

logger = logging.getLogger(__name__)

Measure = Callable[[CountingVector], float]

# Probability that a sampled vector gets some of its entries zeroed.
SPARSE_FRACTION = 0.25

_STREAM = {axiom: index for index, axiom in enumerate(Axiom)}


def _rng(cfg: TrialConfig, axiom: Axiom) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, _STREAM[axiom]])


def random_counting_vector(
    rng: np.random.Generator, n: int
) -> CountingVector:
    """Sample W uniformly from the counting simplex, sometimes sparsified."""
    draws = rng.exponential(1.0, n)
    if n > 1 and rng.random() < SPARSE_FRACTION:
        zeros = rng.integers(1, n)
        draws[rng.permutation(n)[:zeros]] = 0.0
    return CountingVector(draws, renormalize=True)


def _as_tuple(w: CountingVector) -> tuple[float, ...]:
    return tuple(w.tolist())


class _WorstCase:
    """Keeps the largest violation, ties broken by the smallest inputs."""

    def __init__(self, axiom: Axiom, tolerance: float) -> None:
        self.axiom = axiom
        self.tolerance = tolerance
        self.worst: Witness | None = None
        self.trials = 0

    def observe(
        self,
        inputs: tuple[CountingVector, ...],
        observed: tuple[float, ...],
        violation: float,
    ) -> None:
        self.trials += 1
        candidate = Witness(
            inputs=tuple(_as_tuple(w) for w in inputs),
            observed=observed,
            violation=float(violation),
        )
        if self.worst is None or candidate.sort_key() < self.worst.sort_key():
            self.worst = candidate

    def verdict(self, note: str = "") -> AxiomVerdict:
        passed = self.worst is None or self.worst.violation <= self.tolerance
        return AxiomVerdict(
            axiom=self.axiom,
            passed=passed,
            trials=self.trials,
            tolerance=self.tolerance,
            witness=self.worst,
            note=note,
        )


def _inconclusive(
    axiom: Axiom, tolerance: float, trials: int, exc: Exception
) -> AxiomVerdict:
    logger.error("%s check aborted after %d trials: %s", axiom, trials, exc)
    return AxiomVerdict(
        axiom=axiom,
        passed=False,
        trials=trials,
        tolerance=tolerance,
        inconclusive=True,
        note=f"measure evaluation failed: {exc}",
    )


def additivity_defect(
    measure: Measure, a: CountingVector, b: CountingVector
) -> float:
    """Return |m(a + b) - m(a) - m(b)| for the concatenation a + b."""
    return abs(measure(enf_core.concat(a, b)) - measure(a) - measure(b))


def check_additivity(measure: Measure, cfg: TrialConfig) -> AxiomVerdict:
    worst = _WorstCase(Axiom.ADDITIVITY, TOL_AXIOM)
    rng = _rng(cfg, Axiom.ADDITIVITY)
    try:
        for _ in range(cfg.trials):
            n1, n2 = rng.integers(1, cfg.max_dim + 1, size=2)
            a = random_counting_vector(rng, int(n1))
            b = random_counting_vector(rng, int(n2))
            joint = measure(enf_core.concat(a, b))
            ma, mb = measure(a), measure(b)
            worst.observe((a, b), (joint, ma, mb), abs(joint - ma - mb))
    except Exception as exc:  # noqa: BLE001
        return _inconclusive(Axiom.ADDITIVITY, TOL_AXIOM, worst.trials, exc)
    return worst.verdict()


def check_symmetry(measure: Measure, cfg: TrialConfig) -> AxiomVerdict:
    worst = _WorstCase(Axiom.SYMMETRY, TOL_AXIOM)
    rng = _rng(cfg, Axiom.SYMMETRY)
    try:
        for _ in range(cfg.trials):
            n = int(rng.integers(2, cfg.max_dim + 1))
            w = random_counting_vector(rng, n)
            shuffled = CountingVector(w.weights[rng.permutation(n)])
            before, after = measure(w), measure(shuffled)
            worst.observe((w, shuffled), (before, after), abs(after - before))
    except Exception as exc:  # noqa: BLE001
        return _inconclusive(Axiom.SYMMETRY, TOL_AXIOM, worst.trials, exc)
    return worst.verdict()


def check_monotonicity(measure: Measure, cfg: TrialConfig) -> AxiomVerdict:
    worst = _WorstCase(Axiom.MONOTONICITY, TOL_AXIOM)
    rng = _rng(cfg, Axiom.MONOTONICITY)
    try:
        for _ in range(cfg.trials):
            n = int(rng.integers(2, cfg.max_dim + 1))
            w = random_counting_vector(rng, n)
            i, j = (int(k) for k in rng.choice(n, size=2, replace=False))
            if w.weights[i] > w.weights[j]:
                i, j = j, i
            eps = float(rng.uniform(0.0, w.weights[i]))
            moved = enf_core.elementary_transfer(w, i, j, eps)
            before, after = measure(w), measure(moved)
            worst.observe((w, moved), (before, after), max(after - before, 0))
    except Exception as exc:  # noqa: BLE001
        return _inconclusive(Axiom.MONOTONICITY, TOL_AXIOM, worst.trials, exc)
    return worst.verdict()


def check_boundary(
    measure: Measure, cfg: TrialConfig
) -> tuple[AxiomVerdict, AxiomVerdict]:
    """Check N(1,...,1) = N and N(N,0,...,0) = 1 for N = 1..max_dim.

    Returns the B1 and the B2 verdicts. B2 is checked at every position
    of the delta vector.
    """
    uniform = _WorstCase(Axiom.BOUNDARY_B1, TOL_AXIOM)
    delta = _WorstCase(Axiom.BOUNDARY_B2, TOL_AXIOM)
    current = uniform
    try:
        for n in range(1, cfg.max_dim + 1):
            ones = CountingVector.uniform(n)
            value = measure(ones)
            uniform.observe((ones,), (value,), abs(value - n))
        current = delta
        for n in range(1, cfg.max_dim + 1):
            for position in range(n):
                spike = CountingVector.delta(n, position)
                value = measure(spike)
                delta.observe((spike,), (value,), abs(value - 1.0))
    except Exception as exc:  # noqa: BLE001
        failed = _inconclusive(current.axiom, TOL_AXIOM, current.trials, exc)
        if current is uniform:
            return failed, _inconclusive(
                Axiom.BOUNDARY_B2, TOL_AXIOM, 0, exc
            )
        return uniform.verdict(), failed
    return uniform.verdict(), delta.verdict()


def recommended_continuity_bound(
    spec: CountingFunctionSpec | None, delta: float
) -> float:
    """Largest response to a transfer of size delta that a continuous
    measure of this kind can show.

    Moving delta between two entries changes at most two terms, each by
    the modulus of continuity of the counting function.
    """
    if spec is None or spec.kind is FunctionKind.SUPPORT_PLUS:
        return 2.0 * math.sqrt(delta)
    if spec.kind is FunctionKind.ALPHA:
        return 2.0 * delta**spec.alpha
    return 2.0 * spec.first_slope() * delta


def check_continuity_probe(
    measure: Measure, cfg: TrialConfig
) -> AxiomVerdict:
    """Falsification probe for continuity; passing it proves nothing.

    Besides random transfers of size continuity_delta, the probe always
    marginalizes one of two objects: (delta, 2 - delta) -> (0, 2). Without
    an explicit continuity_bound the bound recommended for the measure's
    counting function is used.
    """
    delta = cfg.continuity_delta
    bound = (
        cfg.continuity_bound
        if cfg.continuity_bound is not None
        else recommended_continuity_bound(getattr(measure, "spec", None), delta)
    )
    note = f"continuity probe (delta={delta:g}, bound={bound:g}), not a proof"
    worst = _WorstCase(Axiom.CONTINUITY_PROBE, bound)
    rng = _rng(cfg, Axiom.CONTINUITY_PROBE)
    try:
        edge = CountingVector([delta, 2.0 - delta])
        collapsed = CountingVector([0.0, 2.0])
        before, after = measure(edge), measure(collapsed)
        worst.observe((edge, collapsed), (before, after), abs(after - before))
        for _ in range(cfg.trials):
            n = int(rng.integers(2, cfg.max_dim + 1))
            w = random_counting_vector(rng, n)
            i, j = (int(k) for k in rng.choice(n, size=2, replace=False))
            moved = w.weights.copy()
            amount = min(delta, moved[i])
            moved[i] -= amount
            moved[j] += amount
            nudged = CountingVector(np.maximum(moved, 0.0))
            before, after = measure(w), measure(nudged)
            worst.observe((w, nudged), (before, after), abs(after - before))
    except Exception as exc:  # noqa: BLE001
        return _inconclusive(Axiom.CONTINUITY_PROBE, bound, worst.trials, exc)
    return worst.verdict(note)


def check_sandwich(measure: Measure, cfg: TrialConfig) -> AxiomVerdict:
    worst = _WorstCase(Axiom.SANDWICH, TOL_AXIOM)
    rng = _rng(cfg, Axiom.SANDWICH)
    try:
        for _ in range(cfg.trials):
            n = int(rng.integers(1, cfg.max_dim + 1))
            w = random_counting_vector(rng, n)
            value = measure(w)
            lo, hi = enf_core.enf_range(w)
            violation = max(lo - value, value - hi, 0.0)
            worst.observe((w,), (lo, value, hi), violation)
    except Exception as exc:  # noqa: BLE001
        return _inconclusive(Axiom.SANDWICH, TOL_AXIOM, worst.trials, exc)
    return worst.verdict()


def _snapped_vector(
    rng: np.random.Generator, n: int, grid: np.ndarray
) -> tuple[CountingVector, CountingVector]:
    """Two vectors sharing their sub-unit entries, drawn from ``grid``.

    The remaining entries exceed one and split the leftover weight
    differently in the two vectors.
    """
    below = grid[grid < 1.0]
    m = int(rng.integers(0, n))
    small = rng.choice(below, size=m)
    excess = m - float(np.sum(small))
    k = n - m

    def filled() -> np.ndarray:
        shares = rng.dirichlet(np.ones(k)) if k > 1 else np.ones(1)
        return np.concatenate([small, 1.0 + excess * shares])

    first, second = filled(), filled()
    order = rng.permutation(n)
    return (
        CountingVector(first[order], renormalize=True),
        CountingVector(second[order], renormalize=True),
    )


def check_separability(measure: Measure, cfg: TrialConfig) -> AxiomVerdict:
    """Rebuild the measure from its two-object probes and compare.

    The generating function is read off at (x, 2 - x) on the extraction
    grid; fresh vectors with sub-unit entries on that grid must then equal
    the sum of generating-function values. Pairs that share their sub-unit
    entries must also agree.
    """
    worst = _WorstCase(Axiom.SEPARABILITY, TOL_AXIOM)
    rng = _rng(cfg, Axiom.SEPARABILITY)
    try:
        xs, g, g_one = enf_core.generating_function_values(
            measure, [0.0, *cfg.extraction_grid, 1.0]
        )

        def rebuilt(w: CountingVector) -> float:
            weights = np.sort(w.weights)
            terms = np.where(weights > 1.0, g_one, np.interp(weights, xs, g))
            return float(np.sum(terms))

        for _ in range(cfg.trials):
            n = int(rng.integers(2, cfg.max_dim + 1))
            first, second = _snapped_vector(rng, n, xs)
            value, other = measure(first), measure(second)
            expected = rebuilt(first)
            violation = max(abs(value - expected), abs(value - other))
            worst.observe((first, second), (value, expected, other), violation)
    except Exception as exc:  # noqa: BLE001
        return _inconclusive(Axiom.SEPARABILITY, TOL_AXIOM, worst.trials, exc)
    return worst.verdict()


def check_range_interval(
    w: CountingVector, cfg: TrialConfig
) -> tuple[float, float, list[tuple[float, float]]]:
    """Sweep the alpha family at w and return (lo, hi, sweep).

    The sweep is ordered by ascending alpha; lo is the value at alpha = 1
    and hi the value at the smallest alpha on the grid.
    """
    sweep = enf_core.alpha_sweep(w, cfg.alpha_grid)
    alphas = [a for a, _ in sweep]
    values = [value for _, value in sweep]
    for (a_prev, v_prev), (a_next, v_next) in zip(
        sweep, sweep[1:], strict=False
    ):
        if v_next > v_prev + TOL_EVAL:
            msg = (
                f"alpha sweep increases from {v_prev!r} at alpha={a_prev:g} "
                f"to {v_next!r} at alpha={a_next:g}"
            )
            raise VerificationError(msg)
    lo, hi = values[-1], values[0]
    n_star, n_plus = enf_core.enf_range(w)
    if abs(lo - n_star) > TOL_EVAL:
        msg = f"alpha = 1 gives {lo!r}, minimal effective number is {n_star!r}"
        raise VerificationError(msg)
    if hi > n_plus + TOL_EVAL:
        msg = f"sweep reaches {hi!r}, above the support count {n_plus!r}"
        raise VerificationError(msg)
    if n_plus - n_star > TOL_EVAL and alphas[0] == 1.0:
        msg = "alpha grid has no value below 1, sweep cannot approach N+"
        raise VerificationError(msg)
    # 1 - w**a <= a * |ln w| for 0 < w < 1
    small = w.weights[(w.weights > 0) & (w.weights < 1)]
    gap_bound = alphas[0] * float(np.sum(-np.log(small)))
    if n_plus - hi > gap_bound + TOL_EVAL:
        msg = (
            f"sweep stops at {hi!r}, more than {gap_bound:.3g} below "
            f"the support count {n_plus!r} at alpha={alphas[0]:g}"
        )
        raise VerificationError(msg)
    return lo, hi, sweep


def verify_all(measure: Measure, cfg: TrialConfig) -> list[AxiomVerdict]:
    """Run every check in a fixed order."""
    b1, b2 = check_boundary(measure, cfg)
    verdicts = [
        check_additivity(measure, cfg),
        check_symmetry(measure, cfg),
        check_continuity_probe(measure, cfg),
        check_monotonicity(measure, cfg),
        b1,
        b2,
        check_sandwich(measure, cfg),
        check_separability(measure, cfg),
    ]
    failed = [v.axiom for v in verdicts if not v.passed]
    logger.info(
        "Verified %d properties over %d trials; failed: %s",
        len(verdicts),
        cfg.trials,
        ", ".join(failed) or "none",
    )
    return verdicts
