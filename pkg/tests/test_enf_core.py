import math

import numpy as np
import pytest

from models import CountingFunctionSpec, CountingVector, ProbabilityVector
from services import enf_core
from services.exceptions import ConstructionError, DomainError, TransferError

STAR = CountingFunctionSpec.minimal_star()
ALPHA_HALF = CountingFunctionSpec.power(0.5)


def random_vector(rng: np.random.Generator, n: int) -> CountingVector:
    return CountingVector(rng.exponential(1.0, n), renormalize=True)


class TestEvalSeparable:
    @pytest.mark.parametrize(
        ("weights", "expected"),
        [
            ([1, 1, 1, 1], 4.0),
            ([2, 0], 1.0),
            ([1.5, 0.5], 1.5),
            ([4, 0, 0, 0], 1.0),
        ],
    )
    def test_minimal_star(self, weights, expected):
        w = CountingVector(weights)
        assert enf_core.effective_number_min(w) == pytest.approx(expected)

    def test_alpha_half(self):
        w = CountingVector([1.5, 0.5])
        assert enf_core.eval_separable(ALPHA_HALF, w) == pytest.approx(
            1 + math.sqrt(0.5)
        )

    def test_support_plus(self):
        w = CountingVector([3, 0, 0])
        assert enf_core.support_count(w) == 1.0
        assert enf_core.co_support_count(w) == 2.0

    def test_permutation_gives_identical_bits(self, rng):
        w = random_vector(rng, 40)
        shuffled = CountingVector(w.weights[rng.permutation(40)])
        for spec in (STAR, ALPHA_HALF, CountingFunctionSpec.power(0.1)):
            assert enf_core.eval_separable(spec, w) == enf_core.eval_separable(
                spec, shuffled
            )

    def test_alpha_family_is_ordered(self, rng):
        for _ in range(50):
            w = random_vector(rng, int(rng.integers(1, 30)))
            values = [
                enf_core.eval_separable(CountingFunctionSpec.power(a), w)
                for a in (0.1, 0.25, 0.5, 0.75, 1.0)
            ]
            assert all(
                a >= b - 1e-12 for a, b in zip(values, values[1:], strict=False)
            )
            lo, hi = enf_core.enf_range(w)
            assert lo - 1e-12 <= values[-1] <= values[0] <= hi + 1e-12


class TestComparisonMeasures:
    def test_participation_number(self):
        assert enf_core.participation_number(
            CountingVector([2, 0, 1])
        ) == pytest.approx(1.8)
        assert enf_core.participation_number(CountingVector([2, 0])) == 1.0

    def test_exp_shannon_boundaries(self):
        uniform = CountingVector.uniform(5)
        assert enf_core.exp_shannon(uniform) == pytest.approx(5)
        assert enf_core.exp_shannon(CountingVector.delta(5)) == 1.0

    def test_exp_renyi_special_orders(self, rng):
        w = CountingVector([3.0, 1.0, 0.0, 0.0])
        assert enf_core.exp_renyi(w, 0) == 2.0
        assert enf_core.exp_renyi(w, 1) == enf_core.exp_shannon(w)
        assert enf_core.exp_renyi(w, 2) == enf_core.participation_number(w)
        assert enf_core.exp_renyi(w, math.inf) == pytest.approx(4 / 3)
        v = random_vector(rng, 12)
        assert enf_core.exp_renyi(v, 2.000001) == pytest.approx(
            enf_core.participation_number(v), rel=1e-4
        )

    def test_exp_renyi_decreases_with_order(self, rng):
        w = random_vector(rng, 20)
        orders = [0.5, 1, 1.5, 2, 3, math.inf]
        values = [enf_core.exp_renyi(w, q) for q in orders]
        assert values == sorted(values, reverse=True)

    def test_exp_renyi_rejects_negative_order(self):
        with pytest.raises(DomainError, match="order"):
            enf_core.exp_renyi(CountingVector([1.0]), -1)


class TestConcatAndTransfer:
    def test_concat_adds_dimensions(self):
        joined = enf_core.concat(CountingVector([2, 0]), CountingVector([1]))
        assert joined == CountingVector([2, 0, 1])

    def test_concat_rejects_mixed_types(self):
        with pytest.raises(DomainError, match="concatenate"):
            enf_core.concat(
                CountingVector([1]), CountingVector([1]).to_general()
            )

    def test_transfer_moves_weight(self):
        w = enf_core.elementary_transfer(CountingVector([0.5, 1.5]), 0, 1, 0.5)
        assert w == CountingVector([0.0, 2.0])

    @pytest.mark.parametrize(
        ("i", "j", "eps", "message"),
        [
            (1, 0, 0.1, "w_i <= w_j violated"),
            (0, 1, -0.1, "0 <= eps violated"),
            (0, 1, 0.6, "eps <= w_i violated"),
            (0, 0, 0.1, "i != j"),
            (0, 5, 0.1, "outside"),
        ],
    )
    def test_transfer_preconditions(self, i, j, eps, message):
        with pytest.raises(TransferError, match=message):
            enf_core.elementary_transfer(CountingVector([0.5, 1.5]), i, j, eps)

    def test_transfer_never_increases_enfs(self, rng):
        for _ in range(200):
            w = random_vector(rng, 8)
            i, j = int(np.argmin(w.weights)), int(np.argmax(w.weights))
            eps = float(rng.uniform(0, w.weights[i]))
            moved = enf_core.elementary_transfer(w, i, j, eps)
            for spec in (STAR, ALPHA_HALF):
                assert enf_core.eval_separable(
                    spec, moved
                ) <= enf_core.eval_separable(spec, w) + 1e-12


class TestCoNumbers:
    def test_duality(self, rng):
        for _ in range(100):
            w = random_vector(rng, int(rng.integers(1, 64)))
            for spec in (STAR, ALPHA_HALF):
                value = enf_core.eval_separable(spec, w)
                total = value + enf_core.co_enf_value(spec, w)
                assert total == pytest.approx(w.n, abs=1e-9)

    def test_co_counting_value(self):
        assert enf_core.co_counting_value(STAR, 0.25) == 0.75
        support = CountingFunctionSpec.support_plus()
        assert enf_core.co_counting_value(support, 0.0) == 1.0
        assert enf_core.co_counting_value(support, 1e-9) == 0.0

    def test_ranges(self):
        w = CountingVector([2.5, 0.5, 0.0])
        assert enf_core.enf_range(w) == (1.5, 2.0)
        assert enf_core.co_enf_range(w) == (1.0, 1.5)

    def test_alpha_sweep(self):
        w = CountingVector([1.5, 0.5])
        sweep = enf_core.alpha_sweep(w, [0.5, 0.01])
        assert [a for a, _ in sweep] == [0.01, 0.5, 1.0]
        assert [v for _, v in sweep] == pytest.approx(
            [1 + 0.5**0.01, 1 + math.sqrt(0.5), 1.5]
        )

    @pytest.mark.parametrize("k", [-10, 1, 7])
    def test_gauge_shift_leaves_values_unchanged(self, rng, k):
        for _ in range(100):
            w = random_vector(rng, int(rng.integers(1, 64)))
            shifted = float(np.sum(STAR(w.weights) + k * (1 - w.weights)))
            assert shifted == pytest.approx(
                enf_core.effective_number_min(w), abs=1e-8
            )


class TestAttainValue:
    def test_hits_target(self):
        w = CountingVector([1.5, 0.5])
        alpha = enf_core.attain_value(w, 1.8)
        assert alpha == pytest.approx(math.log(0.8) / math.log(0.5))
        spec = CountingFunctionSpec.power(alpha)
        assert enf_core.eval_separable(spec, w) == pytest.approx(1.8)

    def test_minimum_is_alpha_one(self):
        assert enf_core.attain_value(CountingVector([1.5, 0.5]), 1.5) == 1.0

    @pytest.mark.parametrize("target", [1.2, 2.0, 2.5])
    def test_unattainable_targets(self, target):
        with pytest.raises(DomainError, match="not attainable"):
            enf_core.attain_value(CountingVector([1.5, 0.5]), target)


class TestMajorization:
    def test_delta_majorizes_everything(self, rng):
        w = random_vector(rng, 6)
        assert enf_core.majorizes(CountingVector.delta(6), w)
        assert enf_core.majorizes(w, CountingVector.uniform(6))

    def test_schur_concavity(self, rng):
        for _ in range(100):
            a, b = random_vector(rng, 5), random_vector(rng, 5)
            if enf_core.majorizes(a, b):
                assert enf_core.effective_number_min(
                    a
                ) <= enf_core.effective_number_min(b) + 1e-9

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError, match="equal dimensions"):
            enf_core.majorizes(CountingVector([1]), CountingVector([1, 1]))


class TestEffectiveFraction:
    def test_minimal_fraction(self):
        p = ProbabilityVector([0.3, 0.7])
        assert enf_core.effective_fraction(STAR, p) == pytest.approx(0.8)
        assert enf_core.effective_fraction_min(p) == pytest.approx(0.8)

    def test_forms_agree(self, rng):
        for _ in range(50):
            p = random_vector(rng, 30).to_probabilities()
            assert enf_core.effective_fraction(STAR, p) == pytest.approx(
                enf_core.effective_fraction_min(p), abs=1e-12
            )


class TestExtraction:
    GRID = [i / 100 for i in range(101)]

    @pytest.mark.parametrize("alpha", [0.25, 0.5, 1.0])
    def test_recovers_alpha_counting_function(self, alpha):
        spec = CountingFunctionSpec.power(alpha)

        def black_box(w):
            return enf_core.eval_separable(spec, w)

        extracted = enf_core.extract_counting_function(black_box, self.GRID)
        grid = np.array(self.GRID)
        assert np.max(
            np.abs(extracted(grid) - np.minimum(grid**alpha, 1.0))
        ) <= 1e-9

    def test_minimal_star_reconstructs_identity(self):
        extracted = enf_core.extract_counting_function(
            enf_core.effective_number_min, self.GRID
        )
        assert extracted(0.37) == pytest.approx(0.37, abs=1e-9)

    def test_generating_function_values(self):
        xs, g, g_one = enf_core.generating_function_values(
            enf_core.effective_number_min, [0.0, 0.5, 1.0]
        )
        assert xs.tolist() == [0.0, 0.5, 1.0]
        assert g.tolist() == pytest.approx([0.0, 0.5, 1.0])
        assert g_one == 1.0

    def test_rejects_participation_number(self):
        with pytest.raises(ConstructionError):
            enf_core.extract_counting_function(
                enf_core.participation_number, self.GRID
            )

    def test_grid_must_lie_in_unit_interval(self):
        with pytest.raises(DomainError, match="extraction grid"):
            enf_core.generating_function_values(
                enf_core.effective_number_min, [0.5, 1.5]
            )
