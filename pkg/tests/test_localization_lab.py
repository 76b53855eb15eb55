import math

import numpy as np
import pytest

from models import Band, Boundary, LatticeModel, QuantumState
from services import localization_lab as lab
from services.exceptions import (
    ConstructionError,
    DomainError,
    PreconditionError,
)

CLEAN_LIMIT = 1 - 1 / math.pi


class TestBuildModel:
    def test_clean_open_chain(self):
        hamiltonian = lab.build_model(LatticeModel(n_sites=3))
        assert hamiltonian.tolist() == [
            [0.0, -1.0, 0.0],
            [-1.0, 0.0, -1.0],
            [0.0, -1.0, 0.0],
        ]

    def test_same_seed_same_matrix(self):
        cfg = LatticeModel(n_sites=50, disorder_strength=3.0, seed=11)
        assert np.array_equal(lab.build_model(cfg), lab.build_model(cfg))
        other = lab.build_model(cfg.resized(50, 12))
        assert not np.array_equal(lab.build_model(cfg), other)

    def test_disorder_range(self):
        cfg = LatticeModel(n_sites=500, disorder_strength=2.0, seed=4)
        diagonal = np.diag(lab.build_model(cfg))
        assert np.all(np.abs(diagonal) <= 2.0)
        assert np.ptp(diagonal) > 3.0

    def test_periodic_corners(self):
        cfg = LatticeModel(n_sites=5, boundary=Boundary.PERIODIC)
        hamiltonian = lab.build_model(cfg)
        assert hamiltonian[0, 4] == hamiltonian[4, 0] == -1.0

    def test_two_site_ring_doubles_the_bond(self):
        cfg = LatticeModel(n_sites=2, boundary="periodic")
        assert lab.build_model(cfg)[0, 1] == -2.0

    def test_rejects_tiny_chains(self):
        with pytest.raises(ConstructionError, match="n_sites"):
            LatticeModel(n_sites=1)


class TestEigensolve:
    @pytest.mark.parametrize("n", [2, 7, 40])
    def test_clean_spectrum(self, n):
        system = lab.eigensolve(lab.build_model(LatticeModel(n_sites=n)))
        k = np.arange(1, n + 1)
        expected = np.sort(-2 * np.cos(k * np.pi / (n + 1)))
        assert system.energies == pytest.approx(expected, abs=1e-10)
        assert system.max_residual < 1e-10

    def test_two_sites(self):
        system = lab.eigensolve(lab.build_model(LatticeModel(n_sites=2)))
        assert system.energies.tolist() == pytest.approx([-1.0, 1.0])

    def test_diagonal_matrix(self):
        system = lab.eigensolve(np.diag([1.0, 3.0]))
        assert system.energies.tolist() == pytest.approx([1.0, 3.0])
        np.testing.assert_allclose(
            np.abs(system.vectors), np.eye(2), atol=1e-12
        )

    def test_dense_path_for_periodic_chains(self):
        cfg = LatticeModel(n_sites=6, boundary=Boundary.PERIODIC)
        system = lab.eigensolve(lab.build_model(cfg))
        k = np.arange(6)
        expected = np.sort(-2 * np.cos(2 * np.pi * k / 6))
        assert system.energies == pytest.approx(expected, abs=1e-10)

    def test_eigenvectors_are_orthonormal(self):
        cfg = LatticeModel(n_sites=30, disorder_strength=1.5, seed=2)
        vectors = lab.eigensolve(lab.build_model(cfg)).vectors
        assert vectors.T @ vectors == pytest.approx(np.eye(30), abs=1e-10)

    def test_non_symmetric_matrix(self):
        with pytest.raises(PreconditionError, match="symmetric"):
            lab.eigensolve(np.array([[0.0, 1.0], [2.0, 0.0]]))

    def test_non_square_matrix(self):
        with pytest.raises(PreconditionError, match="square"):
            lab.eigensolve(np.zeros((2, 3)))


class TestStateMeasures:
    def test_localized_state(self):
        report = lab.state_measures(QuantumState.basis(8, 3))
        assert report["f_star"] == pytest.approx(1 / 8)
        assert report["support_fraction"] == pytest.approx(1 / 8)
        assert report["participation_fraction"] == pytest.approx(1 / 8)

    def test_uniform_state(self):
        report = lab.state_measures(QuantumState.uniform(8))
        for key in report.keys():
            assert report[key] == pytest.approx(1.0)

    def test_reports_every_state_measure(self):
        report = lab.state_measures(QuantumState.uniform(3))
        assert tuple(report.keys()) == lab.STATE_MEASURES
        assert "f_star" in report.enf_keys
        assert "participation_fraction" not in report.enf_keys

    @pytest.mark.parametrize("n", [64, 128, 256])
    def test_clean_ground_state(self, n):
        system = lab.eigensolve(lab.build_model(LatticeModel(n_sites=n)))
        report = lab.state_measures(lab.select_state(system, Band.GROUND))
        assert report["f_star"] == pytest.approx(CLEAN_LIMIT, abs=0.02)

    def test_fraction_ordering(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 64))
            amplitudes = rng.normal(size=n) * (rng.uniform(size=n) < 0.6)
            amplitudes[0] = 1.0
            psi = QuantumState(amplitudes, renormalize=True)
            report = lab.state_measures(psi)
            f_star = report["f_star"]
            assert 1 / n - 1e-12 <= f_star
            assert f_star <= report["support_fraction"] + 1e-12
            assert report["support_fraction"] <= 1 + 1e-12
            for alpha in ("0.25", "0.5", "0.75"):
                assert f_star <= report[f"f_alpha:{alpha}"] + 1e-12

    def test_select_state(self):
        system = lab.eigensolve(lab.build_model(LatticeModel(n_sites=5)))
        ground = lab.select_state(system, Band.GROUND)
        middle = lab.select_state(system, Band.MID_BAND)
        assert ground.amplitudes == pytest.approx(system.vectors[:, 0])
        assert middle.amplitudes == pytest.approx(system.vectors[:, 2])


class TestScalingStudy:
    def test_clean_chain_is_flat(self):
        curve = lab.scaling_study(
            LatticeModel(n_sites=2), [64, 128, 256], ensemble=3
        )
        assert [p.n_sites for p in curve.points] == [64, 128, 256]
        for point in curve.points:
            assert point.value == pytest.approx(CLEAN_LIMIT, abs=0.02)
            assert point.stderr == pytest.approx(0.0, abs=1e-12)
        assert curve.rng_algorithm == "numpy.random.PCG64"

    def test_strong_disorder_localizes(self):
        cfg = LatticeModel(n_sites=2, disorder_strength=5.0, seed=2024)
        curve = lab.scaling_study(
            cfg, [64, 128, 256, 512], ensemble=8, band=Band.MID_BAND
        )
        values = curve.values
        assert all(b < a for a, b in zip(values, values[1:], strict=False))
        assert all(p.stderr > 0 for p in curve.points)

    def test_deterministic(self):
        cfg = LatticeModel(n_sites=2, disorder_strength=2.0, seed=9)
        first = lab.scaling_study(cfg, [16, 32], ensemble=4)
        second = lab.scaling_study(cfg, [16, 32], ensemble=4)
        assert first == second

    def test_single_realization_has_no_error_bar(self):
        cfg = LatticeModel(n_sites=2, disorder_strength=2.0, seed=9)
        curve = lab.scaling_study(cfg, [16], ensemble=1)
        assert curve.points[0].stderr == 0.0

    def test_other_measure(self):
        curve = lab.scaling_study(
            LatticeModel(n_sites=2),
            [32],
            ensemble=1,
            measure="support_fraction",
        )
        assert curve.measure == "support_fraction"
        assert curve.values == [1.0]

    def test_sizes_must_increase(self):
        with pytest.raises(ConstructionError, match="increasing"):
            lab.scaling_study(LatticeModel(n_sites=2), [32, 16], ensemble=1)

    def test_ensemble_must_be_positive(self):
        with pytest.raises(ConstructionError, match="ensemble"):
            lab.scaling_study(LatticeModel(n_sites=2), [16], ensemble=0)

    def test_unknown_measure(self):
        with pytest.raises(DomainError, match="unknown state measure"):
            lab.scaling_study(
                LatticeModel(n_sites=2), [16], ensemble=1, measure="ipr"
            )
