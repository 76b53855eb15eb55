from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from services.exceptions import ConstructionError

from .quantum import QuantumState


class Boundary(StrEnum):
    """Boundary condition of the chain."""

    OPEN = "open"
    PERIODIC = "periodic"


class Band(StrEnum):
    """Which eigenstate a scaling study follows."""

    GROUND = "ground"
    MID_BAND = "mid-band"


@dataclass(frozen=True)
class LatticeModel:
    """1D tight-binding chain with uniform on-site disorder."""

    n_sites: int
    hopping: float = -1.0
    disorder_strength: float = 0.0
    seed: int = 0
    boundary: Boundary = Boundary.OPEN

    def __post_init__(self) -> None:
        if self.n_sites < 2:
            msg = f"n_sites must be >= 2, got {self.n_sites}"
            raise ConstructionError(msg)
        if self.disorder_strength < 0:
            msg = (
                "disorder_strength must be >= 0, "
                f"got {self.disorder_strength}"
            )
            raise ConstructionError(msg)
        object.__setattr__(self, "boundary", Boundary(self.boundary))

    def resized(self, n_sites: int, seed: int) -> "LatticeModel":
        return LatticeModel(
            n_sites=n_sites,
            hopping=self.hopping,
            disorder_strength=self.disorder_strength,
            seed=seed,
            boundary=self.boundary,
        )


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Ascending spectrum with the matching orthonormal eigenstates."""

    energies: np.ndarray
    vectors: np.ndarray  # columns are eigenvectors
    max_residual: float = 0.0

    @property
    def size(self) -> int:
        return int(self.energies.size)

    def state(self, index: int) -> QuantumState:
        return QuantumState(self.vectors[:, index], renormalize=True)

    @property
    def states(self) -> list[QuantumState]:
        return [self.state(k) for k in range(self.size)]


@dataclass(frozen=True)
class ScalingPoint:
    """Ensemble mean of a measure at one system size."""

    n_sites: int
    value: float
    stderr: float


@dataclass(frozen=True)
class ScalingCurve:
    """Ensemble-averaged measure as a function of system size."""

    points: tuple[ScalingPoint, ...]
    measure: str
    disorder_strength: float
    ensemble: int
    band: Band
    rng_algorithm: str = "numpy.random.PCG64"
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        sizes = [p.n_sites for p in self.points]
        if any(b <= a for a, b in zip(sizes, sizes[1:], strict=False)):
            msg = f"n_sites must be strictly increasing, got {sizes}"
            raise ConstructionError(msg)

    @property
    def values(self) -> list[float]:
        return [p.value for p in self.points]
