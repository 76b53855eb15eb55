from dataclasses import dataclass, field
from enum import StrEnum

from services.exceptions import ConstructionError


class Axiom(StrEnum):
    """Properties checked by the axiom verifier."""

    ADDITIVITY = "Additivity"
    SYMMETRY = "Symmetry"
    CONTINUITY_PROBE = "ContinuityProbe"
    MONOTONICITY = "Monotonicity"
    BOUNDARY_B1 = "BoundaryB1"
    BOUNDARY_B2 = "BoundaryB2"
    SANDWICH = "Sandwich"
    SEPARABILITY = "SeparabilityReconstruction"


@dataclass(frozen=True)
class Witness:
    """Inputs and observations of the worst violation found."""

    inputs: tuple[tuple[float, ...], ...]
    observed: tuple[float, ...]
    violation: float

    def sort_key(self) -> tuple:
        """Order by violation, then lexicographically smallest inputs."""
        return (-self.violation, self.inputs)


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of one property check over a batch of trials."""

    axiom: Axiom
    passed: bool
    trials: int
    tolerance: float
    witness: Witness | None = None
    inconclusive: bool = False
    note: str = ""

    def __post_init__(self) -> None:
        if not self.passed and not self.inconclusive:
            if self.witness is None:
                msg = f"failed {self.axiom} verdict needs a witness"
                raise ConstructionError(msg)
            if self.witness.violation <= self.tolerance:
                msg = (
                    f"failed {self.axiom} verdict has violation "
                    f"{self.witness.violation!r} within tolerance"
                )
                raise ConstructionError(msg)

    @property
    def status(self) -> str:
        if self.inconclusive:
            return "inconclusive"
        return "pass" if self.passed else "FAIL"


@dataclass(frozen=True)
class TrialConfig:
    """Sampling parameters of a verification run."""

    seed: int
    trials: int = 10_000
    max_dim: int = 64
    alpha_grid: tuple[float, ...] = (1e-4, 0.01, 0.1, 0.25, 0.5, 0.75, 1.0)
    continuity_delta: float = 1e-6
    continuity_bound: float | None = None
    extraction_grid: tuple[float, ...] = field(
        default_factory=lambda: tuple(i / 100 for i in range(101))
    )

    def __post_init__(self) -> None:
        if self.trials < 1:
            msg = f"trials must be >= 1, got {self.trials}"
            raise ConstructionError(msg)
        if self.max_dim < 2:
            msg = f"max_dim must be >= 2, got {self.max_dim}"
            raise ConstructionError(msg)
        if self.continuity_delta <= 0:
            msg = f"continuity_delta must be > 0, got {self.continuity_delta}"
            raise ConstructionError(msg)
        if any(not 0 < a <= 1 for a in self.alpha_grid):
            msg = "alpha grid values must lie in (0, 1]"
            raise ConstructionError(msg)
        if any(not 0 <= x <= 1 for x in self.extraction_grid):
            msg = "extraction grid values must lie in [0, 1]"
            raise ConstructionError(msg)
