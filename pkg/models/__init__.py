"""Provides model classes."""

from .counting_function import CountingFunctionSpec, FunctionKind
from .lattice import (
    Band,
    Boundary,
    EigenSystem,
    LatticeModel,
    ScalingCurve,
    ScalingPoint,
)
from .manifest import RunManifest
from .measure_report import MeasureReport, Scale
from .quantum import OrthonormalSet, QuantumState, SubspacePartition
from .verdict import Axiom, AxiomVerdict, TrialConfig, Witness
from .weights import (
    CountingVector,
    GeneralWeights,
    ProbabilityVector,
    as_general,
)

__all__: list[str] = [
    "Axiom",
    "AxiomVerdict",
    "Band",
    "Boundary",
    "CountingFunctionSpec",
    "CountingVector",
    "EigenSystem",
    "FunctionKind",
    "GeneralWeights",
    "LatticeModel",
    "MeasureReport",
    "OrthonormalSet",
    "ProbabilityVector",
    "QuantumState",
    "RunManifest",
    "Scale",
    "ScalingCurve",
    "ScalingPoint",
    "SubspacePartition",
    "TrialConfig",
    "Witness",
    "as_general",
]
