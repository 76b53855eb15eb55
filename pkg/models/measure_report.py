from dataclasses import dataclass, field
from enum import StrEnum

from services.const import TOL_EVAL
from services.exceptions import ConstructionError


class Scale(StrEnum):
    """Whether report values are effective numbers or fractions of N."""

    NUMBER = "number"
    FRACTION = "fraction"


@dataclass(frozen=True)
class MeasureReport:
    """Values of one weight vector under a set of named measures."""

    values: dict[str, float]
    n: int
    scale: Scale = Scale.NUMBER
    enf_keys: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        # ENF entries obey 1 <= N[W] <= N, or 1/N <= F[P] <= 1 as fractions.
        unit = 1.0 / self.n if self.scale is Scale.FRACTION else 1.0
        for key in self.enf_keys:
            value = self.values[key]
            if not unit - TOL_EVAL <= value <= unit * self.n + TOL_EVAL:
                msg = (
                    f"{key}={value!r} is outside "
                    f"[{unit:g}, {unit * self.n:g}]"
                )
                raise ConstructionError(msg)

    def __getitem__(self, key: str) -> float:
        return self.values[key]

    def keys(self) -> list[str]:
        return list(self.values)
