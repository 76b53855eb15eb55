"""Named measures used by the verifier and the command line.

Names: ``n_star``, ``alpha:<a>``, ``support``, ``participation``,
``exp_shannon`` and ``renyi:<q>``. Any name may be prefixed with ``co:``
(N minus the value) or ``f_`` (value divided by N); ``f_star`` is
``f_n_star`` reported under its short name.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass, replace
from functools import partial

from models import CountingFunctionSpec, CountingVector, MeasureReport, Scale
from services import enf_core
from services.exceptions import ConstructionError, DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NamedMeasure:
    """Black-box measure on counting vectors with its counting function."""

    name: str
    evaluate: Callable[[CountingVector], float]
    spec: CountingFunctionSpec | None = None

    @property
    def is_enf(self) -> bool:
        return self.spec is not None and self.spec.is_enf

    def __call__(self, w: CountingVector) -> float:
        """Evaluate the measure."""
        return self.evaluate(w)


def separable_measure(spec: CountingFunctionSpec) -> NamedMeasure:
    return NamedMeasure(spec.name, partial(enf_core.eval_separable, spec), spec)


def _parameter(name: str) -> float:
    _, _, raw = name.partition(":")
    try:
        return float(raw)
    except ValueError as exc:
        msg = f"measure {name!r} needs a numeric parameter"
        raise DomainError(msg) from exc


def _co(inner: NamedMeasure) -> NamedMeasure:
    def evaluate(w: CountingVector) -> float:
        return w.n - inner(w)

    return NamedMeasure(f"co:{inner.name}", evaluate)


def _fraction(inner: NamedMeasure) -> NamedMeasure:
    def evaluate(w: CountingVector) -> float:
        return inner(w) / w.n

    return NamedMeasure(f"f_{inner.name}", evaluate)


def builtin_measure(name: str) -> NamedMeasure:
    """Resolve a measure name into a callable."""
    name = name.strip()
    if name.startswith("co:"):
        return _co(builtin_measure(name[3:]))
    if name == "f_star":
        return replace(_fraction(builtin_measure("n_star")), name="f_star")
    if name.startswith("f_"):
        return _fraction(builtin_measure(name[2:]))
    if name == "n_star":
        return separable_measure(enf_core.MINIMAL_STAR)
    if name == "support":
        return NamedMeasure(
            name, enf_core.support_count, enf_core.SUPPORT_PLUS
        )
    if name.startswith("alpha:"):
        try:
            spec = CountingFunctionSpec.power(_parameter(name))
        except ConstructionError as exc:
            raise DomainError(str(exc)) from exc
        return separable_measure(spec)
    if name == "participation":
        return NamedMeasure(name, enf_core.participation_number)
    if name == "exp_shannon":
        return NamedMeasure(name, enf_core.exp_shannon)
    if name.startswith("renyi:"):
        q = _parameter(name)
        return NamedMeasure(f"renyi:{q:g}", partial(_renyi, q=q))
    msg = f"unknown measure {name!r}"
    raise DomainError(msg)


def _renyi(w: CountingVector, q: float) -> float:
    return enf_core.exp_renyi(w, q)


def measure_report(
    w: CountingVector, names: list[str], scale: Scale = Scale.NUMBER
) -> MeasureReport:
    """Evaluate ``w`` under every named measure."""
    measures = [builtin_measure(name) for name in names]
    values = {m.name: m(w) for m in measures}
    enf_keys = frozenset(
        m.name
        for m in measures
        if m.is_enf and not m.name.startswith(("co:", "f_"))
    )
    logger.debug("Evaluated %d measures at N=%d", len(values), w.n)
    return MeasureReport(values=values, n=w.n, scale=scale, enf_keys=enf_keys)
