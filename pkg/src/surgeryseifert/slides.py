"""Slide plans and the two ways of applying them.

A plan is applied homologically (a ledger of linking vectors and S^3
linking numbers) and diagrammatically (band slides); :func:`verify_ledger`
checks that both agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .diagram import BandSpec, Diagram, band_slide, linking_number_s3
from .errors import DiagramError
from .homlin import FramedLinkData, SolutionVector, as_vector, linking_matrix, linking_vector


@dataclass(frozen=True)
class SlideStep:
    index: int
    orient: int


@dataclass(frozen=True)
class SlidePlan:
    steps: tuple[SlideStep, ...]
    source: tuple[int, ...] = ()

    def __len__(self):
        return len(self.steps)

    def to_json(self, names: Sequence[str]) -> list[dict]:
        return [{"component": names[s.index], "orient": s.orient} for s in self.steps]

    @classmethod
    def from_json(cls, data, names: Sequence[str]) -> SlidePlan:
        steps = []
        for rec in data:
            try:
                i = list(names).index(rec["component"])
            except (ValueError, KeyError, TypeError):
                raise DiagramError(f"plan step {rec!r} names no surgery component") from None
            if rec.get("orient") not in (1, -1):
                raise DiagramError(f"plan step {rec!r}: orient must be 1 or -1")
            steps.append(SlideStep(i, rec["orient"]))
        return cls(tuple(steps))


def slide_plan(x) -> SlidePlan:
    """Slides that kill the linking vector: ``x_i`` negative slides over
    ``L_i`` when ``x_i > 0``, ``|x_i|`` positive ones when ``x_i < 0``."""
    xs = x.x if isinstance(x, SolutionVector) else as_vector(x)
    steps = []
    for i, xi in enumerate(xs):
        orient = -1 if xi > 0 else 1
        steps.extend(SlideStep(i, orient) for _ in range(abs(xi)))
    return SlidePlan(tuple(steps), xs)


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Ledger:
    """Predicted linking data of the tracked curves.

    ``vectors`` maps each tracked curve to its linking vector; ``lk_s3``
    maps sorted name pairs of tracked curves to S^3 linking numbers.
    """

    curve: str
    vectors: Mapping[str, tuple[int, ...]]
    lk_s3: Mapping[tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "vectors", {k: as_vector(v) for k, v in self.vectors.items()})
        object.__setattr__(self, "lk_s3", {_pair(*k): int(v) for k, v in self.lk_s3.items()})

    @property
    def v_current(self) -> tuple[int, ...]:
        return self.vectors[self.curve]

    def lk(self, a: str, b: str) -> int:
        return self.lk_s3[_pair(a, b)]

    def to_dict(self) -> dict:
        return {
            "curve": self.curve,
            "vectors": {k: list(v) for k, v in sorted(self.vectors.items())},
            "lk_s3": [[a, b, v] for (a, b), v in sorted(self.lk_s3.items())],
        }


def ledger_from_diagram(d: Diagram, curve: str, tracked: Sequence[str] | None = None) -> Ledger:
    """Initial ledger read off a diagram; tracks all knot components by default."""
    link = linking_matrix(d)
    if tracked is None:
        tracked = [c.name for c in d.components if c.role == "knot"]
    if curve not in tracked:
        tracked = [curve, *tracked]
    vectors = {t: linking_vector(d, t, link).entries for t in tracked}
    lk = {
        _pair(a, b): linking_number_s3(d, a, b)
        for i, a in enumerate(tracked)
        for b in tracked[i + 1:]
    }
    return Ledger(curve, vectors, lk)


def apply_plan_ledger(plan: SlidePlan, link: FramedLinkData, ledger: Ledger, curve: str | None = None) -> Ledger:
    """Apply a plan to the ledger of ``curve`` (default: ``ledger.curve``).

    A slide of K over L_i with sign s adds s times column i of M to V_K and
    s * lk(C, L_i) to lk(K, C) for every other tracked curve C.
    """
    curve = curve or ledger.curve
    if curve not in ledger.vectors:
        raise KeyError(f"curve {curve!r} is not tracked by the ledger")
    vectors = {k: list(v) for k, v in ledger.vectors.items()}
    lk = dict(ledger.lk_s3)
    for step in plan.steps:
        if not 0 <= step.index < link.n:
            raise IndexError(f"slide over component {step.index}, link has {link.n}")
        col = link.column(step.index)
        v = vectors[curve]
        for i in range(link.n):
            v[i] += step.orient * col[i]
        for other, w in vectors.items():
            if other != curve:
                key = _pair(curve, other)
                lk[key] = lk.get(key, 0) + step.orient * w[step.index]
    return Ledger(curve, vectors, lk)


def apply_plan_diagram(plan: SlidePlan, d: Diagram, k: str, bands: Sequence[BandSpec | None] | None = None) -> Diagram:
    """Fold :func:`band_slide` over the plan, one band per step."""
    link = linking_matrix(d)
    if bands is None:
        bands = [None] * len(plan)
    if len(bands) != len(plan):
        raise DiagramError(f"{len(bands)} bands supplied for a plan of {len(plan)} steps")
    for step, band in zip(plan.steps, bands):
        d = band_slide(d, k, link.names[step.index], step.orient, band)
    return d


@dataclass(frozen=True)
class LedgerCheck:
    discrepancies: tuple[tuple[str, int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def __bool__(self):
        return self.ok

    def report(self) -> str:
        if self.ok:
            return "pass"
        return "; ".join(f"{what}: ledger {a}, diagram {b}" for what, a, b in self.discrepancies)


def verify_ledger(d_out: Diagram, ledger: Ledger) -> LedgerCheck:
    """Recount all linking data on ``d_out`` and compare with the ledger."""
    link = linking_matrix(d_out)
    found = []
    for name, v in sorted(ledger.vectors.items()):
        actual = linking_vector(d_out, name, link).entries
        for i, (a, b) in enumerate(zip(v, actual)):
            if a != b:
                found.append((f"lk({name}, {link.names[i]})", a, b))
    for (a, b), expected in sorted(ledger.lk_s3.items()):
        actual = linking_number_s3(d_out, a, b)
        if actual != expected:
            found.append((f"lk({a}, {b})", expected, actual))
    return LedgerCheck(tuple(found))
