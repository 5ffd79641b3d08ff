"""Seifert matrices in the surgered manifold and the invariants read off them."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DiagramError, SeifertDataError
from .homlin import (
    FramedLinkData,
    Matrix,
    as_matrix,
    as_vector,
    determinant,
    dot,
    matvec,
    solve_integer_system,
)
from .polynomial import IntPolynomial, poly_determinant


class SeifertBasisWarning(UserWarning):
    """det(A - A^T) != 1: the basis is not symplectic for a one-boundary surface."""


@dataclass(frozen=True)
class BasisCurve:
    """A curve on the Seifert surface together with its linking data.

    ``lk_s3_row[other]`` is the S^3 linking number of this curve with the
    positive push-off of ``other``. ``x`` may be omitted; it is then solved
    for from the linking matrix.
    """

    name: str
    v: tuple[int, ...]
    lk_s3_row: Mapping[str, int]
    x: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "v", as_vector(self.v))
        if self.x is not None:
            object.__setattr__(self, "x", as_vector(self.x))
        object.__setattr__(self, "lk_s3_row", dict(self.lk_s3_row))

    @classmethod
    def from_dict(cls, data) -> BasisCurve:
        try:
            return cls(data["name"], data["V"], data["lk_s3"], data.get("X"))
        except (KeyError, TypeError) as exc:
            raise SeifertDataError(f"basis curve record needs name, V, lk_s3: {exc}") from None


@dataclass(frozen=True)
class SeifertMatrix:
    matrix: Matrix
    basis: tuple[str, ...] = ()
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "matrix", as_matrix(self.matrix))

    @property
    def size(self) -> int:
        return len(self.matrix)

    def intersection_determinant(self) -> int:
        a = self.matrix
        return determinant([[a[i][j] - a[j][i] for j in range(self.size)] for i in range(self.size)])


def _as_seifert(a) -> SeifertMatrix:
    return a if isinstance(a, SeifertMatrix) else SeifertMatrix(a)


def check_symplectic(a: SeifertMatrix) -> list[str]:
    if a.size == 0:
        return []
    det = a.intersection_determinant()
    if det != 1:
        return [f"det(A - A^T) = {det}, expected 1 for a symplectic basis"]
    return []


def seifert_matrix_in_Y(curves: Sequence[BasisCurve], link: FramedLinkData) -> SeifertMatrix:
    """Seifert matrix with entries ``lk_Y(c_i, c_j^+)``.

    Each entry is ``lk_S3(c_i, c_j^+) - X_i . V_j``; a parallel push-off links
    the surgery curves exactly as the curve itself does.
    """
    xs: list[tuple[int, ...]] = []
    for c in curves:
        if len(c.v) != link.n:
            raise SeifertDataError(f"curve {c.name!r}: V has length {len(c.v)}, expected {link.n}")
        if c.x is None:
            xs.append(solve_integer_system(link.matrix, c.v).x)
        else:
            if len(c.x) != link.n or matvec(link.matrix, c.x) != c.v:
                raise SeifertDataError(f"curve {c.name!r}: M X != V")
            xs.append(c.x)
    rows = []
    for ci, xi in zip(curves, xs):
        row = []
        for cj in curves:
            if cj.name not in ci.lk_s3_row:
                raise SeifertDataError(f"missing lk_S3({ci.name}, {cj.name}+)")
            row.append(ci.lk_s3_row[cj.name] - dot(xi, cj.v))
        rows.append(row)
    result = SeifertMatrix(rows, tuple(c.name for c in curves))
    notes = check_symplectic(result)
    for note in notes:
        warnings.warn(note, SeifertBasisWarning, stacklevel=2)
    return SeifertMatrix(result.matrix, result.basis, tuple(notes))


def symmetric_signature(b: Sequence[Sequence[int | Fraction]]) -> int:
    """Signature of a symmetric matrix by exact congruence diagonalization."""
    n = len(b)
    a = [[Fraction(x) for x in row] for row in b]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    def eliminate(src, coeff, dst):
        # row/col dst -= coeff * row/col src
        a[dst] = [x - coeff * y for x, y in zip(a[dst], a[src])]
        for row in a:
            row[dst] -= coeff * row[src]

    sig = 0
    k = 0
    while k < n:
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap(k, j)
        if a[k][k] != 0:
            p = a[k][k]
            for i in range(k + 1, n):
                if a[i][k]:
                    eliminate(k, a[i][k] / p, i)
            sig += 1 if p > 0 else -1
            k += 1
            continue
        j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
        if j is None:
            k += 1  # null direction
            continue
        # hyperbolic block [[0, h], [h, 0]] on (k, k+1): signature 0
        swap(k + 1, j)
        h = a[k][k + 1]
        for i in range(k + 2, n):
            ci, di = a[i][k], a[i][k + 1]
            if di:
                eliminate(k, di / h, i)
            if ci:
                eliminate(k + 1, ci / h, i)
        k += 2
    return sig


def signature(a) -> int:
    """sigma = sign(A + A^T)."""
    a = _as_seifert(a).matrix
    n = len(a)
    return symmetric_signature([[a[i][j] + a[j][i] for j in range(n)] for i in range(n)])


def alexander_polynomial(a) -> IntPolynomial:
    """Normalized det(A - t A^T)."""
    a = _as_seifert(a).matrix
    n = len(a)
    t = IntPolynomial.t()
    m = [[IntPolynomial.constant(a[i][j]) - t * a[j][i] for j in range(n)] for i in range(n)]
    return poly_determinant(m).normalized()


@dataclass(frozen=True)
class GenusBound:
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def genus_bound(delta: IntPolynomial, a) -> GenusBound:
    """Bounds on the minimal genus: half the span of the Alexander
    polynomial below, half the basis size of the constructed surface above."""
    a = _as_seifert(a)
    if a.size % 2:
        raise SeifertDataError(f"Seifert matrix has odd size {a.size}; the basis is not symplectic")
    span = delta.normalized().degree
    lower = (max(span, 0) + 1) // 2
    return GenusBound(lower, a.size // 2)


@dataclass(frozen=True)
class SeifertCircleStats:
    circles: int
    crossings: int
    chi: int
    genus: int
    surface_components: int = 1


def seifert_circles(d, components: str | Iterable[str]) -> SeifertCircleStats:
    """Statistics of the classical Seifert surface of a sublink.

    Every crossing between two selected components is smoothed along the
    orientation; crossings with unselected components are ignored.
    """
    names = {components} if isinstance(components, str) else set(components)
    for n in names:
        d.component(n)
    if not names:
        raise DiagramError("seifert_circles needs at least one component")
    edges = [e for c in d.components if c.name in names for e in c.edges]
    nxt = {}
    inner = []
    for x in d.crossings:
        a, b = d.owner(x.over_in), d.owner(x.under_in)
        if a in names and b in names:
            nxt[x.over_in] = x.under_out
            nxt[x.under_in] = x.over_out
            inner.append(x)
        else:
            if a in names:
                nxt[x.over_in] = x.over_out
            if b in names:
                nxt[x.under_in] = x.under_out
    circle_of: dict[int, int] = {}
    s = 0
    for e in edges:
        if e in circle_of:
            continue
        cur = e
        while cur not in circle_of:
            circle_of[cur] = s
            cur = nxt.get(cur, cur)
        s += 1

    parent = list(range(s))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in inner:
        ra, rb = find(circle_of[x.over_in]), find(circle_of[x.under_in])
        parent[ra] = rb
    b0 = len({find(i) for i in range(s)})
    c = len(inner)
    chi = s - c
    genus = (2 * b0 - len(names) - chi) // 2
    return SeifertCircleStats(s, c, chi, genus, b0)


@dataclass(frozen=True)
class TubeResult:
    tubes: int
    chi: int
    genus_delta: int


def tube_bookkeeping(chi_f: int, intersections: Sequence[int]) -> TubeResult:
    """Euler characteristic after tubing away paired surface/surgery-curve
    intersections; each tube lowers chi by two."""
    for i, n in enumerate(intersections):
        if n < 0 or n % 2:
            raise SeifertDataError(
                f"component {i}: {n} intersection points cannot be paired with opposite signs"
            )
    tubes = sum(intersections) // 2
    return TubeResult(tubes, chi_f - 2 * tubes, tubes)
