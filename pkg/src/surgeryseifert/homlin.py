"""Exact integer linear algebra for surgery presentations.

Matrices are plain row-major lists of lists of Python ints; results are
returned as tuples so they can be hashed and compared. Nothing in this
module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionError, NotNullHomologousError

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionError("ragged matrix rows")
    return m


def as_vector(v: Sequence[int]) -> Vector:
    return tuple(int(x) for x in v)


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    if a and len(a[0]) != inner:
        raise DimensionError(f"cannot multiply {len(a)}x{len(a[0])} by {inner}x{cols}")
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols))
        for row in a
    )


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    if a and len(a[0]) != len(v):
        raise DimensionError(f"matrix has {len(a[0])} columns, vector has length {len(v)}")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} != {len(v)}")
    return sum(x * y for x, y in zip(u, v))


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*m)) if m else ()


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class FramedLinkData:
    """Numerical shadow of a surgery presentation.

    ``matrix[i][j]`` is the S^3 linking number of components i and j for
    i != j; the diagonal carries the framing coefficients.
    """

    names: tuple[str, ...]
    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "matrix", as_matrix(self.matrix))
        n = len(self.names)
        if shape(self.matrix) != (n, n) and not (n == 0 and self.matrix == ()):
            raise DimensionError(f"{n} names but matrix has shape {shape(self.matrix)}")
        for i in range(n):
            for j in range(i):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise DimensionError(
                        f"linking matrix not symmetric at ({self.names[i]}, {self.names[j]})"
                    )

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def framings(self) -> Vector:
        return tuple(self.matrix[i][i] for i in range(self.n))

    def column(self, i: int) -> Vector:
        return tuple(row[i] for row in self.matrix)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no surgery component named {name!r}") from None


@dataclass(frozen=True)
class LinkingVector:
    """Linking numbers of a tracked curve with each surgery component."""

    entries: Vector
    owner: str = ""

    def __post_init__(self):
        object.__setattr__(self, "entries", as_vector(self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class SolutionVector:
    """An integer solution of ``M X = V`` plus a basis of ``ker M``."""

    x: Vector
    kernel_basis: tuple[Vector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "x", as_vector(self.x))
        object.__setattr__(self, "kernel_basis", tuple(as_vector(z) for z in self.kernel_basis))

    def __len__(self):
        return len(self.x)

    def __iter__(self):
        return iter(self.x)

    def __getitem__(self, i):
        return self.x[i]

    def shifted(self, coefficients: Sequence[int]) -> SolutionVector:
        """Another solution: ``x + sum(c_k * kernel_basis[k])``."""
        x = list(self.x)
        for c, z in zip(coefficients, self.kernel_basis, strict=True):
            for i, zi in enumerate(z):
                x[i] += c * zi
        return SolutionVector(x, self.kernel_basis)


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ W == S`` with U, W unimodular and S in Smith form."""

    U: Matrix
    S: Matrix
    W: Matrix

    @property
    def diagonal(self) -> Vector:
        rows, cols = shape(self.S)
        return tuple(self.S[i][i] for i in range(min(rows, cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


@dataclass(frozen=True)
class H1:
    """First homology Z^free_rank + sum of Z/t for t in torsion."""

    free_rank: int
    torsion: tuple[int, ...] = field(default=())

    @property
    def is_homology_sphere(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_trivial(self) -> bool:
        return self.is_homology_sphere

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def linking_matrix(d) -> FramedLinkData:
    """Linking matrix of the surgery components of diagram ``d``.

    Components are ordered as in the diagram (sorted by name).
    """
    from .diagram import linking_number_s3

    surgery = [c for c in d.components if c.role == "surgery"]
    names = tuple(c.name for c in surgery)
    rows = []
    for i, ci in enumerate(surgery):
        row = []
        for j, cj in enumerate(surgery):
            row.append(ci.framing if i == j else linking_number_s3(d, ci.name, cj.name))
        rows.append(row)
    return FramedLinkData(names, rows)


def linking_vector(d, curve: str | Sequence[str], link: FramedLinkData | None = None) -> LinkingVector:
    """Linking vector of a tracked curve (one or several knot components)."""
    from .diagram import linking_number_s3

    parts = [curve] if isinstance(curve, str) else list(curve)
    d.component(parts[0])  # raises on unknown names
    if link is None:
        link = linking_matrix(d)
    entries = [sum(linking_number_s3(d, k, name) for k in parts) for name in link.names]
    return LinkingVector(entries, "+".join(parts))


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_row(a, src, dst, q):
    """row[dst] += q * row[src]"""
    if q:
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]


def _add_col(a, src, dst, q):
    if q:
        for row in a:
            row[dst] += q * row[src]


def smith_normal_form(m: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form with transforms.

    Pivot rule: the nonzero entry of smallest absolute value in the
    remaining block, ties broken row-major. Inputs already in Smith form
    come back with identity transforms.
    """
    a = [list(r) for r in as_matrix(m)]
    rows, cols = shape(as_matrix(m))
    u = [list(r) for r in identity(rows)]
    w = [list(r) for r in identity(cols)]
    # u, w are maintained so that u @ m @ w == a at every step.

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return SnfResult(as_matrix(u), as_matrix(a), as_matrix(w))
            pi, pj = pivot
            if pi != t:
                _swap_rows(a, t, pi)
                _swap_rows(u, t, pi)
            if pj != t:
                _swap_cols(a, t, pj)
                _swap_cols(w, t, pj)

            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                _add_row(a, t, i, -q)
                _add_row(u, t, i, -q)
                dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                q = a[t][j] // p
                _add_col(a, t, j, -q)
                _add_col(w, t, j, -q)
                dirty |= a[t][j] != 0
            if dirty:
                continue

            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is not None:
                _add_row(a, bad, t, 1)
                _add_row(u, bad, t, 1)
                continue

            if p < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            break

    return SnfResult(as_matrix(u), as_matrix(a), as_matrix(w))


def solve_integer_system(m: Sequence[Sequence[int]], v: Sequence[int]) -> SolutionVector:
    """Solve ``M X = V`` over the integers.

    Returns the particular solution whose free coordinates (in the Smith
    basis) are zero, together with a kernel basis. Raises
    :class:`NotNullHomologousError` when no integer solution exists.
    """
    m = as_matrix(m)
    v = as_vector(v)
    rows, cols = shape(m)
    if rows != len(v):
        raise DimensionError(f"matrix has {rows} rows, vector has length {len(v)}")
    snf = smith_normal_form(m)
    c = matvec(snf.U, v) if rows else ()
    diag = snf.diagonal
    y = [0] * cols
    for i in range(rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c[i] != 0:
                raise NotNullHomologousError(f"no integer solution: {v} not in the image of M")
        elif c[i] % d:
            raise NotNullHomologousError(
                f"no integer solution: invariant factor {d} does not divide {c[i]}"
            )
        else:
            y[i] = c[i] // d
    x = matvec(snf.W, y) if cols else ()
    kernel = tuple(
        tuple(snf.W[r][k] for r in range(cols))
        for k in range(cols)
        if k >= len(diag) or diag[k] == 0
    )
    return SolutionVector(x, kernel)


def is_solvable(m, v) -> bool:
    try:
        solve_integer_system(m, v)
    except NotNullHomologousError:
        return False
    return True


def h1_invariant_factors(m: Sequence[Sequence[int]]) -> H1:
    """H_1 of the manifold presented by square linking matrix ``m``.

    The group is the cokernel Z^n / M Z^n.
    """
    m = as_matrix(m)
    rows, cols = shape(m)
    if rows != cols:
        raise DimensionError(f"presentation matrix must be square, got {rows}x{cols}")
    snf = smith_normal_form(m)
    diag = snf.diagonal
    return H1(
        free_rank=sum(1 for d in diag if d == 0),
        torsion=tuple(d for d in diag if d > 1),
    )


def is_homology_sphere(m) -> bool:
    return h1_invariant_factors(m).is_homology_sphere
