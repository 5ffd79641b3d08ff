"""Integer polynomials in one variable and exact polynomial determinants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in ``t`` with integer coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(int(c) for c in self.coefficients))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def t(cls) -> IntPolynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (n - len(self.coefficients))
        b = other.coefficients + (0,) * (n - len(other.coefficients))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        """Quotient when ``other`` divides ``self`` exactly in Z[t]."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coefficients)
        dq = other.degree
        lead = other.leading
        q = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            if rem[i] == 0:
                continue
            c, r = divmod(rem[i], lead)
            if r:
                raise ArithmeticError(f"{other} does not divide {self} over the integers")
            q[i - dq] = c
            for j, b in enumerate(other.coefficients):
                rem[i - dq + j] -= c * b
        if any(rem):
            raise ArithmeticError(f"{other} does not divide {self}")
        return IntPolynomial(q)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def reversed(self) -> IntPolynomial:
        """``t^deg * p(1/t)``"""
        return IntPolynomial(tuple(reversed(self.coefficients)))

    def normalized(self) -> IntPolynomial:
        """Representative up to units ``+-t^k``: nonzero constant term and
        positive leading coefficient."""
        c = list(self.coefficients)
        while c and c[0] == 0:
            c.pop(0)
        if c and c[-1] < 0:
            c = [-x for x in c]
        return IntPolynomial(c)

    def equivalent(self, other: IntPolynomial) -> bool:
        return self.normalized() == _coerce(other).normalized()

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def poly_determinant(m: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Determinant over Z[t] by Bareiss elimination (all divisions exact)."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return IntPolynomial.constant(1)
    a = [[_coerce(x) for x in row] for row in m]
    sign = 1
    prev = IntPolynomial.constant(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return IntPolynomial()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = IntPolynomial()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det
