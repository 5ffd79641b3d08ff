"""Linking numbers and surgery coefficients in the surgered manifold."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, NotNullHomologousError
from .homlin import (
    H1,
    FramedLinkData,
    LinkingVector,
    SolutionVector,
    as_vector,
    dot,
    h1_invariant_factors,
    solve_integer_system,
)


@dataclass(frozen=True)
class YLinkResult:
    value: int
    lk_s3: int
    correction: int
    solution: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "lk_s3": self.lk_s3,
            "correction": self.correction,
            "solution_used": list(self.solution),
        }


def _x(v) -> tuple[int, ...]:
    return v.x if isinstance(v, SolutionVector) else as_vector(v)


def lk_y(lk_s3: int, x1, v2, link: FramedLinkData | None = None) -> YLinkResult:
    """``lk_Y(K1, K2) = lk_S3(K1, K2) - X1 . V2``.

    When ``link`` is given, ``V2`` is checked to lie in the image of the
    linking matrix; otherwise ``K2`` is assumed null-homologous. The value
    does not depend on which solution ``X1`` is supplied.
    """
    x = _x(x1)
    v = as_vector(v2)
    if len(x) != len(v):
        raise DimensionError(f"X1 has length {len(x)}, V2 has length {len(v)}")
    if link is not None:
        if link.n != len(v):
            raise DimensionError(f"V2 has length {len(v)}, link has {link.n} components")
        try:
            solve_integer_system(link.matrix, v)
        except NotNullHomologousError:
            raise NotNullHomologousError(
                "second curve is not null-homologous; lk_Y is undefined"
            ) from None
    correction = dot(x, v)
    return YLinkResult(lk_s3 - correction, lk_s3, correction, x)


def lk_y_from_vectors(lk_s3: int, v1, v2, link: FramedLinkData) -> YLinkResult:
    """Solve for ``X1`` (canonical solution), then apply :func:`lk_y`."""
    x1 = solve_integer_system(link.matrix, as_vector(v1))
    return lk_y(lk_s3, x1, v2, link)


def framing_convert(p: int, x, v) -> int:
    """S^3 framing coefficient realizing ``p``-surgery in the surgered manifold."""
    return p + dot(_x(x), as_vector(v))


def bordered_matrix(link: FramedLinkData, v_k: Sequence[int], coeff: int) -> tuple[tuple[int, ...], ...]:
    v = as_vector(v_k)
    if len(v) != link.n:
        raise DimensionError(f"V_K has length {len(v)}, link has {link.n} components")
    rows = [tuple(row) + (v[i],) for i, row in enumerate(link.matrix)]
    rows.append(v + (int(coeff),))
    return tuple(rows)


def extended_diagram_h1(link: FramedLinkData, v_k, coeff: int) -> H1:
    """H_1 of the surgery diagram extended by the knot with S^3 coefficient
    ``coeff``.

    This is a necessary-condition check on claims about the resulting
    manifold, not a diffeomorphism test.
    """
    if isinstance(v_k, LinkingVector):
        v_k = v_k.entries
    return h1_invariant_factors(bordered_matrix(link, v_k, coeff))
