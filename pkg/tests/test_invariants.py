import random
import warnings

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from surgeryseifert.diagram import diagram, parse_diagram
from surgeryseifert.errors import SeifertDataError
from surgeryseifert.homlin import FramedLinkData, identity, solve_integer_system
from surgeryseifert.invariants import (
    BasisCurve,
    SeifertBasisWarning,
    SeifertMatrix,
    alexander_polynomial,
    genus_bound,
    seifert_circles,
    seifert_matrix_in_Y,
    signature,
    symmetric_signature,
    tube_bookkeeping,
)
from surgeryseifert.polynomial import IntPolynomial, poly_determinant

from helpers import FIXTURES, leibniz_det, load_fixture, random_seifert_matrix, random_unimodular

T = sympy.Symbol("t")
EX1_LINK = FramedLinkData(("L1", "L2", "L3"), identity(3))
EX2_LINK = FramedLinkData(("L1", "L2"), ((0, 1), (1, 0)))
TREFOIL_A = ((-1, 1), (0, -1))


def sympy_alexander(a):
    n = len(a)
    m = sympy.Matrix(n, n, lambda i, j: a[i][j] - T * a[j][i])
    return sympy.Poly(sympy.expand(m.det()) if n else 1, T)


def canonical_sympy(p):
    coeffs = [int(c) for c in reversed(p.all_coeffs())]  # lowest degree first
    return IntPolynomial(coeffs).normalized()


def ex1_curves():
    return [BasisCurve.from_dict(c) for c in load_fixture("example1.json")["basis"]]


def ex2_curves():
    return [BasisCurve.from_dict(c) for c in load_fixture("example2.json")["basis"]]


# -- polynomials ------------------------------------------------------------


def test_polynomial_arithmetic_and_printing():
    t = IntPolynomial.t()
    p = t * t - t + 1
    assert p.coefficients == (1, -1, 1)
    assert str(p) == "t^2 - t + 1"
    assert str(-2 * t + 3) == "-2*t + 3"
    assert str(IntPolynomial()) == "0"
    assert p(1) == 1 and p(2) == 3
    assert (p * (t + 1)).exact_div(t + 1) == p
    with pytest.raises(ArithmeticError):
        p.exact_div(t + 2)


def test_normalization():
    assert IntPolynomial((0, 0, -1, 1, -1)).normalized() == IntPolynomial((1, -1, 1))
    assert IntPolynomial((0, -3)).normalized() == IntPolynomial((3,))
    assert IntPolynomial().normalized().is_zero()


@given(st.integers(0, 4).flatmap(
    lambda n: st.lists(st.lists(st.lists(st.integers(-3, 3), max_size=3), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
@settings(max_examples=80, deadline=None)
def test_poly_determinant_matches_leibniz(entries):
    m = [[IntPolynomial(c) for c in row] for row in entries]
    expected = leibniz_det(m)
    if isinstance(expected, int):
        expected = IntPolynomial.constant(expected)
    assert poly_determinant(m) == expected


# -- Seifert matrix in Y --------------------------------------------------


def test_seifert_matrix_example1():
    a = seifert_matrix_in_Y(ex1_curves(), EX1_LINK)
    assert a.matrix == ((-1, 0), (1, -1))
    assert a.warnings == ()


def test_seifert_matrix_example2():
    a = seifert_matrix_in_Y(ex2_curves(), EX2_LINK)
    assert a.matrix == ((-1, 0), (1, -1))


def test_example2_basis_table_as_printed_gives_other_matrix():
    # With X = (1,0), V = (0,1) the correction X.V vanishes, so the matrix is
    # the S^3 table itself.
    data = load_fixture("example2_basis_as_printed.json")
    curves = [BasisCurve.from_dict(c) for c in data["curves"]]
    a = seifert_matrix_in_Y(curves, EX2_LINK)
    assert a.matrix == ((0, 0), (1, 0))


def test_seifert_matrix_without_x_solves():
    curves = [BasisCurve(c.name, c.v, c.lk_s3_row) for c in ex1_curves()]
    assert seifert_matrix_in_Y(curves, EX1_LINK).matrix == ((-1, 0), (1, -1))


def test_seifert_matrix_empty_link_is_classical():
    link = FramedLinkData((), ())
    curves = [BasisCurve("a", (), {"a": -1, "b": 1}), BasisCurve("b", (), {"a": 0, "b": -1})]
    assert seifert_matrix_in_Y(curves, link).matrix == TREFOIL_A


def test_seifert_matrix_errors():
    curves = ex1_curves()
    bad = [BasisCurve("alpha", (0, 1, 0), {"alpha": 0}, (0, 1, 0)), curves[1]]
    with pytest.raises(SeifertDataError, match="missing"):
        seifert_matrix_in_Y(bad, EX1_LINK)
    bad = [BasisCurve("alpha", (0, 1, 0), {"alpha": 0, "beta": 0}, (1, 0, 0)), curves[1]]
    with pytest.raises(SeifertDataError, match="M X != V"):
        seifert_matrix_in_Y(bad, EX1_LINK)


def test_non_symplectic_basis_warns():
    curves = [BasisCurve("a", (), {"a": 1, "b": 0}), BasisCurve("b", (), {"a": 0, "b": 1})]
    with pytest.warns(SeifertBasisWarning):
        a = seifert_matrix_in_Y(curves, FramedLinkData((), ()))
    assert a.warnings


def test_seifert_matrix_independent_of_solution_choice():
    rng = random.Random(7)
    m = ((2, 2, 0), (2, 2, 0), (0, 0, 1))  # singular: kernel spanned by (1,-1,0)
    link = FramedLinkData(("a", "b", "c"), m)
    for _ in range(50):
        xs = [tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(2)]
        vs = [tuple(sum(r[k] * x[k] for k in range(3)) for r in m) for x in xs]
        rows = [{"p": rng.randint(-3, 3), "q": rng.randint(-3, 3)} for _ in range(2)]
        base = [BasisCurve(n, v, row, x) for n, v, row, x in zip("pq", vs, rows, xs)]
        kernel = solve_integer_system(m, vs[0]).kernel_basis
        shifted = []
        for c in base:
            coeffs = [rng.randint(-4, 4) for _ in kernel]
            x = list(c.x)
            for cf, z in zip(coeffs, kernel):
                x = [xi + cf * zi for xi, zi in zip(x, z)]
            shifted.append(BasisCurve(c.name, c.v, c.lk_s3_row, x))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            assert seifert_matrix_in_Y(base, link).matrix == seifert_matrix_in_Y(shifted, link).matrix


# -- signature ------------------------------------------------------------


@pytest.mark.parametrize(
    "a, expected",
    [
        (((-1, 0), (1, -1)), -2),
        (((1, 0), (0, 1)), 2),
        (((1, 0), (0, 0)), 1),  # A + A^T = diag(2, 0)
    ],
)
def test_signature_small(a, expected):
    assert signature(a) == expected


def test_signature_indefinite_diagonal():
    # A + A^T = diag(1, -1) needs half-integers; use the symmetric form directly
    assert symmetric_signature([[1, 0], [0, -1]]) == 0
    assert signature(((1, 0), (0, -1))) == 0


def test_signature_hyperbolic_block():
    assert symmetric_signature([[0, 1], [1, 0]]) == 0
    assert symmetric_signature([[0, 0, 1], [0, 0, 0], [1, 0, 0]]) == 0
    assert symmetric_signature([[0, 2, 1], [2, 0, 1], [1, 1, 0]]) == -1


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=150, deadline=None)
def test_signature_matches_eigenvalues(m):
    n = len(m)
    b = [[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]
    eig = np.linalg.eigvalsh(np.array(b, dtype=float))
    tol = 1e-7 * max(1.0, np.abs(eig).max())
    expected = int((eig > tol).sum() - (eig < -tol).sum())
    assert symmetric_signature(b) == expected


@given(st.integers(0, 10_000), st.integers(1, 3))
@settings(max_examples=100, deadline=None)
def test_signature_congruence_invariant(seed, g):
    rng = random.Random(seed)
    a = random_seifert_matrix(rng, g)
    p = random_unimodular(rng, 2 * g, steps=8, spread=2)
    pt = [list(r) for r in zip(*p)]
    mul = lambda x, y: [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))]
                        for i in range(len(x))]
    assert signature(mul(mul(pt, a), p)) == signature(a)


# -- Alexander polynomial ---------------------------------------------------


def test_alexander_examples():
    assert alexander_polynomial(((-1, 0), (1, -1))).coefficients == (1, -1, 1)
    assert alexander_polynomial(()) == IntPolynomial.constant(1)
    assert alexander_polynomial(TREFOIL_A).coefficients == (1, -1, 1)


@given(st.integers(0, 10_000), st.integers(1, 3))
@settings(max_examples=100, deadline=None)
def test_alexander_matches_sympy_and_is_symmetric(seed, g):
    a = random_seifert_matrix(random.Random(seed), g)
    delta = alexander_polynomial(a)
    assert delta == canonical_sympy(sympy_alexander(a))
    assert delta == delta.reversed().normalized()
    assert abs(delta(1)) == 1


# -- genus, circles, tubes -----------------------------------------------------


def test_genus_bound_examples():
    gb = genus_bound(IntPolynomial((1, -1, 1)), ((-1, 0), (1, -1)))
    assert (gb.lower, gb.upper, gb.exact) == (1, 1, True)
    gb = genus_bound(IntPolynomial((1,)), ())
    assert (gb.lower, gb.upper) == (0, 0)
    gb = genus_bound(IntPolynomial((1, 0, 0, 0, 1)), [[0] * 4 for _ in range(4)])
    assert (gb.lower, gb.upper) == (2, 2)
    with pytest.raises(SeifertDataError, match="odd"):
        genus_bound(IntPolynomial((1,)), ((1,),))


def test_seifert_circles_examples():
    unknot = diagram([{"name": "U", "role": "knot", "edges": [1]}])
    assert _stats(seifert_circles(unknot, "U")) == (1, 0, 1, 0)
    tref = parse_diagram((FIXTURES / "trefoil_diagram.json").read_text())
    assert _stats(seifert_circles(tref, "T")) == (2, 3, -1, 1)
    split = diagram([{"name": "A", "role": "knot", "edges": [1]}, {"name": "B", "role": "knot", "edges": [2]}])
    assert _stats(seifert_circles(split, ["A", "B"])) == (2, 0, 2, 0)


def test_seifert_circles_ignores_unselected_components():
    d = parse_diagram((FIXTURES / "example1_diagram.json").read_text())
    assert _stats(seifert_circles(d, "K")) == (1, 0, 1, 0)


def test_seifert_circle_genus_agrees_with_trefoil_seifert_matrix():
    tref = parse_diagram((FIXTURES / "trefoil_diagram.json").read_text())
    stats = seifert_circles(tref, "T")
    gb = genus_bound(alexander_polynomial(TREFOIL_A), TREFOIL_A)
    assert stats.genus == gb.upper == gb.lower


def _stats(s):
    return (s.circles, s.crossings, s.chi, s.genus)


def test_tube_bookkeeping():
    r = tube_bookkeeping(1, [0, 2, 0])
    assert (r.tubes, r.chi, r.genus_delta) == (1, -1, 1)
    r = tube_bookkeeping(-3, [0, 0])
    assert (r.tubes, r.chi, r.genus_delta) == (0, -3, 0)
    r = tube_bookkeeping(-1, [2, 2])
    assert (r.tubes, r.chi, r.genus_delta) == (2, -5, 2)
    with pytest.raises(SeifertDataError):
        tube_bookkeeping(1, [1])


def test_seifert_matrix_object_accepts_plain_rows():
    assert signature(SeifertMatrix(((-1, 0), (1, -1)))) == -2
