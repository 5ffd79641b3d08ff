"""Test-only generators and brute-force oracles."""

import itertools
import json
import random
from fractions import Fraction
from pathlib import Path

from surgeryseifert.diagram import Diagram

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name):
    return json.loads((FIXTURES / name).read_text())


def gauss_to_diagram(meta, seqs, signs):
    """Edge-form diagram from per-component Gauss sequences.

    ``meta``: name -> (role, framing); ``seqs``: name -> [(xid, is_over)];
    ``signs``: xid -> +-1. Edges are numbered 1.. in name order.
    """
    next_id = itertools.count(1)
    comps, slots = [], {}
    for name in sorted(meta):
        role, framing = meta[name]
        seq = seqs.get(name, [])
        edges = [next(next_id) for _ in range(max(len(seq), 1))]
        rec = {"name": name, "role": role, "edges": edges}
        if role == "surgery":
            rec["framing"] = framing
        comps.append(rec)
        for j, (x, over) in enumerate(seq):
            s = "over" if over else "under"
            slots.setdefault(x, {})[f"{s}_in"] = edges[j]
            slots[x][f"{s}_out"] = edges[(j + 1) % len(edges)]
    xs = [dict(slots[x], sign=signs[x]) for x in sorted(slots)]
    return Diagram.from_dict({"components": comps, "crossings": xs})


def random_diagram(rng: random.Random, n_surgery=None, n_knots=None, max_crossings=8):
    """Random valid diagram plus the generator's own linking-number table.

    Mutual crossings come in pairs so each pair's sign sum is even.
    Returns (diagram, lk) with lk[(a, b)] for sorted pairs, and writhes.
    """
    n_surgery = rng.randint(1, 3) if n_surgery is None else n_surgery
    n_knots = rng.randint(1, 2) if n_knots is None else n_knots
    meta = {f"L{i + 1}": ("surgery", rng.randint(-3, 3)) for i in range(n_surgery)}
    meta.update({name: ("knot", None) for name in ["K", "J"][:n_knots]})
    names = sorted(meta)
    seqs = {n: [] for n in names}
    signs = {}
    lk = {(a, b): 0 for a, b in itertools.combinations(names, 2)}
    wr = {n: 0 for n in names}
    xid = itertools.count()

    def place(comp, passage):
        seq = seqs[comp]
        seq.insert(rng.randint(0, len(seq)), passage)

    budget = rng.randint(0, max_crossings)
    while budget > 0:
        if budget >= 2 and rng.random() < 0.6:
            a, b = rng.sample(names, 2)
            total = 0
            for _ in range(2):
                x = next(xid)
                s = rng.choice((1, -1))
                signs[x] = s
                total += s
                over_a = rng.random() < 0.5
                place(a, (x, over_a))
                place(b, (x, not over_a))
            lk[tuple(sorted((a, b)))] += total // 2
            budget -= 2
        else:
            a = rng.choice(names)
            x = next(xid)
            s = rng.choice((1, -1))
            signs[x] = s
            wr[a] += s
            place(a, (x, True))
            place(a, (x, False))
            budget -= 1
    return gauss_to_diagram(meta, seqs, signs), lk, wr


def random_band(rng: random.Random, d: Diagram, k: str, c: str, max_len=3):
    from surgeryseifert.diagram import BandSpec

    edges = sorted(d.edges())
    path = tuple((rng.choice(edges), rng.choice(("L2R", "R2L"))) for _ in range(rng.randint(0, max_len)))
    return BandSpec(rng.choice(d.component(k).edges), rng.choice(d.component(c).edges), path)


def brute_force_solutions(m, v, bound):
    n = len(m[0]) if m else 0
    for x in itertools.product(range(-bound, bound + 1), repeat=n):
        if all(sum(a * b for a, b in zip(row, x)) == vi for row, vi in zip(m, v)):
            return x
    return None


def rational_solve(m, v):
    """Unique rational solution of a nonsingular square system, else None."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(vi)] for row, vi in zip(m, v)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k] / a[k][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [a[i][n] / a[i][i] for i in range(n)]


def leibniz_det(m):
    """Determinant by permutation expansion; works for any ring elements."""
    n = len(m)
    if n == 0:
        return 1
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term
    return total


def random_unimodular(rng: random.Random, n, steps=6, spread=2):
    """Product of elementary integer matrices, entries kept small."""
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            p[i] = [-x for x in p[i]]
            continue
        q = rng.randint(-spread, spread)
        p[i] = [x + q * y for x, y in zip(p[i], p[j])]
    return p


def random_seifert_matrix(rng: random.Random, g):
    """Random A with A - A^T equal to a unimodular congruence of the standard
    symplectic form, so det(A - A^T) = 1."""
    n = 2 * g
    j = [[0] * n for _ in range(n)]
    for k in range(g):
        j[2 * k][2 * k + 1] = -1
        j[2 * k + 1][2 * k] = 1
    # A = S + L with S symmetric random; L lower-triangular part of J
    sym = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            sym[a][b] = sym[b][a] = rng.randint(-3, 3)
    # A - A^T = J requires A = S + J/2; J has odd entries so split it:
    # put J's entry on whichever side makes A integral.
    a_mat = [[sym[r][c] + (j[r][c] if j[r][c] > 0 else 0) for c in range(n)] for r in range(n)]
    p = random_unimodular(rng, n, steps=rng.randint(0, 6), spread=1)
    pt = [list(r) for r in zip(*p)]
    mul = lambda x, y: [[sum(x[i][k] * y[k][jj] for k in range(len(y))) for jj in range(len(y[0]))] for i in range(len(x))]
    return mul(mul(pt, a_mat), p)
