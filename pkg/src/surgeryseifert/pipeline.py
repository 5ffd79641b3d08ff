"""End-to-end run: diagram -> slides -> Seifert data -> invariants."""

from __future__ import annotations

from typing import Sequence

from .diagram import BandSpec, Diagram
from .errors import InvariantViolation, SeifertDataError
from .homlin import h1_invariant_factors, linking_matrix, linking_vector, solve_integer_system
from .invariants import (
    BasisCurve,
    alexander_polynomial,
    genus_bound,
    seifert_circles,
    seifert_matrix_in_Y,
    signature,
)
from .slides import apply_plan_diagram, apply_plan_ledger, ledger_from_diagram, slide_plan, verify_ledger
from .surgery import extended_diagram_h1, framing_convert


def h1_dict(h1) -> dict:
    return {
        "free_rank": h1.free_rank,
        "torsion": list(h1.torsion),
        "is_homology_sphere": h1.is_homology_sphere,
        "group": h1.describe(),
    }


def polynomial_dict(p) -> dict:
    return {"coefficients": list(p.coefficients), "polynomial": str(p)}


def run_pipeline(
    d: Diagram,
    curve: str,
    basis: Sequence[BasisCurve] | None = None,
    bands: Sequence[BandSpec | None] | None = None,
    surgery_coefficient: int | None = None,
) -> dict:
    """Run the whole construction and return a JSON-ready report.

    Raises :class:`NotNullHomologousError` if ``curve`` bounds no Seifert
    surface and :class:`InvariantViolation` if the diagram rewrite and the
    ledger disagree.
    """
    link = linking_matrix(d)
    v = linking_vector(d, curve, link)
    sol = solve_integer_system(link.matrix, v.entries)
    plan = slide_plan(sol)

    ledger0 = ledger_from_diagram(d, curve)
    ledger = apply_plan_ledger(plan, link, ledger0)
    d_out = apply_plan_diagram(plan, d, curve, bands)
    check = verify_ledger(d_out, ledger)
    if not check.ok:
        raise InvariantViolation(f"ledger and diagram disagree: {check.report()}")
    v_after = linking_vector(d_out, curve, link).entries
    if any(v_after):
        raise InvariantViolation(f"linking vector after slides is {v_after}, expected zero")

    stats = seifert_circles(d_out, curve)
    report = {
        "linking_matrix": {"names": list(link.names), "matrix": [list(r) for r in link.matrix]},
        "h1": h1_dict(h1_invariant_factors(link.matrix)),
        "curve": curve,
        "linking_vector": list(v.entries),
        "solution": {"X": list(sol.x), "kernel_basis": [list(z) for z in sol.kernel_basis]},
        "plan": plan.to_json(link.names),
        "linking_vector_after": list(v_after),
        "ledger_check": check.report(),
        "slid_diagram": d_out.to_dict(),
        "classical_surface": {
            "circles": stats.circles,
            "crossings": stats.crossings,
            "chi": stats.chi,
            "genus": stats.genus,
        },
    }

    if basis:
        a = seifert_matrix_in_Y(basis, link)
        delta = alexander_polynomial(a)
        report["seifert"] = {
            "basis": list(a.basis),
            "matrix": [list(r) for r in a.matrix],
            "warnings": list(a.warnings),
        }
        report["signature"] = signature(a)
        report["alexander"] = polynomial_dict(delta)
        try:
            gb = genus_bound(delta, a)
            report["genus_bound"] = {"lower": gb.lower, "upper": gb.upper, "exact": gb.exact}
        except SeifertDataError as exc:
            report["genus_bound"] = {"error": str(exc)}

    if surgery_coefficient is not None:
        coeff = framing_convert(surgery_coefficient, sol, v.entries)
        report["surgery"] = {
            "p": surgery_coefficient,
            "s3_coefficient": coeff,
            "extended_h1": h1_dict(extended_diagram_h1(link, v.entries, coeff)),
            "check": "necessary-condition",
        }
    return report
