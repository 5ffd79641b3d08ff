"""Command-line front end. Every subcommand reads JSON and writes JSON.

Exit codes: 0 success, 1 parse/validation error, 2 curve not
null-homologous, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .diagram import BandSpec, Diagram
from .errors import (
    InvariantViolation,
    NotNullHomologousError,
    SurgerySeifertError,
)
from .homlin import (
    FramedLinkData,
    h1_invariant_factors,
    linking_matrix,
    linking_vector,
    solve_integer_system,
)
from .invariants import BasisCurve, SeifertMatrix, alexander_polynomial, seifert_matrix_in_Y, signature
from .pipeline import h1_dict, polynomial_dict, run_pipeline
from .slides import (
    apply_plan_diagram,
    apply_plan_ledger,
    ledger_from_diagram,
    slide_plan,
    verify_ledger,
)
from .surgery import extended_diagram_h1, framing_convert, lk_y

EXIT_OK, EXIT_INPUT, EXIT_NOT_NULL, EXIT_INVARIANT = 0, 1, 2, 3


class InputError(SurgerySeifertError, ValueError):
    pass


def _require(data, key):
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"input is missing {key!r}")
    return data[key]


def _is_diagram(data) -> bool:
    return isinstance(data, dict) and "components" in data


def _link_from(data, curve=None):
    """(FramedLinkData, vector-or-None) from either a diagram or a matrix record."""
    if _is_diagram(data):
        d = Diagram.from_dict(data)
        link = linking_matrix(d)
        v = linking_vector(d, curve, link).entries if curve else None
        return link, v
    m = _require(data, "matrix")
    names = data.get("names") or [f"L{i + 1}" for i in range(len(m))]
    v = data.get("vector")
    return FramedLinkData(names, m), (tuple(v) if v is not None else None)


def _bands(path):
    if not path:
        return None
    data = _read_json(path)
    if not isinstance(data, list):
        raise InputError("bands file must hold a JSON list")
    return [BandSpec.from_dict(b) for b in data]


def _read_json(path):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def cmd_validate(data, args):
    d = Diagram.from_dict(data)
    return {"valid": True, "components": list(d.names), "crossings": len(d.crossings)}


def cmd_lkmatrix(data, args):
    d = Diagram.from_dict(data)
    link = linking_matrix(d)
    out = {"names": list(link.names), "matrix": [list(r) for r in link.matrix]}
    if args.curve:
        out["linking_vector"] = list(linking_vector(d, args.curve, link).entries)
    return out


def cmd_homology(data, args):
    link, _ = _link_from(data)
    return h1_dict(h1_invariant_factors(link.matrix))


def _solve(data, args):
    link, v = _link_from(data, args.curve)
    if v is None:
        raise InputError("need a 'vector' (or a diagram with --curve)")
    return link, v, solve_integer_system(link.matrix, v)


def cmd_solve(data, args):
    _, _, sol = _solve(data, args)
    return {"X": list(sol.x), "kernel_basis": [list(z) for z in sol.kernel_basis]}


def cmd_plan(data, args):
    if isinstance(data, dict) and "solution" in data:
        x = data["solution"]
        names = data.get("names") or [f"L{i + 1}" for i in range(len(x))]
    else:
        link, _, sol = _solve(data, args)
        x, names = sol.x, link.names
    return slide_plan(x).to_json(names)


def cmd_slide(data, args):
    d = Diagram.from_dict(data)
    if not args.curve:
        raise InputError("slide needs --curve")
    link = linking_matrix(d)
    sol = solve_integer_system(link.matrix, linking_vector(d, args.curve, link).entries)
    plan = slide_plan(sol)
    d_out = apply_plan_diagram(plan, d, args.curve, _bands(args.bands))
    ledger = apply_plan_ledger(plan, link, ledger_from_diagram(d, args.curve))
    check = verify_ledger(d_out, ledger)
    if not check.ok:
        raise InvariantViolation(check.report())
    return {
        "plan": plan.to_json(link.names),
        "linking_vector_after": list(linking_vector(d_out, args.curve, link).entries),
        "ledger_check": check.report(),
        "diagram": d_out.to_dict(),
    }


def cmd_lky(data, args):
    link, _ = _link_from(data)
    lk = _require(data, "lk_s3")
    v2 = _require(data, "v2")
    if "x1" in data:
        x1 = data["x1"]
    else:
        x1 = solve_integer_system(link.matrix, _require(data, "v1")).x
    return lk_y(lk, x1, v2, link).to_dict()


def cmd_seifert(data, args):
    link, _ = _link_from(data)
    curves = [BasisCurve.from_dict(c) for c in _require(data, "curves")]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        a = seifert_matrix_in_Y(curves, link)
    return {"basis": list(a.basis), "seifert_matrix": [list(r) for r in a.matrix], "warnings": list(a.warnings)}


def _seifert_input(data) -> SeifertMatrix:
    if isinstance(data, list):
        return SeifertMatrix(data)
    return SeifertMatrix(_require(data, "seifert_matrix"))


def cmd_alexander(data, args):
    return polynomial_dict(alexander_polynomial(_seifert_input(data)))


def cmd_signature(data, args):
    return {"signature": signature(_seifert_input(data))}


def cmd_convert_framing(data, args):
    p = _require(data, "p")
    v = _require(data, "vector")
    if "solution" in data:
        x = data["solution"]
    else:
        link, _ = _link_from(data)
        x = solve_integer_system(link.matrix, v).x
    return {"p": p, "s3_coefficient": framing_convert(p, x, v)}


def cmd_extend_h1(data, args):
    link, v = _link_from(data, args.curve)
    if v is None:
        raise InputError("need a 'vector' (or a diagram with --curve)")
    coeff = _require(data, "coefficient")
    out = h1_dict(extended_diagram_h1(link, v, coeff))
    out["check"] = "necessary-condition"
    return out


def cmd_pipeline(data, args):
    d = Diagram.from_dict(_require(data, "diagram"))
    curve = args.curve or data.get("curve")
    if not curve:
        raise InputError("pipeline needs a curve (input 'curve' or --curve)")
    bands = _bands(args.bands)
    if bands is None and data.get("bands") is not None:
        bands = [BandSpec.from_dict(b) for b in data["bands"]]
    basis = [BasisCurve.from_dict(c) for c in data.get("basis") or []]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return run_pipeline(d, curve, basis, bands, data.get("surgery_coefficient"))


COMMANDS = {
    "validate": cmd_validate,
    "lkmatrix": cmd_lkmatrix,
    "homology": cmd_homology,
    "solve": cmd_solve,
    "plan": cmd_plan,
    "slide": cmd_slide,
    "lky": cmd_lky,
    "seifert": cmd_seifert,
    "alexander": cmd_alexander,
    "signature": cmd_signature,
    "convert-framing": cmd_convert_framing,
    "extend-h1": cmd_extend_h1,
    "pipeline": cmd_pipeline,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surgeryseifert",
        description="Seifert surfaces and linking data for links in surgered 3-manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("path", nargs="?", help="input JSON file (same as --input)")
        p.add_argument("--input", help="input JSON file; '-' or omitted reads stdin")
        p.add_argument("--output", help="output file (default: stdout)")
        p.add_argument("--curve", help="knot component to track")
        p.add_argument("--bands", help="JSON list of band specs, one per slide")
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if args.path and args.input and args.path != args.input:
        print(json.dumps({"error": "give the input either positionally or with --input"}), file=stderr)
        return EXIT_INPUT
    try:
        data = _read_json(args.input or args.path)
        result = COMMANDS[args.command](data, args)
    except NotNullHomologousError as exc:
        print(json.dumps({"error": str(exc), "kind": "not-null-homologous"}), file=stderr)
        return EXIT_NOT_NULL
    except InvariantViolation as exc:
        print(json.dumps({"error": str(exc), "kind": "invariant-violation"}), file=stderr)
        return EXIT_INVARIANT
    except (SurgerySeifertError, ValueError, KeyError, TypeError, IndexError) as exc:
        print(json.dumps({"error": str(exc), "kind": "input"}), file=stderr)
        return EXIT_INPUT

    text = json.dumps(result, indent=2 if args.pretty else None, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
