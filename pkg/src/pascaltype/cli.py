"""Command-line front end.

Every command prints one JSON document on stdout.  Exit codes:
0 predicate true / proof succeeded, 1 predicate false,
2 hypothesis or degeneracy error, 3 input or resource error.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Any, Callable

from . import jsonio, multipoly, pascal, quadric3, rnc, rsb
from .errors import DegeneracyError, DimensionError, GenerationError, ResourceError
from .exact import rank
from .jsonio import InputError, encode_line, encode_point
from .multipoly import DEFAULT_TERM_CEILING
from .results import Verdict, fmt

EXIT_TRUE, EXIT_FALSE, EXIT_HYPOTHESIS, EXIT_INPUT = 0, 1, 2, 3


def _emit(doc: dict[str, Any]) -> None:
    sys.stdout.write(jsonio.dumps(doc) + "\n")


def _verdict_exit(v: Verdict) -> int:
    if v.hypothesis_errors:
        return EXIT_HYPOTHESIS
    return EXIT_TRUE if v.member else EXIT_FALSE


def _timed(command: str, fn: Callable[[], Verdict]) -> Verdict:
    t0 = time.perf_counter()
    v = fn()
    v.command = command
    v.timing_ms = (time.perf_counter() - t0) * 1e3
    return v


# -- pascal ---------------------------------------------------------------------

def cmd_pascal_check(args) -> int:
    doc = jsonio.load(args.input)
    inst = pascal.PascalInstance(jsonio.points_field(doc, "points", 6, 2))

    def run():
        F = pascal.pascal_F(inst)
        q = pascal.pascal_derived(inst)
        G = pascal.pascal_G(inst)
        return Verdict("pascal check", F == 0,
                       witnesses={"F": fmt(F), "G": fmt(G), "derived_points": [encode_point(p) for p in q]},
                       extra={"on_conic": F == 0, "derived_collinear": G == 0,
                              "collinear_triples": [[i + 1 for i in t] for t in inst.collinear_triples()]})

    v = _timed("pascal check", run)
    _emit(v.to_json())
    return _verdict_exit(v)


def _identity_doc(command: str, proof, dump: str | None) -> dict:
    doc = {"command": command, **proof.to_json()}
    if dump and proof.lhs is not None:
        with open(dump, "w") as fh:
            fh.write(multipoly.dumps(proof.lhs))
        doc["dump"] = dump
    return doc


def cmd_pascal_identity(args) -> int:
    proof = pascal.pascal_identity(args.term_ceiling)
    _emit(_identity_doc("pascal identity", proof, args.dump))
    return EXIT_TRUE if proof.proved else EXIT_FALSE


# -- rnc ------------------------------------------------------------------------

def _rnc_instance(args) -> rnc.RncInstance:
    doc = jsonio.load(args.input)
    if not isinstance(doc, dict):
        raise InputError("instance file must contain a JSON object")
    d = args.d if args.d is not None else jsonio.field(doc, "d")
    if not isinstance(d, int) or isinstance(d, bool):
        raise InputError("d must be an integer")
    if "d" in doc and doc["d"] != d:
        raise InputError(f"--d {d} disagrees with the file's d = {doc['d']}")
    return rnc.RncInstance(d, jsonio.points_field(doc, "points", d + 4, d))


def cmd_rnc_check(args) -> int:
    inst = _rnc_instance(args)
    v = rnc.rnc_check(inst)
    _emit(v.to_json())
    return _verdict_exit(v)


def rnc_instance_json(inst: rnc.RncInstance) -> dict:
    return {"d": inst.d, "points": [encode_point(p) for p in inst.points]}


def cmd_rnc_sample(args) -> int:
    inst = rnc.rnc_sample(args.d, args.seed)
    _emit(rnc_instance_json(inst))
    return EXIT_TRUE


def cmd_rnc_jacobian(args) -> int:
    inst = _rnc_instance(args)
    inst.require_general_position()
    nf = rnc.normal_form(inst)
    r = rnc.rnc_jacobian_rank(nf)
    v = Verdict("rnc jacobian", r == inst.d - 1,
                witnesses={"rank": r, "expected": inst.d - 1,
                           "a": [fmt(x) for x in nf.a], "b": [fmt(x) for x in nf.b]})
    _emit(v.to_json())
    return _verdict_exit(v)


# -- quadric3 -------------------------------------------------------------------

def cmd_quadric_exists(args) -> int:
    doc = jsonio.load(args.input)
    dim = doc.get("dim", 3) if isinstance(doc, dict) else 3
    raw = jsonio.field(doc, "constraints")
    if not isinstance(raw, list):
        raise InputError("'constraints' must be an array")
    cons = [jsonio.decode_constraint(c, dim) for c in raw]

    def run():
        system = quadric3.quadric_system(cons, dim)
        ok, form = quadric3.exists_quadric(cons, dim)
        kernel = system.cols - rank(system)
        return Verdict("quadric3 exists", ok,
                       witnesses={"rows": system.rows, "kernel_dim": kernel,
                                  "form": [fmt(x) for x in form.coeffs] if form else None})

    v = _timed("quadric3 exists", run)
    _emit(v.to_json())
    return _verdict_exit(v)


def cmd_quadric_p3l(args) -> int:
    doc = jsonio.load(args.input)
    P = jsonio.decode_point(jsonio.field(doc, "point"), 3)
    lines = jsonio.lines_field(doc, "lines", 3, 3)

    def run():
        concurrent = quadric3.p3l_concurrent(P, lines)
        _, R = quadric3.p3l_frame(P, lines)
        value = quadric3.p3l_det(*R)
        factors = quadric3.p3l_factors(*R)
        direct, _ = quadric3.exists_quadric(quadric3.p3l_constraints(P, lines))
        return Verdict("quadric3 p3l", value == 0,
                       witnesses={"det": fmt(value), "factors": [fmt(x) for x in factors],
                                  "frame_R": [encode_point(r) for r in R]},
                       extra={"concurrent": concurrent, "degenerate": any(f == 0 for f in factors[:3]),
                              "quadric_exists_direct": direct})

    v = _timed("quadric3 p3l", run)
    _emit(v.to_json())
    return _verdict_exit(v)


def cmd_quadric_reduce42(args) -> int:
    doc = jsonio.load(args.input)
    pts = jsonio.points_field(doc, "points", 4, 3)
    l1, l2 = jsonio.lines_field(doc, "lines", 2, 3)

    def run():
        p0, transversals = quadric3.reduce_4p2l(pts, l1, l2)
        before, _ = quadric3.exists_quadric(quadric3.constraints_4p2l(pts, l1, l2))
        after, _ = quadric3.exists_quadric(quadric3.p3l_constraints(p0, transversals))
        return Verdict("quadric3 reduce42", before,
                       witnesses={"point": encode_point(p0),
                                  "transversals": [encode_line(l) for l in transversals]},
                       extra={"quadric_exists": before, "reduced_quadric_exists": after,
                              "witnesses_agree": before == after})

    v = _timed("quadric3 reduce42", run)
    _emit(v.to_json())
    return _verdict_exit(v)


def cmd_quadric_identity(args) -> int:
    proof = quadric3.p3l_factorization_identity(args.term_ceiling)
    _emit(_identity_doc("quadric3 identity-factorization", proof, args.dump))
    return EXIT_TRUE if proof.proved else EXIT_FALSE


# -- rsb ------------------------------------------------------------------------

def cmd_rsb_check(args) -> int:
    doc = jsonio.load(args.input)
    lines = jsonio.lines_field(doc, "lines", 5, 4)
    v = rsb.rsb_check(lines)
    _emit(v.to_json())
    return _verdict_exit(v)


def cmd_rsb_sample(args) -> int:
    lines = rsb.random_lines(args.seed) if args.random else rsb.rsb_sample_on_quadric(args.seed)
    _emit({"lines": [encode_line(l) for l in lines]})
    return EXIT_TRUE


def cmd_rsb_identity(args) -> int:
    proof = rsb.rsb_identity(args.mode, args.trials, args.seed, args.term_ceiling)
    _emit(_identity_doc("rsb identity", proof, args.dump))
    return EXIT_TRUE if proof.proved else EXIT_FALSE


# -- wiring ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pascaltype",
                                     description="Exact determinantal conditions of Pascal type.")
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, fn, help_):
        p = group.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    def with_input(p):
        p.add_argument("--input", required=True, help="instance JSON file ('-' for stdin)")
        return p

    def with_identity(p):
        p.add_argument("--term-ceiling", type=int, default=DEFAULT_TERM_CEILING)
        p.add_argument("--dump", help="write the expanded polynomial in the text term format")
        return p

    g = groups.add_parser("pascal", help="six points on a conic").add_subparsers(dest="action", required=True)
    with_input(sub(g, "check", cmd_pascal_check, "conic determinant F and collinearity determinant G"))
    with_identity(sub(g, "identity", cmd_pascal_identity, "prove F = G in 18 variables"))

    g = groups.add_parser("rnc", help="rational normal curves").add_subparsers(dest="action", required=True)
    p = with_input(sub(g, "check", cmd_rnc_check, "membership of d+4 points"))
    p.add_argument("--d", type=int)
    p = sub(g, "sample", cmd_rnc_sample, "seeded points on a rational normal curve")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = with_input(sub(g, "jacobian", cmd_rnc_jacobian, "Jacobian rank of the equations"))
    p.add_argument("--d", type=int)

    g = groups.add_parser("quadric3", help="quadric surfaces in P^3").add_subparsers(dest="action", required=True)
    with_input(sub(g, "exists", cmd_quadric_exists, "quadric through points, lines, sampled curves"))
    with_input(sub(g, "p3l", cmd_quadric_p3l, "one point and three lines"))
    with_input(sub(g, "reduce42", cmd_quadric_reduce42, "four points and two lines"))
    with_identity(sub(g, "identity-factorization", cmd_quadric_identity, "prove the 6x6 factorisation"))

    g = groups.add_parser("rsb", help="five lines in P^4").add_subparsers(dest="action", required=True)
    with_input(sub(g, "check", cmd_rsb_check, "quadric existence versus RSB type"))
    p = sub(g, "sample", cmd_rsb_sample, "seeded five lines on x0x1 + x2x3 + x4^2 = 0")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", action="store_true", help="random lines instead (generically on no quadric)")
    p = with_identity(sub(g, "identity", cmd_rsb_identity, "prove F = G (symbolic or randomised)"))
    p.add_argument("--mode", choices=["pit", "symbolic"], default="pit")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    return parser


def _error(command: str, kind: str, exc: Exception, code: int) -> int:
    doc = {"command": command, "member": None, "error": kind, "message": str(exc),
           "hypothesis_errors": [str(exc)] if code == EXIT_HYPOTHESIS else []}
    _emit(doc)
    print(f"pascaltype: {kind}: {exc}", file=sys.stderr)
    return code


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_TRUE
    command = f"{args.group} {args.action}"
    try:
        return args.fn(args)
    except DegeneracyError as exc:
        return _error(command, "hypothesis", exc, EXIT_HYPOTHESIS)
    except ResourceError as exc:
        return _error(command, "resource", exc, EXIT_INPUT)
    except (InputError, DimensionError, GenerationError, ValueError, TypeError) as exc:
        return _error(command, "input", exc, EXIT_INPUT)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
