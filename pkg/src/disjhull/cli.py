"""Command-line frontend.

Commands: gen, hull, verify, mir, check-phi, info.  Instances and facet
lists travel as the JSON formats of disjhull.fileio.  Exit codes:
0 success/verified, 1 verification mismatch, 2 input error,
3 hypothesis failure (condition Phi, face/facet hypotheses, or MIR
preconditions).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import cuts, families, fileio, hullenum
from .cuts import MirPreconditionError
from .families import HypothesisError
from .hullenum import OracleCapExceeded
from .lifting import DisjunctionInstance, full_lifting_system
from .lp import basic_solution
from .polyops import FacetList

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3


def _print_facets(fl: FacetList, generator: str) -> None:
    counts = fl.counts()
    print(f"{len(fl)} facet-describing inequalities ({generator}):")
    print(
        f"  counts: nonvertical={counts['nonvertical']}"
        f" lifting={counts['lifting']} other={counts['other']}"
    )
    for e in fl.entries:
        tag = e.provenance[0] if e.provenance else ""
        print(f"  {e.ineq}   [{tag}]")


def _emit(fl: FacetList, generator: str, out: str | None) -> None:
    _print_facets(fl, generator)
    if out:
        fileio.save_facets(fl, generator, out)
        print(f"wrote {out}")


def _parse_bounds(tokens: list[str]):
    bounds = []
    for tok in tokens:
        lo, up = [], []
        for coord in tok.split(";"):
            parts = coord.split(",")
            if len(parts) != 2:
                raise ValueError(f"bad bound {coord!r} (expected 'lo,up')")
            lo.append(Fraction(parts[0]))
            up.append(Fraction(parts[1]))
        bounds.append((tuple(lo), tuple(up)))
    return bounds


def cmd_gen(args) -> int:
    if args.family == "reflected-simplex":
        inst = families.gen_reflected_simplex(args.d, Fraction(args.a), Fraction(args.b))
    elif args.family == "hyperrect":
        inst = families.gen_hyperrect(_parse_bounds(args.bounds))
    else:  # padded-simplex
        inst = families.gen_padded_reflected_simplex(printed_row=args.printed_row)
    if args.out:
        fileio.save_instance(inst, args.out)
        print(f"wrote {args.out}")
    else:
        import json

        print(json.dumps(fileio.instance_to_dict(inst), indent=1))
    return EXIT_OK


def _closed_form(inst: DisjunctionInstance) -> tuple[FacetList, str]:
    bounds = families.detect_hyperrect(inst)
    if bounds is not None:
        return families.hyperrect_hull(bounds), "closed-form:hyperrect"
    params = families.detect_reflected_simplex(inst)
    if params is not None:
        return families.reflected_simplex_hull(*params), "closed-form:reflected-simplex"
    return families.common_matrix_hull(inst), "closed-form:common-matrix"


def cmd_hull(args) -> int:
    inst = fileio.load_instance(args.instance)
    if args.method == "signature":
        fl = hullenum.enumerate_facets(inst)
        generator = "signature"
    elif args.method == "lifting":
        fl = full_lifting_system(inst)
        generator = "lifting"
    elif args.method == "oracle":
        fl = hullenum.oracle_hull(inst)
        generator = "oracle"
    else:
        fl, generator = _closed_form(inst)
    _emit(fl, generator, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = fileio.load_instance(args.instance)
    sig = hullenum.enumerate_facets(inst)
    lift = full_lifting_system(inst)
    oracle = hullenum.oracle_hull(inst)
    print(f"signature method: {len(sig)} facets {sig.counts()}")
    print(f"lifting system:   {len(lift)} inequalities")
    print(f"oracle hull:      {len(oracle)} facets")
    so = hullenum.compare(sig, oracle)
    if so.equal:
        print("signature == oracle: VERIFIED")
    else:
        print("signature != oracle: MISMATCH")
        for q in so.only_in_a:
            print(f"  only in signature: {q}")
        for q in so.only_in_b:
            print(f"  only in oracle:    {q}")
    ls = hullenum.compare(lift, sig)
    extra = [q for q in ls.only_in_b]
    missing_from_hull = [q for q in ls.only_in_a]
    if extra:
        print(f"facets missed by lifting alone: {len(extra)}")
        for q in extra:
            print(f"  {q}")
    else:
        print("lifting alone gives the complete hull")
    for q in missing_from_hull:
        print(f"  lifting inequality that is not a facet: {q}")
    return EXIT_OK if so.equal else EXIT_MISMATCH


def _parse_combine(spec: str, fl: FacetList):
    qs, ws = [], []
    for part in spec.split(","):
        idx_s, _, w_s = part.partition(":")
        idx = int(idx_s)
        if not 0 <= idx < len(fl.entries):
            raise ValueError(f"index {idx} out of range (0..{len(fl.entries) - 1})")
        qs.append(fl.entries[idx].ineq)
        ws.append(Fraction(w_s) if w_s else Fraction(1))
    return qs, ws


def cmd_mir(args) -> int:
    inst = fileio.load_instance(args.instance)
    if args.reflected_simplex:
        params = families.detect_reflected_simplex(inst)
        if params is None:
            print("error: instance is not a reflected-simplex pair", file=sys.stderr)
            return EXIT_INPUT
        fl = cuts.derive_reflected_simplex_cuts(*params)
        _emit(fl, "mir:reflected-simplex", args.out)
        return EXIT_OK
    if not args.combine:
        print("error: need --combine or --reflected-simplex", file=sys.stderr)
        return EXIT_INPUT
    lift = full_lifting_system(inst)
    print("lifting system (aggregation indices):")
    for i, e in enumerate(lift.entries):
        print(f"  [{i}] {e.ineq}")
    qs, ws = _parse_combine(args.combine, lift)
    base = cuts.aggregate(qs, ws)
    print(f"aggregated base: {base}")
    cut = cuts.mir(base, inst)
    print(f"MIR inequality:  {cut}")
    from .polyops import FacetEntry

    fl = FacetList.build(inst.d, inst.n, [FacetEntry(cut, (f"mir:combine({args.combine})",))])
    if args.out:
        fileio.save_facets(fl, "mir:combine", args.out)
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_check_phi(args) -> int:
    inst = fileio.load_instance(args.instance)
    a = inst.common_matrix
    if a is None:
        print("error: matrices differ across polytopes", file=sys.stderr)
        return EXIT_INPUT
    report = families.check_phi(a, [p.b for p in inst.polytopes])
    if report.holds:
        print(f"condition Phi holds ({len(report.feasibility_table)} basic partitions)")
        return EXIT_OK
    part = report.witness
    print(f"condition Phi FAILS at tau={part.tau}, eta={part.eta}")
    for i, p in enumerate(inst.polytopes):
        x = basic_solution(a, p.b, part)
        feasible = p.contains(x)
        coords = ", ".join(str(c) for c in x)
        print(f"  basic solution for P_{i}: ({coords})  feasible: {feasible}")
    return EXIT_HYPOTHESIS


def cmd_info(args) -> int:
    inst = fileio.load_instance(args.instance)
    print(f"d = {inst.d}, n = {inst.n}, polytopes = {inst.n + 1}")
    print(f"common constraint matrix: {inst.common_matrix is not None}")
    for i, p in enumerate(inst.polytopes):
        irr = inst.irredundant[i]
        verts = len(inst.vreps[i].points)
        print(
            f"  P_{i}: rows={p.m} irredundant={irr.m} vertices={verts}"
            f" full_dimensional={inst.full_dimensional[i]}"
        )
    print(f"lifted extreme points: {len(inst.lifted_points)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="disjhull",
        description="Exact convex hulls of polytope disjunctions in the extended space.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named instance family")
    gsub = gen.add_subparsers(dest="family", required=True)
    g1 = gsub.add_parser("reflected-simplex")
    g1.add_argument("--d", type=int, required=True)
    g1.add_argument("--a", required=True)
    g1.add_argument("--b", required=True)
    g2 = gsub.add_parser("hyperrect")
    g2.add_argument(
        "--bounds",
        nargs="+",
        required=True,
        metavar="LO,UP[;LO,UP...]",
        help="one token per polytope; coordinates separated by ';'",
    )
    g3 = gsub.add_parser("padded-simplex")
    g3.add_argument("--printed-row", action="store_true",
                    help="use the published first row (1,0,1); makes P_0 empty")
    for g in (g1, g2, g3):
        g.add_argument("--out", help="write the instance file here")

    hull = sub.add_parser("hull", help="compute the facet list of an instance")
    hull.add_argument("instance")
    hull.add_argument(
        "--method",
        choices=["signature", "lifting", "closed-form", "oracle"],
        default="signature",
    )
    hull.add_argument("--out")

    ver = sub.add_parser("verify", help="cross-check signature, lifting and oracle hulls")
    ver.add_argument("instance")

    mir = sub.add_parser("mir", help="aggregate liftings and apply MIR rounding")
    mir.add_argument("instance")
    mir.add_argument("--combine", metavar="IDX:W,IDX:W,...")
    mir.add_argument("--reflected-simplex", action="store_true")
    mir.add_argument("--out")

    phi = sub.add_parser("check-phi", help="evaluate condition Phi for a common matrix")
    phi.add_argument("instance")

    info = sub.add_parser("info", help="print instance statistics")
    info.add_argument("instance")

    return ap


_HANDLERS = {
    "gen": cmd_gen,
    "hull": cmd_hull,
    "verify": cmd_verify,
    "mir": cmd_mir,
    "check-phi": cmd_check_phi,
    "info": cmd_info,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (HypothesisError, MirPreconditionError) as exc:
        print(f"hypothesis failure: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
