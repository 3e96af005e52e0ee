"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import json
import sys

from .comod import comodular_index, minimal_comodules, overlap_degree, transversal_number
from .config import LIMITS
from .core import (CapExceeded, Tournament, TournamentError, invert_arcs, invert_vertices,
                   is_transitive, members)
from .fileformat import ParseError, format_tournament, parse_tournament
from .generators import counterexample_tn, fact2_extremal, random_tournament, transitive
from .indices import (BRUTE_FORCE, NotApplicable, brute_delta, brute_delta_prime_witness,
                      delta, delta_prime)
from .modtree import is_indecomposable, nontrivial_module_masks, transitive_components
from .transversal import TransversalError, build_transversal, check_tr_membership
from .verify import THEOREMS, run

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> Tournament:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    return parse_tournament(text)


def _sorted(s) -> list[int] | None:
    return None if s is None else sorted(s)


def analysis_record(t: Tournament) -> dict:
    mods = nontrivial_module_masks(t)
    cap = LIMITS.module_listing_cap
    fam = minimal_comodules(t)
    nu = comodular_index(t)
    tau = transversal_number(t)
    rec = {
        "record": "analysis",
        "order": t.n,
        "is_transitive": is_transitive(t),
        "is_indecomposable": is_indecomposable(t),
        "transitive_components": [list(c.order) for c in transitive_components(t)],
        "module_count": len(mods),
        "modules": [sorted(members(m)) for m in mods[:cap]],
        "modules_truncated": len(mods) > cap,
        "mc": [{"members": sorted(e.members), "witness": e.witness,
                "overlap_degree": overlap_degree(fam, e)} for e in fam.elements],
        "Delta": nu.value,
        "Delta_witness": [sorted(m) for m in nu.witness],
        "tau": tau.value,
        "tau_witness": sorted(tau.witness[0]),
    }
    if t.n >= 5:
        rep = delta_prime(t)
        rec["delta"] = delta(t).value
        rec["delta_prime"] = "impossible" if rep.impossible else rep.delta_prime
        rec["delta_prime_method"] = rep.method
        rec["witness_X"] = _sorted(rep.witness_X)
    else:
        x = brute_delta_prime_witness(t)
        try:
            rec["delta"] = brute_delta(t)
        except NotApplicable:
            rec["delta"] = "impossible"
        rec["delta_prime"] = "impossible" if x is None else len(x)
        rec["delta_prime_method"] = BRUTE_FORCE
        rec["witness_X"] = _sorted(x)
    try:
        r = build_transversal(t)
    except TransversalError:
        r = None
    rec["witness_R"] = _sorted(r)
    if r is not None:
        rep = check_tr_membership(t, r)
        rec["tr"] = {"is_transversal": rep.is_transversal, "is_exact": rep.is_exact,
                     "is_minimum": rep.is_minimum, "strictly_bipartite": rep.strictly_bipartite,
                     "in_tr": rep.in_tr}
    else:
        rec["tr"] = None
    return rec


def _human(rec: dict) -> str:
    lines = [f"order: {rec['order']}"]
    if rec["is_indecomposable"]:
        lines.append("indecomposable")
    else:
        lines.append("decomposable" + (" (transitive)" if rec["is_transitive"] else ""))
    lines.append("transitive components: " + " ".join(
        "[" + ",".join(map(str, c)) + "]" for c in rec["transitive_components"]))
    lines.append(f"nontrivial modules ({rec['module_count']}):")
    for m in rec["modules"]:
        lines.append("  {" + ",".join(map(str, m)) + "}")
    if rec["modules_truncated"]:
        lines.append("  ... (truncated)")
    lines.append("minimal co-modules:")
    for e in rec["mc"]:
        lines.append(f"  {{{','.join(map(str, e['members']))}}} {e['witness']} "
                     f"overlap={e['overlap_degree']}")
    lines.append(f"Delta = {rec['Delta']}  tau = {rec['tau']}  delta = {rec['delta']}  "
                 f"delta' = {rec['delta_prime']} ({rec['delta_prime_method']})")
    if rec["witness_X"] is not None:
        lines.append(f"X = {rec['witness_X']}")
    if rec["witness_R"] is not None:
        lines.append(f"R = {rec['witness_R']}  in tr: {rec['tr']['in_tr']}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    t = _read(args.file)
    rec = analysis_record(t)
    print(json.dumps(rec, sort_keys=True) if args.json else _human(rec))
    return EXIT_OK


def _int_list(raw: str) -> list[int]:
    raw = raw.strip()
    if not raw:
        return []
    try:
        return [int(p) for p in raw.split(",")]
    except ValueError:
        raise InputError(f"bad vertex list {raw!r}") from None


def _arc_list(raw: str) -> list[tuple[int, int]]:
    arcs = []
    for part in filter(None, (p.strip() for p in raw.split(","))):
        try:
            x, y = part.split("-")
            arcs.append((int(x), int(y)))
        except ValueError:
            raise InputError(f"bad arc {part!r}; expected tail-head") from None
    return arcs


def cmd_invert(args) -> int:
    t = _read(args.file)
    if args.arcs is not None:
        t = invert_arcs(t, _arc_list(args.arcs))
    else:
        t = invert_vertices(t, _int_list(args.vertices))
    sys.stdout.write(format_tournament(t))
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        if args.kind == "transitive":
            t = transitive(args.n)
        elif args.kind == "tn":
            t = counterexample_tn(args.n)
        elif args.kind == "fact2":
            t = fact2_extremal(args.n)
        else:
            t = random_tournament(args.n, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(format_tournament(t))
    return EXIT_OK


def cmd_verify(args) -> int:
    limit = 9 if args.allow_9 else 8
    if args.n_max > limit:
        print(f"error: --n-max {args.n_max} exceeds cap {limit}", file=sys.stderr)
        return EXIT_CAP
    names = THEOREMS if args.theorems == "all" else [s.strip() for s in args.theorems.split(",")]
    for name in names:
        if name not in THEOREMS:
            raise InputError(f"unknown sweep {name!r}; choose from {', '.join(THEOREMS)}")
    progress = (lambda name: print(f"# running {name}", file=sys.stderr)) if args.verbose else None
    rows, misses = run(list(names), args.n_max, args.allow_9, progress)
    if args.json:
        for rec in rows + misses:
            print(json.dumps(rec, sort_keys=True))
        print(json.dumps({"record": "summary", "sweeps": list(names), "n_max": args.n_max,
                          "mismatches": len(misses)}, sort_keys=True))
    else:
        if rows:
            print(f"{'n':>3} {'classes':>8} {'Delta(n)':>9} {'delta(n)':>9} {'delta_prime(n)':>15}")
            for r in rows:
                print(f"{r['n']:>3} {r['class_counts']:>8} {r['Delta_n']:>9} {r['delta_n']:>9} "
                      f"{r['delta_prime_n']:>15}")
        for m in misses:
            print("MISMATCH " + json.dumps(m, sort_keys=True))
        print(f"{', '.join(names)}: n <= {args.n_max}, {len(misses)} mismatches")
    return EXIT_OK if not misses else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tourmod", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="modules, co-modules and indices of one tournament")
    a.add_argument("file", help="tournament file, or - for stdin")
    a.add_argument("--json", action="store_true", help="one machine-readable JSON line")
    a.set_defaults(func=cmd_analyze)

    i = sub.add_parser("invert", help="reverse a subtournament or a set of arcs")
    i.add_argument("file")
    g = i.add_mutually_exclusive_group(required=True)
    g.add_argument("--vertices", help="comma-separated vertex list (may be empty)")
    g.add_argument("--arcs", help="comma-separated arcs written tail-head, e.g. 0-1,2-3")
    i.set_defaults(func=cmd_invert)

    gen = sub.add_parser("generate", help="print a generated tournament")
    gen.add_argument("kind", choices=["transitive", "tn", "fact2", "random"])
    gen.add_argument("n", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="exhaustive verification sweeps")
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--theorems", default="all",
                   help="comma-separated subset of " + ",".join(THEOREMS) + ", or all")
    v.add_argument("--allow-9", action="store_true", help="permit order 9 (slow)")
    v.add_argument("--json", action="store_true", help="line-delimited JSON records")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, TournamentError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
