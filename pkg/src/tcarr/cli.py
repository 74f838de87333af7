"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 input
error, 4 budget exhausted.  Error lines start with ``tcarr: <kind>:``.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import bounds, catalog
from .kernels import BACKEND
from .matroid import ArrangementError, LinearOrder
from .osalgebra import OSAlgebra
from .tensor import BudgetExceeded, OverlappingPair
from .verify import check_pi, run_reference_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = range(5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"tcarr: usage-error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _order(a, text):
    if not text:
        return LinearOrder.identity(a.n)
    try:
        order = LinearOrder.parse(text, a.n)
    except ValueError as exc:
        raise UsageError(f"--order: {exc}") from exc
    return order


def _emit(args, data, lines):
    if getattr(args, "json", False):
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        for line in lines:
            print(line)


def _mono_label(a, mono):
    return "*".join(f"e[{a.labels[i]}]" for i in mono) or "1"


def cmd_info(args, a):
    data = {"schema": 1, "name": a.name, "n": a.n, "r": a.r, "field": a.field.to_json(),
            "kernel": a.kernel_backend}
    full = args.full or a.n <= 40
    if full:
        data["circuits"] = len(a.circuits())
        data["flats_by_rank"] = [len(a.flats_by_rank(k)) for k in range(a.r + 1)]
    lines = [f"name: {a.name}", f"n: {a.n}", f"r: {a.r}", f"field: {a.field!r}", f"kernel: {a.kernel_backend}"]
    if full:
        lines += [f"circuits: {data['circuits']}", f"flats by rank: {data['flats_by_rank']}"]
    else:
        lines.append("circuits/flats: skipped for n > 40 (pass --full)")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_nbc(args, a):
    alg = OSAlgebra(a, _order(a, args.order))
    if not 0 <= args.p <= a.r:
        raise UsageError(f"--p must lie in 0..{a.r}")
    basis = alg.nbc_basis(args.p)
    data = {"schema": 1, "p": args.p, "order": list(alg.order.seq), "basis": [list(m) for m in basis]}
    _emit(args, data, [f"{len(basis)} nbc monomials of degree {args.p}"] + [
        f"  {list(m)}  {_mono_label(a, m)}" for m in basis])
    return EXIT_OK


def cmd_dim(args, a):
    alg = OSAlgebra(a, _order(a, args.order))
    dims = [alg.dimension(p) for p in range(a.r + 1)]
    _emit(args, {"schema": 1, "dimensions": dims, "total": sum(dims)},
          [f"dim A^{p} = {d}" for p, d in enumerate(dims)] + [f"total = {sum(dims)}"])
    return EXIT_OK


def cmd_flats(args, a):
    k = a.r - 1 if args.rank is None else args.rank
    if not 0 <= k <= a.r:
        raise UsageError(f"--rank must lie in 0..{a.r}")
    flats = a.flats_by_rank(k)
    sizes = Counter(len(f) for f in flats)
    data = {"schema": 1, "rank": k, "count": len(flats), "size_profile": dict(sorted(sizes.items())),
            "flats": [list(f.indices) for f in flats] if args.list else None}
    lines = [f"{len(flats)} flats of rank {k}", f"size profile |A_X|: {dict(sorted(sizes.items()))}"]
    if args.list:
        lines += [f"  {list(f.indices)}" for f in flats]
    _emit(args, data, lines)
    return EXIT_OK


def _pair_lines(a, pair):
    lines = [f"  B = {[a.labels[i] for i in sorted(pair.B)]}", f"  C = {[a.labels[i] for i in sorted(pair.C)]}"]
    if pair.order is not None:
        lines.append(f"  order (first {len(pair.union)}): {[a.labels[i] for i in pair.order.seq[:len(pair.union)]]}")
    return lines


def _budget_status(complete):
    if complete:
        return EXIT_OK
    print("tcarr: budget-exhausted: balanced-set search stopped early; lower bound only", file=sys.stderr)
    return EXIT_BUDGET


def cmd_tc(args, a):
    rep = bounds.tc_report(a, args.s, budget=args.budget)
    lines = [f"{a.name}: n={a.n} r={a.r} s={args.s}",
             f"upper bound: {rep.upper}", f"lower bound: {rep.lower}",
             f"exact: {rep.exact}", f"large: {rep.large}"]
    if rep.generic_closed_form is not None:
        lines.append(f"generic closed form: {rep.generic_closed_form}")
    if rep.witness_pair is not None:
        lines.append("witness pair:")
        lines += _pair_lines(a, rep.witness_pair)
    if rep.witness_flat is not None:
        lines.append(f"witness flat X (rank {rep.witness_flat.rank}, |A_X| = {len(rep.witness_flat)}): "
                     f"{[a.labels[i] for i in rep.witness_flat.indices]}")
    lines += [f"note: {n}" for n in rep.notes]
    _emit(args, rep.to_dict(a), lines)
    return _budget_status(not rep.lower_bound_only)


def cmd_pairs(args, a):
    search = bounds.max_basic_C(a, budget=args.budget)
    data = {"schema": 1, "max_C": search.size, "complete": search.complete, "method": search.method,
            "large": search.size == a.r - 1,
            "pair": search.pair.to_dict(a) if search.pair else None}
    lines = [f"max |C| over basic pairs: {search.size}" + ("" if search.complete else " (lower bound only)"),
             f"method: {search.method}", f"large: {data['large']}"]
    if search.pair:
        lines += _pair_lines(a, search.pair)
    _emit(args, data, lines)
    return _budget_status(search.complete)


def cmd_lattice(args, a):
    wb, flat = bounds.lattice_well_balanced(a)
    data = {"schema": 1, "well_balanced": wb,
            "witness_flat": list(flat.indices) if flat else None}
    lines = [f"lattice well-balanced: {wb}"]
    if flat is not None:
        lines.append(f"  X: rank {flat.rank}, |A_X| = {len(flat)}: {[a.labels[i] for i in flat.indices]}")
    if not args.skip_corollary:
        cor, biggest = bounds.corollary_check(a)
        data.update(corollary=cor, max_A_X=biggest)
        lines.append(f"corollary (max |A_X| < n/2): {cor}  (max |A_X| = {biggest}, n/2 = {a.n / 2})")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_verify_pi(args, a):
    search = bounds.max_basic_C(a, budget=args.budget)
    pair = search.pair
    ok, coeff, terms = check_pi(a, pair, args.s, max_factors=args.max_factors)
    basic = bounds.is_basic(a, pair)
    data = {"schema": 1, "s": args.s, "pair": pair.to_dict(a), "basic": basic, "nonzero": terms > 0,
            "mu_coefficient": coeff, "terms": terms, "ok": ok and basic}
    lines = [f"basic pair (|C| = {len(pair.C)}), basic={basic}:"] + _pair_lines(a, pair) + [
        f"pi_Q has {terms} terms; coefficient of e_C (x) e_B (x) ... = {coeff}",
        "OK" if ok and basic else "FAIL"]
    _emit(args, data, lines)
    if not (ok and basic):
        print("tcarr: assertion-failed: pi_Q check failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify_reference(args):
    failures = 0
    rows = []
    for label, ok, detail, secs in run_reference_table(args.section or None):
        failures += not ok
        rows.append({"check": label, "ok": ok, "detail": detail, "seconds": round(secs, 3)})
        if not args.json:
            print(f"{'PASS' if ok else 'FAIL'}  {label}  [{detail}] ({secs:.2f}s)", flush=True)
    if args.json:
        print(json.dumps({"schema": 1, "rows": rows, "failures": failures}, indent=2))
    else:
        print(f"{len(rows) - failures}/{len(rows)} checks passed")
    if failures:
        print(f"tcarr: assertion-failed: {failures} reference checks failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_convert(args, a):
    text = catalog.to_json(a)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="tcarr", description="Topological complexity bounds for hyperplane arrangements.")
    p.add_argument("--version", action="version", version=f"tcarr 0.1.0 (kernel: {BACKEND})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def source(sp, **kw):
        sp.add_argument("source", help="builtin:<family>:<params> or a JSON arrangement file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    source(sub.add_parser("info", help="n, r, circuits, flat counts")).add_argument(
        "--full", action="store_true", help="enumerate circuits and flats even when n > 40")
    sp = source(sub.add_parser("nbc", help="nbc basis in one degree"))
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--order", default="", help="comma-separated permutation, smallest first")
    sp = source(sub.add_parser("dim", help="graded dimensions of the Orlik-Solomon algebra"))
    sp.add_argument("--order", default="")
    sp = source(sub.add_parser("flats", help="flats of one rank (default r-1)"))
    sp.add_argument("--rank", type=int)
    sp.add_argument("--list", action="store_true")
    for name, helptext in (("tc", "TC_s report"), ("pairs", "max |C| over basic pairs")):
        sp = source(sub.add_parser(name, help=helptext))
        if name == "tc":
            sp.add_argument("--s", type=int, default=2)
        sp.add_argument("--budget", type=int, default=10**6, help="max balanced-set tests")
    sp = source(sub.add_parser("lattice", help="well-balanced lattice test and max |A_X|"))
    sp.add_argument("--skip-corollary", action="store_true", help="skip full corank-1 enumeration")
    sp = source(sub.add_parser("verify-pi", help="compute pi_Q for a basic pair"))
    sp.add_argument("--s", type=int, default=2)
    sp.add_argument("--budget", type=int, default=10**6)
    sp.add_argument("--max-factors", type=int, default=24)
    sp = sub.add_parser("verify-paper", help="reproduce the reflection-arrangement table")
    sp.add_argument("--section", action="append", choices=sorted(
        ["circle", "e-series", "e6-profile", "f4", "monomial", "braid", "generic", "pi"]))
    sp.add_argument("--json", action="store_true")
    sp = source(sub.add_parser("convert", help="write canonical JSON"))
    sp.add_argument("-o", "--output")
    return p


COMMANDS = {
    "info": cmd_info, "nbc": cmd_nbc, "dim": cmd_dim, "flats": cmd_flats, "tc": cmd_tc,
    "pairs": cmd_pairs, "lattice": cmd_lattice, "verify-pi": cmd_verify_pi, "convert": cmd_convert,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        if args.command == "verify-paper":
            return cmd_verify_reference(args)
        if getattr(args, "s", 2) < 2:
            raise UsageError("--s must be at least 2")
        a = catalog.resolve(args.source)
        return COMMANDS[args.command](args, a)
    except UsageError as exc:
        print(f"tcarr: usage-error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"tcarr: budget-exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, ArrangementError, catalog.ParseError, catalog.SchemaError, catalog.FieldMismatch,
            catalog.BadParameters, OverlappingPair) as exc:
        print(f"tcarr: input-error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
