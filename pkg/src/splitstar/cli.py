"""Command-line front end.

    splitstar dcc --n 4 --u 1234 --v 2134 --len 3
    splitstar verify cover.json
    splitstar sweep --n 5
    splitstar tables --check
    splitstar export --n 4 --format dot

Exit codes: 0 success, 1 validation failure, 2 bad arguments or input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from . import base
from .dcc import construct, pancyclicity_sweep
from .errors import SplitStarError
from .permutation import all_permutations, check, format_perm, parse
from .topology import WholeGraph, edges_of
from .verify import validate_dcc

EXPORT_MAX_N = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _perm(text, n, what):
    try:
        return parse(text, n)
    except ValueError as exc:
        raise UsageError(f"--{what}: {exc}") from None


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_dcc(args):
    n = args.n
    if n < 4:
        raise UsageError("--n must be at least 4")
    u, v = _perm(args.u, n, "u"), _perm(args.v, n, "v")
    if u == v:
        raise UsageError("u and v must differ")
    if not 3 <= args.len <= factorial(n) // 2:
        raise UsageError(f"--len must lie in [3, {factorial(n) // 2}]")
    cover = construct(n, u, v, args.len)
    report = validate_dcc(n, cover, u, v, args.len)
    if not report.ok:
        _emit(report.to_dict())
        return 1
    if args.format == "json":
        _emit(cover.to_dict())
    else:
        doc = cover.to_dict()
        print(f"n={n} u={doc['u']} v={doc['v']} ell={args.len}")
        print(f"c1 ({len(cover.c1)}): " + " ".join(doc["c1"]))
        print(f"c2 ({len(cover.c2)}): " + " ".join(doc["c2"]))
        print("trace: " + "; ".join(doc["case_trace"]))
    return 0


def read_cover_document(text):
    """Parse a cover document; raises :class:`UsageError` on malformed input."""
    try:
        doc = json.loads(text)
        n = int(doc["n"])
        ell = int(doc["ell"])
        u = check(parse(doc["u"], n), n)
        v = check(parse(doc["v"], n), n)
        c1 = [parse(t, n) for t in doc["c1"]]
        c2 = [parse(t, n) for t in doc["c2"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"not a cover document: {exc}") from None
    return n, u, v, ell, c1, c2


def cmd_verify(args):
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    n, u, v, ell, c1, c2 = read_cover_document(text)
    report = validate_dcc(n, (c1, c2), u, v, ell)
    _emit(report.to_dict())
    return 0 if report.ok else 1


def cmd_sweep(args):
    if args.n < 4:
        raise UsageError("--n must be at least 4")
    policy = "full" if args.sample is None else ("sample", args.sample, args.seed)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    report = pancyclicity_sweep(args.n, policy, jobs=jobs)
    for line in report.failures:
        print(f"FAIL {line}")
    verdict = "pass" if report.ok else "fail"
    print(f"{report.passed}/{report.instances} {verdict}")
    print(f"wall time {report.seconds:.2f} s", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_tables(args):
    from .data.printed_tables import PRINTED

    if not PRINTED or not any(PRINTED.values()):
        raise UsageError("configuration error: no printed table data")
    doc = base.load_document()
    all_ok = True
    for table in sorted(PRINTED):
        for ell in sorted(PRINTED[table]):
            c1_text, c2_text = PRINTED[table][ell]
            printed = base.check_row(table, ell, base.parse_cycle(c1_text), base.parse_cycle(c2_text))
            row = doc["tables"][str(table)]["rows"][str(ell)]
            c1 = [parse(t, 4) for t in row["c1"]]
            c2 = [parse(t, 4) for t in row["c2"]]
            fixed = base.check_row(table, ell, c1, c2)
            all_ok &= fixed.ok
            if printed.ok:
                status = "pass (as printed)"
            else:
                status = "repaired, " + ("pass" if fixed.ok else "FAIL")
            print(f"table {table} ell={ell:2d}: {status}")
            if args.check:
                for code, detail in printed.violations:
                    print(f"    erratum {code}: {detail}")
    for v, rows in sorted(doc["generated"].items()):
        vv = parse(v, 4)
        for ell, row in sorted(rows.items(), key=lambda kv: int(kv[0])):
            c1 = [parse(t, 4) for t in row["c1"]]
            c2 = [parse(t, 4) for t in row["c2"]]
            ok = validate_dcc(4, (c1, c2), base.U, vv, int(ell)).ok
            all_ok &= ok
            if not ok:
                print(f"generated v={v} ell={ell}: FAIL")
    print(f"generated covers: {sum(len(r) for r in doc['generated'].values())}")
    print("all rows valid" if all_ok else "some rows invalid")
    return 0 if all_ok else 1


def cmd_export(args):
    n = args.n
    if not 2 <= n <= EXPORT_MAX_N:
        raise UsageError(f"--n must lie in [2, {EXPORT_MAX_N}]")
    # tuple order on permutations is rank order
    edges = sorted(edges_of(WholeGraph(n)))
    if args.format == "edgelist":
        for a, b, kind in edges:
            print(f"{format_perm(a)} {format_perm(b)} {kind}")
        return 0
    print(f"graph S{n} {{")
    for x in all_permutations(n):
        print(f'  "{format_perm(x)}";')
    for a, b, kind in edges:
        print(f'  "{format_perm(a)}" -- "{format_perm(b)}" [label="{kind}"];')
    print("}")
    return 0


def build_parser():
    p = _Parser(prog="splitstar", description="Two-disjoint-cycle covers of split-star networks.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dcc", help="construct a cover")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--u", required=True)
    d.add_argument("--v", required=True)
    d.add_argument("--len", type=int, required=True)
    d.add_argument("--format", choices=["json", "text"], default="json")
    d.set_defaults(func=cmd_dcc)

    v = sub.add_parser("verify", help="validate a cover document")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="construct and validate many covers")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--sample", type=int)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--jobs", type=int)
    s.set_defaults(func=cmd_sweep)

    t = sub.add_parser("tables", help="validate the embedded base tables")
    t.add_argument("--check", action="store_true", help="also list every erratum")
    t.set_defaults(func=cmd_tables)

    e = sub.add_parser("export", help="write the graph as DOT or an edge list")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--format", choices=["dot", "edgelist"], default="edgelist")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SplitStarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
