"""Command line front end.

Subcommands: classes, roots, hlc, chartable, properness, verify.  All numeric
output is exact (decimal integers or p/q); orderings are canonical, so output
is byte-stable for fixed flags.  Exit codes: 0 success, 1 verification
failure (a minimal witness is printed), 2 usage error, 3 enumeration bound
exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import chartables, hlc, limits, rootcount, series, verify
from .combinatorics import Bipartition, bipartitions
from .group import class_data
from .rootcount import TWISTS

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


def _emit_table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
    for r in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)))
    return "\n".join(lines)


def _emit_classfunction(f: rootcount.ClassFunction, fmt: str, **meta) -> str:
    obj = f.to_json_obj(**meta)
    if fmt == "json":
        return json.dumps(obj, indent=2)
    rows = [[cell["class"], cell["value"]] for cell in obj["values"]]
    if fmt == "csv":
        return "\n".join(["class,value"] + [f"{a},{b}" for a, b in rows])
    return _emit_table(rows, ["class", "value"])


def cmd_classes(args) -> int:
    rows = []
    for bp in bipartitions(args.n):
        data = class_data(bp)
        rows.append(
            {
                "class": bp.encode(),
                "size": str(data.class_size),
                "centralizer": str(data.centralizer_order),
                "chi": str(data.chi),
                "chiP": str(data.chi_prime),
            }
        )
    if args.format == "json":
        print(json.dumps({"group": "B", "n": args.n, "classes": rows}, indent=2))
    elif args.format == "csv":
        print("class,size,centralizer,chi,chiP")
        for r in rows:
            print(",".join(r.values()))
    else:
        print(_emit_table([list(r.values()) for r in rows], ["class", "size", "centralizer", "chi", "chiP"]))
    return EXIT_OK


def cmd_roots(args) -> int:
    group, n, k, twist = args.group, args.n, args.k, args.twist
    if group == "S":
        if twist != "1":
            raise SystemExit("twists apply to the signed groups only")
        f = (
            rootcount.brute_force_root_enumerator_S(n, k)
            if args.method == "brute"
            else rootcount.root_enumerator_S(n, k)
        )
    elif group == "B":
        if args.method == "brute":
            f = rootcount.brute_force_root_enumerator(n, k, twist)
        elif args.method == "series":
            f = series.root_enumerator_from_series(n, k, twist)
        else:
            f = rootcount.root_enumerator(n, k, twist)
    else:
        if twist != "1":
            raise SystemExit("subgroup enumerators are untwisted")
        if args.method == "brute":
            f = rootcount.brute_force_subgroup_root_enumerator(n, k, group)
        else:
            f = rootcount.subgroup_root_enumerator(n, k, group)
    print(_emit_classfunction(f, args.format, k=k, twist=twist))
    return EXIT_OK


def cmd_hlc(args) -> int:
    n = args.n
    if args.lam is not None:
        lam = Bipartition.decode(args.lam)
        if lam.n != n:
            raise SystemExit(f"--lambda {args.lam} has size {lam.n}, not {n}")
        if args.method == "brute":
            f = hlc.psi_bruteforce_classfunction(lam)
            provenance = "brute-force"
        else:
            f = series.psi_classfunction_from_series(lam)
            provenance = "series"
        obj = f.to_json_obj(provenance=provenance)
        obj["lambda"] = lam.encode()
        if args.format == "json":
            print(json.dumps(obj, indent=2))
        else:
            print(_emit_classfunction(f, args.format, provenance=provenance))
        return EXIT_OK
    if args.k is None:
        raise SystemExit("hlc needs --lambda or --k")
    f = hlc.spsi_k_sum(n, args.k) if args.aggregate == "signed" else hlc.psi_k_sum(n, args.k)
    print(_emit_classfunction(f, args.format, k=args.k, aggregate=args.aggregate))
    return EXIT_OK


def cmd_chartable(args) -> int:
    table = chartables.sn_table(args.n) if args.group == "S" else chartables.bn_table(args.n)
    if args.format == "json":
        obj = {
            "group": table.group,
            "n": table.n,
            "classes": [table.encode_row_label(c) for c in table.col_labels],
            "rows": [
                {"row": table.encode_row_label(label), "values": list(map(str, row))}
                for label, row in zip(table.row_labels, table.rows)
            ],
        }
        print(json.dumps(obj, indent=2))
    elif args.format == "table":
        header = [""] + [table.encode_row_label(c) for c in table.col_labels]
        rows = [
            [table.encode_row_label(label)] + [str(v) for v in row]
            for label, row in zip(table.row_labels, table.rows)
        ]
        print(_emit_table(rows, header))
    else:
        print(table.to_csv())
    return EXIT_OK


def _parse_kset(text: str) -> list[int]:
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        if ".." in piece:
            lo, hi = piece.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(piece))
    return out


def cmd_properness(args) -> int:
    reports = chartables.properness_sweep(args.group, args.n, _parse_kset(args.k_set))
    if args.format == "json":
        print(json.dumps([r.to_json_obj() for r in reports], indent=2))
        return EXIT_OK
    rows = [
        [str(r.meta.get("k")), r.verdict, "; ".join(f"{w}:{m}" for w, m in r.negative_witnesses)]
        for r in reports
    ]
    if args.format == "csv":
        print("k,verdict,negative_witnesses")
        for row in rows:
            print(",".join([row[0], row[1], f'"{row[2]}"' if row[2] else ""]))
    else:
        print(_emit_table(rows, ["k", "verdict", "negative witnesses"]))
    return EXIT_OK


def cmd_verify(args) -> int:
    failures = verify.run_suite(args.suite, args.n_max)
    if failures:
        print(f"suite {args.suite}: FAIL ({len(failures)} witnesses)")
        print("first witness:", failures[0])
        for line in failures[1:10]:
            print("  ", line)
        return EXIT_VERIFY
    print(f"suite {args.suite}: ok")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlie",
        description="Exact root enumerators, higher Lie characters and character tables "
        "for the classical Weyl groups and the index-2 subgroups of the signed group.",
    )
    parser.add_argument(
        "--bound-override",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="raise an enumeration bound for this run (repeatable)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="conjugacy class data of the rank-n signed group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("roots", help="k-th root enumerator as a class function")
    p.add_argument("--group", choices=("S", "B", "D", "Z2A", "AB", "AD"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--twist", choices=TWISTS, default="1")
    p.add_argument("--method", choices=("class", "brute", "series"), default="class")
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("hlc", help="higher Lie characters (single or aggregated)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", metavar="BIPARTITION", help="e.g. [2,1|1]")
    p.add_argument("--k", type=int)
    p.add_argument("--aggregate", choices=("plain", "signed"), default="plain")
    p.add_argument("--method", choices=("series", "brute"), default="series")
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.set_defaults(fn=cmd_hlc)

    p = sub.add_parser("chartable", help="irreducible character table (CSV by default)")
    p.add_argument("--group", choices=("S", "B"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "table"), default="csv")
    p.set_defaults(fn=cmd_chartable)

    p = sub.add_parser("properness", help="multiplicity reports for root enumerators")
    p.add_argument("--group", choices=("B", "D", "Z2A", "AB", "AD"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-set", default="1..12", help="e.g. 1..12 or 10,70")
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.set_defaults(fn=cmd_properness)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("--suite", required=True, choices=[*verify.SUITES, "all"])
    p.add_argument("--n-max", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = dataclasses.replace(limits.LIMITS)
    try:
        for override in args.bound_override:
            name, _, value = override.partition("=")
            if not value:
                raise SystemExit(f"--bound-override expects NAME=VALUE, got {override!r}")
            limits.override(name, int(value))
        return args.fn(args)
    except limits.BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    finally:  # overrides are per-invocation, not process state
        for f in dataclasses.fields(saved):
            setattr(limits.LIMITS, f.name, getattr(saved, f.name))


if __name__ == "__main__":
    sys.exit(main())
