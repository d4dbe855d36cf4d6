"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 an
enumeration hit its ``--cap``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import checks
from .engine import ExtEngine, LeafTrace, expand_trace, table_r_twist, table_self_twist, wall_reduce_sl3
from .errors import CapExceeded
from .golden import TABLE_FILES, GoldenRow, load_table
from .h2 import MAX_TOWER, ext2_self_tower, h2_dim, tower_summands
from .strings import count_c_strings, enumerate_b_strings, enumerate_c_strings, partitions_of_unity
from .weights import as_prime

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
FORMATS = ("text", "csv", "json")


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _prime(text: str) -> int:
    v = _nonneg(text)
    try:
        return as_prime(v)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write_csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows([[str(x) for x in row] for row in rows])
    return buf.getvalue().rstrip("\n")


def _dumps(obj: object) -> str:
    return json.dumps(obj, indent=2)


def _fmt_tuple(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _trace_json(t: LeafTrace) -> dict:
    return {
        "a_string": list(t.a_string),
        "status": t.status.value,
        "leaf": None if t.leaf is None else [str(x) for x in t.leaf],
    }


def _trace_text(t: LeafTrace) -> str:
    leaf = "" if t.leaf is None else f" leaf=Hom(Delta({t.leaf[0]}),L({t.leaf[1]}))"
    return f"a-string {_fmt_tuple(t.a_string)} {t.status.value}{leaf}"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _ext_output(args, q: int, weyl: int, simple: int, degree_label: str) -> str:
    p = args.p
    if args.trace and (p != 2 or weyl != 0):
        raise UsageError("--trace is only available for p = 2 and weyl weight 0")
    if args.trace and q < 1:
        raise UsageError("--trace needs degree at least 1")
    if args.trace and args.format == "csv":
        raise UsageError("--trace output is available in text and json formats only")
    dim = ExtEngine().ext_dim(q, weyl, simple, p)
    traces = list(expand_trace(q, simple, args.cap)) if args.trace else []

    if args.format == "json":
        out = {"p": p, "results": [{"q": q, "weyl": str(weyl), "simple": str(simple), "dim": str(dim)}]}
        if args.trace:
            out["traces"] = [_trace_json(t) for t in traces]
        return _dumps(out)
    if args.format == "csv":
        if degree_label == "m":
            return _write_csv(["m", "weight", "dim"], [[q, simple, dim]])
        return _write_csv(["q", "weyl", "simple", "dim"], [[q, weyl, simple, dim]])
    lines = [f"Ext^{q}(Delta({weyl}),L({simple})) = {dim}    [p={p}]"]
    lines += [_trace_text(t) for t in traces]
    return "\n".join(lines)


def cmd_ext(args) -> str:
    return _ext_output(args, args.q, args.weyl, args.simple, "q")


def cmd_coh(args) -> str:
    return _ext_output(args, args.m, 0, args.simple, "m")


def _rows_output(rows: Sequence[GoldenRow], fmt: str, p: int = 2) -> str:
    if fmt == "csv":
        return _write_csv(["m", "weight", "dim"], [[r.m, r.weight, r.expected] for r in rows])
    if fmt == "json":
        results = [{"q": r.m, "weyl": "0", "simple": str(r.weight), "dim": str(r.expected)} for r in rows]
        return _dumps({"p": p, "results": results})
    return "\n".join(f"H^{r.m}(G,L({r.weight}))={r.expected}" for r in rows)


def cmd_table(args) -> str:
    if args.kind == "self-twist":
        if args.r is not None:
            raise UsageError("-r only applies to r-twist tables")
        m_min = 1 if args.min_m is None else args.min_m
        if m_min < 1 or args.max_m < m_min:
            raise UsageError("need 1 <= --min-m <= --max-m")
        rows = table_self_twist(args.max_m, m_min=m_min)
    else:
        if args.r is None:
            raise UsageError("r-twist tables need -r")
        if args.r % 2 == 0 or args.r < 1:
            raise UsageError("-r must be a positive odd integer")
        m_min = 3 if args.min_m is None else args.min_m
        if m_min < 2 or args.max_m < m_min:
            raise UsageError("need 2 <= --min-m <= --max-m")
        rows = table_r_twist(args.r, m_min, args.max_m)
    return _rows_output(rows, args.format)


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--simple" if n == "simple" else f"-{n}" for n in missing)
        raise UsageError(f"strings {args.kind} needs {flags}")


def cmd_strings(args) -> str:
    fmt, kind = args.format, args.kind
    if kind == "a":
        _need(args, "m", "simple")
        if args.m < 1:
            raise UsageError("-m must be at least 1")
        traces = list(expand_trace(args.m, args.simple, args.cap))
        nontrivial = sum(t.status.value == "nontrivial" for t in traces)
        if fmt == "json":
            return _dumps({"kind": "a", "m": args.m, "simple": str(args.simple),
                           "nontrivial": str(nontrivial), "traces": [_trace_json(t) for t in traces]})
        if fmt == "csv":
            rows = [[" ".join(map(str, t.a_string)), t.status.value,
                     "" if t.leaf is None else t.leaf[0], "" if t.leaf is None else t.leaf[1]] for t in traces]
            return _write_csv(["a_string", "status", "leaf_weyl", "leaf_simple"], rows)
        return "\n".join([_trace_text(t) for t in traces] + [f"non-trivial a-strings: {nontrivial}"])

    if kind == "b":
        _need(args, "m", "n")
        if args.m < 1 or args.n < 1:
            raise UsageError("-m and -n must be at least 1")
        bs = list(enumerate_b_strings(args.m, args.n, args.cap))
        if fmt == "json":
            items = [{"b_string": list(b.entries), "a_string": list(b.a_string)} for b in bs]
            return _dumps({"kind": "b", "m": args.m, "n": args.n, "count": str(len(bs)), "items": items})
        if fmt == "csv":
            rows = [[" ".join(map(str, b.entries)), " ".join(map(str, b.a_string))] for b in bs]
            return _write_csv(["b_string", "a_string"], rows)
        lines = [f"b-string {_fmt_tuple(b.entries)} -> a-string {_fmt_tuple(b.a_string)}" for b in bs]
        return "\n".join(lines + [f"{len(bs)} b-strings"])

    if kind == "c":
        _need(args, "k")
        if args.k < 1:
            raise UsageError("-k must be at least 1")
        count = count_c_strings(args.k)
        items = list(enumerate_c_strings(args.k, args.cap)) if args.list else None
        if fmt == "json":
            out = {"kind": "c", "k": args.k, "count": str(count)}
            if items is not None:
                out["items"] = [list(c) for c in items]
            return _dumps(out)
        if fmt == "csv":
            return _write_csv(["k", "count"], [[args.k, count]])
        lines = [_fmt_tuple(c) for c in items] if items is not None else []
        return "\n".join(lines + [str(count)])

    _need(args, "m")
    if args.m < 1:
        raise UsageError("-m must be at least 1")
    count = partitions_of_unity(args.m)
    if fmt == "json":
        return _dumps({"kind": "partitions", "m": args.m, "count": str(count)})
    if fmt == "csv":
        return _write_csv(["m", "count"], [[args.m, count]])
    return str(count)


def cmd_h2(args) -> str:
    p = args.p
    if p <= 3:
        raise UsageError("the H^2 classification needs p > 3")
    if (args.simple is None) == (args.tower is None):
        raise UsageError("give exactly one of --simple or --tower")
    if args.tower is not None:
        if args.tower > MAX_TOWER:
            raise UsageError(f"--tower is limited to {MAX_TOWER}")
        n = args.tower
        dim = ext2_self_tower(n, p)
        contributing = [(sorted(s), w) for s, w, d in tower_summands(n, p) if d]
        if args.format == "json":
            return _dumps({"p": p, "tower": n, "dim": str(dim),
                           "contributing": [{"twists": s, "weight": str(w)} for s, w in contributing]})
        if args.format == "csv":
            return _write_csv(["n", "p", "dim"], [[n, p, dim]])
        lines = [f"Ext^2(V_{n},V_{n}) = {dim}    [p={p}]"]
        lines += [f"  H^2(L({w})) = 1 from twists {s}" for s, w in contributing]
        return "\n".join(lines)

    dim, witness = h2_dim(args.simple, p)
    if args.format == "json":
        wj = {"nonzero": witness.nonzero, "reason": witness.reason.value, "twist": witness.twist, "e": witness.e}
        return _dumps({"p": p, "results": [{"q": 2, "weyl": "0", "simple": str(args.simple),
                                            "dim": str(dim), "witness": wj}]})
    if args.format == "csv":
        return _write_csv(["m", "weight", "dim"], [[2, args.simple, dim]])
    return f"H^2(G,L({args.simple})) = {dim}    [{witness}]"


def cmd_wall_reduce(args) -> str:
    try:
        dim = wall_reduce_sl3(args.weyl, args.simple, args.q, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    a, c = args.weyl, args.simple
    if args.format == "json":
        return _dumps({"p": args.p, "results": [{"q": args.q, "weyl": f"{a[0]},{a[1]}",
                                                 "simple": f"{c[0]},{c[1]}", "dim": str(dim)}]})
    if args.format == "csv":
        return _write_csv(["q", "weyl", "simple", "dim"], [[args.q, f"{a[0]},{a[1]}", f"{c[0]},{c[1]}", dim]])
    return (f"Ext^{args.q}_SL3(Delta({a[0]},{a[1]}),L({c[0]},{c[1]})) = "
            f"Ext^{args.q}_SL2(Delta({2 * a[1]}),L({2 * c[1]})) = {dim}    [p={args.p}]")


def parse_table_file(path: Path) -> list[GoldenRow]:
    """Read rows written by ``table --format csv`` or ``--format json``."""
    text = path.read_text()
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        return [GoldenRow(int(r["q"]), int(r["simple"]), int(r["dim"])) for r in data["results"]]
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != ["m", "weight", "dim"]:
        raise UsageError(f"{path}: expected CSV header m,weight,dim")
    return [GoldenRow(int(r["m"]), int(r["weight"]), int(r["dim"])) for r in reader]


def _infer_table(rows: Sequence[GoldenRow]) -> str:
    for name in TABLE_FILES:
        golden = {g.m: g.weight for g in load_table(name)}
        if rows and all(golden.get(r.m, r.weight) == r.weight for r in rows) and any(r.m in golden for r in rows):
            return name
    raise UsageError("could not match the file's rows to an embedded table; pass --table")


def cmd_verify(args) -> tuple[str, int]:
    if args.from_file is not None:
        if args.suite not in ("tables", "all"):
            raise UsageError("--from only applies to the tables suite")
        try:
            rows = parse_table_file(args.from_file)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read {args.from_file}: {exc}") from None
        name = args.table or _infer_table(rows)
        results = checks.check_table_rows(rows, load_table(name), name)
    else:
        results = checks.run_suite(args.suite)
    failed = [c for c in results if not c.ok]
    lines = [c.line() for c in results]
    lines.append(f"{args.suite}: {len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        lines.append("mismatches:")
        lines += [f"  {c.name}: expected {c.expected}, actual {c.actual}" for c in failed]
    return "\n".join(lines), EXIT_MISMATCH if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand.
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    shared.add_argument("--cap", type=_nonneg, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="sl2ext",
        description="Ext and cohomology dimensions for SL2 in positive characteristic.",
    )
    parser.add_argument("--format", choices=FORMATS, default="text", help="output format (default text)")
    parser.add_argument("--cap", type=_nonneg, default=10**6, help="enumeration cap (default 10^6)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("ext", parents=[shared], help="dim Ext^q(Delta(weyl), L(simple))")
    p.add_argument("-p", type=_prime, required=True)
    p.add_argument("-q", type=_nonneg, required=True)
    p.add_argument("--weyl", type=_nonneg, required=True)
    p.add_argument("--simple", type=_nonneg, required=True)
    p.add_argument("--trace", action="store_true", help="list every a-string path (p = 2, weyl 0)")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("coh", parents=[shared], help="dim H^m(G, L(simple))")
    p.add_argument("-p", type=_prime, required=True)
    p.add_argument("-m", "-q", dest="m", type=_nonneg, required=True)
    p.add_argument("--simple", type=_nonneg, required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_coh)

    p = sub.add_parser("table", parents=[shared], help="p = 2 cohomology tables")
    p.add_argument("kind", choices=("self-twist", "r-twist"))
    p.add_argument("-r", type=_nonneg)
    p.add_argument("--min-m", type=_nonneg)
    p.add_argument("--max-m", type=_nonneg, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("strings", parents=[shared], help="a-, b-, c-strings and partitions of 1")
    p.add_argument("kind", choices=("a", "b", "c", "partitions"))
    p.add_argument("-m", type=_nonneg)
    p.add_argument("-n", type=_nonneg)
    p.add_argument("-k", type=_nonneg)
    p.add_argument("--simple", type=_nonneg)
    p.add_argument("--list", action="store_true", help="enumerate c-strings as well as counting")
    p.set_defaults(func=cmd_strings)

    p = sub.add_parser("h2", parents=[shared], help="H^2 classification (p > 3)")
    p.add_argument("-p", type=_prime, required=True)
    p.add_argument("--simple", type=_nonneg)
    p.add_argument("--tower", type=_nonneg, help="dim Ext^2(V_n, V_n) for this n")
    p.set_defaults(func=cmd_h2)

    p = sub.add_parser("wall-reduce", parents=[shared], help="SL3 Ext along a beta-string")
    p.add_argument("-p", type=_prime, required=True)
    p.add_argument("-q", type=_nonneg, required=True)
    p.add_argument("--weyl", type=_nonneg, nargs=2, required=True, metavar=("A1", "A2"))
    p.add_argument("--simple", type=_nonneg, nargs=2, required=True, metavar=("C1", "C2"))
    p.set_defaults(func=cmd_wall_reduce)

    p = sub.add_parser("verify", parents=[shared], help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", choices=(*checks.SUITES, "all"))
    p.add_argument("--from", dest="from_file", type=Path, help="re-verify a table emitted as CSV or JSON")
    p.add_argument("--table", choices=tuple(TABLE_FILES))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"{parser.prog} {args.command}: {exc}; raise --cap to continue", file=sys.stderr)
        return EXIT_CAP
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
