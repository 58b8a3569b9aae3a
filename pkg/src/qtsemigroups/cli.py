"""Command-line front end.

Exit codes: 0 success, 1 property violated or mismatch, 2 usage or input
error, 3 cost limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import enumeration as en
from .analysis import analyze, is_associative_fast
from .errors import (
    CostLimitExceeded,
    InputError,
    NotANeutralElement,
    NotAssociativeQuasitrivial,
    NotReducible,
    SemigroupError,
)
from .formats import SEPARATOR, format_table, parse_table
from .orderings import parse_element_order
from .reduction import all_binary_reductions, reduction_from_neutral, ternary_reduction
from .tables import OperationTable, contour_components, is_associative_naive, is_quasitrivial

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_COST = 0, 1, 2, 3

# brute-force "auto" filters the whole space below this size, else prunes
AUTO_NAIVE_LIMIT = 1 << 16


class UsageError(Exception):
    pass


def _budget() -> int:
    raw = os.environ.get("COST_BUDGET")
    if raw is None:
        return en.ENUMERATION_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"COST_BUDGET must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("COST_BUDGET must be non-negative")
    return value


def _read_table(path: str) -> OperationTable:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return parse_table(text)


def _kv_lines(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in pairs)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (set, frozenset)):
        return "{" + ", ".join(map(str, sorted(v))) + "}"
    if isinstance(v, (list, tuple)):
        return str(list(v))
    return str(v)


# --- check -----------------------------------------------------------------


def cmd_check(args) -> int:
    T = _read_table(args.file)
    method = "naive" if args.naive else "fast"
    report = analyze(T, method=method, bisymmetry=args.bisymmetry)
    status = EXIT_OK
    disagreement = None
    if args.verify and method == "fast" and report.quasitrivial and T.n >= 2:
        naive = is_associative_naive(T)
        if naive != report.associative:
            disagreement = {"fast": report.associative, "naive": naive}
            status = EXIT_VIOLATION
    if args.json:
        out = report.to_json()
        if args.verify:
            out["verified"] = disagreement is None
        sys.stdout.write(json.dumps(out, separators=(",", ":")) + "\n")
    else:
        d = report.to_json()
        pairs = [(key, _fmt(d[key])) for key in (
            "k", "n", "method", "idempotent", "quasitrivial", "symmetric",
            "associative", "bisymmetric", "annihilator",
        )]  # fmt: skip
        pairs.insert(9, ("neutral_elements", _fmt(frozenset(report.neutral_elements))))
        pairs.append(("preimage_sequence", _fmt(d["preimage_sequence"])))
        pairs.append(("reductions", "-" if d["reductions"] is None else len(d["reductions"])))
        pairs.append(("kimura_ordering", _fmt(d["kimura_ordering"])))
        sc = d["symmetric_class"]
        pairs.append(("symmetric_class", "-" if sc is None else " ".join(str(v) for v in sc.values())))
        sys.stdout.write(_kv_lines(pairs))
    if disagreement is not None:
        print(f"fast/naive disagreement: {disagreement}", file=sys.stderr)
    return status


# --- reduce ----------------------------------------------------------------


def _require_aq(T: OperationTable) -> None:
    if T.n < 2 or not is_quasitrivial(T):
        raise NotAssociativeQuasitrivial("input is not quasitrivial")
    if not is_associative_fast(T):
        raise NotAssociativeQuasitrivial("input is quasitrivial but not associative")


def cmd_reduce(args) -> int:
    T = _read_table(args.file)
    _require_aq(T)
    blocks = []
    if args.ternary:
        H = ternary_reduction(T, args.neutral)
        blocks.append(format_table(H, comment="origin: ternary"))
    elif args.neutral is not None:
        G = reduction_from_neutral(T, args.neutral)
        blocks.append(format_table(G, comment=f"origin: from-neutral({args.neutral})"))
    else:
        reds = all_binary_reductions(T)
        for r in reds.reductions:
            blocks.append(format_table(r.table, comment=f"origin: {r.tag}"))
    sys.stdout.write((SEPARATOR + "\n").join(blocks))
    return EXIT_OK


# --- count -----------------------------------------------------------------


def _brute(k: int, n: int, method: str, budget: int) -> en.CountsReport:
    if method == "auto":
        size = en._guard(k, n, budget)
        method = "naive" if size <= AUTO_NAIVE_LIMIT else "pruned"
    return en.brute_count(k, n, method=method, budget=budget)


def _count_rows(formula, brute):
    fields = en.CountsReport.COUNT_FIELDS
    if brute is not None and formula is not None:
        have = brute.counts()
        return [(f, getattr(formula, f), have[f]) for f in fields if f in have]
    rep = formula or brute
    return [(f, v) for f, v in rep.counts().items()]


def cmd_count(args) -> int:
    k, n = args.k, args.n
    if k < 1 or n < 2:
        raise UsageError("count needs k >= 1 and n >= 2")
    mode = "both" if args.both else "brute" if args.brute else "formula"
    formula = en.formula_counts(k, en.parity_of(n)) if mode in ("formula", "both") else None
    if formula is not None:
        formula.n = n
    brute = _brute(k, n, args.method, _budget()) if mode in ("brute", "both") else None
    rows = _count_rows(formula, brute)
    mismatches = [r[0] for r in rows if len(r) == 3 and r[1] != r[2]]
    if args.json:
        if mode == "both":
            out = {
                "schema": 1,
                "k": k,
                "n": n,
                "formula": formula.to_json(),
                "brute_force": brute.to_json(),
                "mismatches": mismatches,
            }
        else:
            out = (formula or brute).to_json()
        sys.stdout.write(json.dumps(out, separators=(",", ":")) + "\n")
    elif args.csv:
        header = ["sequence", "formula", "brute_force"] if mode == "both" else ["sequence", mode]
        lines = [",".join(header)] + [",".join(map(str, r)) for r in rows]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        if mode == "both":
            pairs = [(f, f"{a:>10} {b:>10}" + ("  MISMATCH" if a != b else "")) for f, a, b in rows]
            pairs.insert(0, ("sequence", f"{'formula':>10} {'brute':>10}"))
        else:
            pairs = [(f, str(v)) for f, v in rows]
        sys.stdout.write(f"k={k} n={n} parity={en.parity_of(n)}\n" + _kv_lines(pairs))
    if mismatches:
        print(f"formula/brute-force mismatch: {', '.join(mismatches)}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


# --- enumerate -------------------------------------------------------------


def cmd_enumerate(args) -> int:
    k = args.k
    if k < 1:
        raise UsageError("k must be >= 1")
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be non-negative")
    if args.qt is not None:
        if args.qt < 1:
            raise UsageError("--qt arity must be >= 1")
        stream = en.generate_quasitrivial_tables(k, args.qt, budget=_budget())
    else:
        stream = en.generate_quasitrivial_associative_binary(k)
    out = sys.stdout
    for i, T in enumerate(stream):
        if args.limit is not None and i >= args.limit:
            break
        if i:
            out.write(SEPARATOR + "\n")
        out.write(format_table(T))
    return EXIT_OK


# --- verify-table1 ---------------------------------------------------------


def _parse_fault(spec: str) -> tuple[str, int]:
    col, _, k = spec.partition(":")
    if col not in en.TABLE1_COLUMNS or not k.isdigit():
        raise UsageError(f"bad fault spec {spec!r}; use COLUMN:K")
    return col, int(k)


def cmd_verify_table1(args) -> int:
    golden = en.table1_golden()
    rows = en.table1_rows(range(1, 7))
    if args.inject_fault:
        col, k = _parse_fault(args.inject_fault)
        if not 1 <= k <= 6:
            raise UsageError("fault k must be in 1..6")
        rows[k - 1][col] += 1
    cells = []
    for r in rows:
        for col in en.TABLE1_COLUMNS:
            want = golden[col][r["k"] - 1]
            cells.append({"k": r["k"], "column": col, "oeis": en.OEIS[col],
                          "computed": r[col], "golden": want, "match": r[col] == want})  # fmt: skip
    bad = [c for c in cells if not c["match"]]
    if args.json:
        out = {"schema": 1, "cells": cells, "matched": len(cells) - len(bad), "total": len(cells)}
        sys.stdout.write(json.dumps(out, separators=(",", ":")) + "\n")
    else:
        w = 14
        lines = ["k".rjust(2) + "".join(c.rjust(w) for c in en.TABLE1_COLUMNS)]
        for r in rows:
            line = str(r["k"]).rjust(2)
            for col in en.TABLE1_COLUMNS:
                want = golden[col][r["k"] - 1]
                cell = str(r[col]) if r[col] == want else f"{r[col]}!={want}"
                line += cell.rjust(w)
            lines.append(line)
        lines.append("  " + "".join(en.OEIS[c].rjust(w) for c in en.TABLE1_COLUMNS))
        lines.append(f"{len(cells) - len(bad)}/{len(cells)} cells match")
        sys.stdout.write("\n".join(lines) + "\n")
    for c in bad:
        print(f"mismatch at k={c['k']} column {c['column']}: "
              f"computed {c['computed']}, expected {c['golden']}", file=sys.stderr)  # fmt: skip
    return EXIT_VIOLATION if bad else EXIT_OK


# --- contour ---------------------------------------------------------------


def _label(xs) -> str:
    return ",".join(map(str, xs))


def contour_dot(T: OperationTable) -> str:
    """Graphviz text: every tuple a node, each kernel class a spanning path."""
    part = contour_components(T)
    lines = ["graph contour {"]
    for c in part.classes:
        lines.append(f"  subgraph cluster_{c.value} {{")
        lines.append(f'    label="{c.value}";')
        for xs in c.tuples:
            lines.append(f'    "{_label(xs)}";')
        for a, b in zip(c.tuples, c.tuples[1:]):
            lines.append(f'    "{_label(a)}" -- "{_label(b)}";')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def contour_grid(T: OperationTable, order: Sequence[int] | None = None) -> str:
    if T.n != 2:
        raise UsageError(f"--grid needs a binary table, got n={T.n}")
    k = T.k
    order = list(order) if order is not None else list(range(1, k + 1))
    if sorted(order) != list(range(1, k + 1)):
        raise UsageError(f"ordering {order} does not list the elements 1..{k}")
    w = len(str(k))
    return "".join(" ".join(str(T(x, y)).rjust(w) for y in order) + "\n" for x in order)


def cmd_contour(args) -> int:
    T = _read_table(args.file)
    order = None
    if args.order is not None:
        try:
            order = parse_element_order(args.order)
        except InputError as exc:
            raise UsageError(str(exc)) from None
    if args.grid:
        sys.stdout.write(contour_grid(T, order))
    elif args.dot:
        sys.stdout.write(contour_dot(T))
    else:
        for c in contour_components(T).classes:
            sys.stdout.write(f"{c.value}: {len(c.tuples)} " + " ".join(f"({_label(x)})" for x in c.tuples) + "\n")
    return EXIT_OK


# --- entry point -----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qtsemi", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="analyze one table")
    c.add_argument("file", help="table file, '-' for stdin")
    m = c.add_mutually_exclusive_group()
    m.add_argument("--fast", action="store_true", help="fast associativity test (default)")
    m.add_argument("--naive", action="store_true", help="scan every (2n-1)-tuple")
    c.add_argument("--json", action="store_true")
    c.add_argument("--verify", action="store_true", help="cross-check fast against naive")
    c.add_argument("--bisymmetry", action="store_true", help="also test bisymmetry (cost-guarded)")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("reduce", help="binary or ternary reductions")
    r.add_argument("file")
    m = r.add_mutually_exclusive_group()
    m.add_argument("--all", action="store_true", help="every binary reduction (default)")
    m.add_argument("--ternary", action="store_true")
    r.add_argument("--neutral", type=int, metavar="E", help="use the neutral element E")
    r.set_defaults(func=cmd_reduce)

    n = sub.add_parser("count", help="counting sequences")
    n.add_argument("k", type=int)
    n.add_argument("n", type=int)
    m = n.add_mutually_exclusive_group()
    m.add_argument("--formula", action="store_true", help="closed forms (default)")
    m.add_argument("--brute", action="store_true", help="exhaustive search")
    m.add_argument("--both", action="store_true", help="compare; exit 1 on mismatch")
    n.add_argument("--method", choices=("auto",) + en.BRUTE_METHODS, default="auto")
    f = n.add_mutually_exclusive_group()
    f.add_argument("--json", action="store_true")
    f.add_argument("--csv", action="store_true")
    n.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="stream tables")
    e.add_argument("k", type=int)
    m = e.add_mutually_exclusive_group(required=True)
    m.add_argument("--binary-assoc-qt", action="store_true",
                   help="associative quasitrivial binary tables")  # fmt: skip
    m.add_argument("--qt", type=int, metavar="N", help="all quasitrivial N-ary tables")
    e.add_argument("--limit", type=int, metavar="M")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify-table1", help="recompute the k=1..6 table of counts")
    v.add_argument("--json", action="store_true")
    v.add_argument("--inject-fault", metavar="COL:K", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify_table1)

    t = sub.add_parser("contour", help="kernel classes as text, DOT or a grid")
    t.add_argument("file")
    m = t.add_mutually_exclusive_group()
    m.add_argument("--dot", action="store_true")
    m.add_argument("--grid", action="store_true")
    t.add_argument("--order", metavar="ORDERING", help="row/column order for --grid, e.g. '2 < 1 ~ 3'")
    t.set_defaults(func=cmd_contour)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CostLimitExceeded as exc:
        print(f"cost limit: {exc}", file=sys.stderr)
        return EXIT_COST
    except (UsageError, InputError, NotANeutralElement) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotAssociativeQuasitrivial, NotReducible) as exc:
        print(f"not associative and quasitrivial: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    raise SystemExit(main())
