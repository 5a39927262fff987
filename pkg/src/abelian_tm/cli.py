"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch or counterexample candidate,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import closed_form
from .abelian import abelian_complexity_oracle
from .automaticity import (
    COUNTEREXAMPLE,
    SCHEMA_VERSION,
    SymbolSequence,
    check_conjecture1,
    check_theorem2,
    kernel_explore,
)
from .boundary import abelian_complexity_reduced, boundary_set, parse_projection
from .morphisms import MorphismError, UniformMorphism, fixed_point_prefix, resolve_sequence, tm_morphism
from .words import WordError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def tm_parameter(m: UniformMorphism) -> int | None:
    """``k`` when ``m`` is the generalized Thue-Morse morphism on ``k`` letters."""
    k = len(m.alphabet)
    if k >= 2 and m == tm_morphism(k):
        return k
    return None


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected <min>..<max>") from None
    if not 1 <= a <= b:
        raise UsageError(f"range {text!r} must satisfy 1 <= min <= max")
    return a, b


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


_SCALAR_ARRAY = re.compile(r"\[\s*(?:-?\d+|null|true|false)(?:\s*,\s*(?:-?\d+|null|true|false))*\s*\]")


def _json(doc) -> str:
    text = json.dumps(doc, indent=2)
    # one line per array of scalars keeps long value lists readable
    text = _SCALAR_ARRAY.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(0)[1:-1].split(",")) + "]", text)
    return text + "\n"


def cmd_gen(args) -> int:
    m = resolve_sequence(args.seq)
    if args.length < 1:
        raise UsageError("--length must be >= 1")
    sys.stdout.write(fixed_point_prefix(m, args.length) + "\n")
    return EXIT_OK


def cmd_abelian(args) -> int:
    m = resolve_sequence(args.seq)
    n_min, n_max = parse_range(args.n)
    k = tm_parameter(m)
    if args.method in ("closed", "all") and k is None:
        raise UsageError(f"method {args.method!r} needs a tm:<k> sequence (closed form is Thue-Morse only)")
    if args.method == "closed" and n_min < k:
        raise UsageError(f"closed form needs n >= k = {k}")
    ell = m.length
    ns = list(range(n_min, n_max + 1))

    def reduced(n):
        if n < ell:
            print(f"n={n}: reduction needs n >= {ell}; oracle value used", file=sys.stderr)
            return abelian_complexity_oracle(m, n)
        return abelian_complexity_reduced(m, n)

    if args.method == "all":
        header = ["n", "oracle", "reduced", "closed"]
        cols = {
            "oracle": [abelian_complexity_oracle(m, n) for n in ns],
            "reduced": [abelian_complexity_reduced(m, n) if n >= ell else None for n in ns],
            "closed": [closed_form.tm_abelian_closed(k, n) if n >= k else None for n in ns],
        }
    else:
        header = ["n", "rho_ab"]
        compute = {
            "oracle": lambda n: abelian_complexity_oracle(m, n),
            "reduced": reduced,
            "closed": lambda n: closed_form.tm_abelian_closed(k, n),
        }[args.method]
        cols = {args.method: [compute(n) for n in ns]}
    rows = [[n] + ["" if c[i] is None else c[i] for c in cols.values()] for i, n in enumerate(ns)]
    sys.stdout.write(_csv(rows, header))
    if args.svg:
        from .plotting import line_chart

        line_chart(args.svg, ns, cols, f"abelian complexity of {m}", "rho_ab(n)")
    return EXIT_OK


def verify_cell_row(k: int, n_max: int) -> list[list[int]]:
    """``[k, n, oracle, reduced, closed]`` for ``n = k .. n_max``."""
    m = tm_morphism(k)
    return [
        [k, n, abelian_complexity_oracle(m, n), abelian_complexity_reduced(m, n),
         closed_form.tm_abelian_closed(k, n)]
        for n in range(k, n_max + 1)
    ]


def verify_theorem1(k_min: int, k_max: int, n_max: int | None = None, n_factor: int = 40, jobs: int = 1) -> dict:
    if not 2 <= k_min <= k_max:
        raise UsageError(f"need 2 <= k_min <= k_max, got k_min={k_min}, k_max={k_max}")
    limits = {k: n_max if n_max is not None else n_factor * k for k in range(k_min, k_max + 1)}
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(verify_cell_row, limits.keys(), limits.values()))
    else:
        parts = [verify_cell_row(k, n) for k, n in limits.items()]
    triples = sorted(row for part in parts for row in part)
    mismatches = [
        {"k": k, "n": n, "oracle": o, "reduced": r, "closed": c}
        for k, n, o, r, c in triples
        if not o == r == c
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "check": "theorem1",
        "k_min": k_min,
        "k_max": k_max,
        "n_max": n_max,
        "n_factor": None if n_max is not None else n_factor,
        "cells": len(triples),
        "mismatches": mismatches,
        "triples": triples,
    }


def cmd_verify(args) -> int:
    start = time.perf_counter()
    report = verify_theorem1(args.k_min, args.k_max, args.n_max, args.n_factor, args.jobs)
    sys.stdout.write(_json(report))
    print(f"{report['cells']} cells, {len(report['mismatches'])} mismatches, "
          f"{time.perf_counter() - start:.1f}s", file=sys.stderr)
    return EXIT_MISMATCH if report["mismatches"] else EXIT_OK


def cmd_boundary(args) -> int:
    m = resolve_sequence(args.seq)
    if args.n_max < 2:
        raise UsageError("--n-max must be >= 2 (boundary sets are taken for n >= 2)")
    rows = []
    for n in range(2, args.n_max + 1):
        b = boundary_set(m, n)
        rows.append([n, len(b), " ".join(b.canonical(m.alphabet))])
    sys.stdout.write(_csv(rows, ["n", "size", "set"]))
    if args.svg:
        from .plotting import line_chart

        line_chart(args.svg, [r[0] for r in rows], {"size": [r[1] for r in rows]},
                   f"boundary set sizes of {m}", "#boundary set")
    return EXIT_OK


def read_symbol_file(path: str) -> SymbolSequence:
    with open(path, encoding="utf-8") as fh:
        symbols = [line.strip() for line in fh]
    while symbols and not symbols[-1]:
        symbols.pop()
    if not symbols:
        raise UsageError(f"{path}: no symbols")
    return SymbolSequence(tuple(symbols), path)


def cmd_kernel(args) -> int:
    if args.file:
        seq = read_symbol_file(args.file)
    else:
        m = resolve_sequence(args.seq)
        seq = SymbolSequence(tuple(fixed_point_prefix(m, args.length)), str(m))
    if args.min_overlap < 16:
        raise UsageError("--min-overlap must be >= 16")
    report = kernel_explore(seq, args.k, args.depth, args.min_overlap)
    sys.stdout.write(_json({"schema_version": SCHEMA_VERSION, **report.to_dict()}))
    return EXIT_MISMATCH if report.verdict == COUNTEREXAMPLE else EXIT_OK


def cmd_theorem2(args) -> int:
    m = resolve_sequence(args.seq)
    pi = parse_projection(args.pi)
    report = check_theorem2(m, pi, args.n_max, args.depth, args.min_overlap)
    sys.stdout.write(_json(report))
    bad = not report["agreement"] or any(k["verdict"] == COUNTEREXAMPLE for k in report["kernels"])
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_conjecture1(args) -> int:
    m = resolve_sequence(args.seq)
    report = check_conjecture1(m, args.k, args.n_max, args.depth, args.min_overlap)
    sys.stdout.write(_json(report))
    return EXIT_MISMATCH if report["verdict"] == COUNTEREXAMPLE else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="abelian-tm",
        description="Abelian complexity of fixed points of uniform morphisms.",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)
    seq_help = "tm:<k>, cantor, or morphism text like '0->01,1->10;seed=0'"

    g = sub.add_parser("gen", help="print a prefix of the fixed point")
    g.add_argument("--seq", required=True, help=seq_help)
    g.add_argument("--length", type=int, default=64)
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("abelian", help="abelian complexity table as CSV")
    a.add_argument("--seq", required=True, help=seq_help)
    a.add_argument("--n", required=True, help="length range <min>..<max>")
    a.add_argument("--method", choices=["oracle", "reduced", "closed", "all"], default="oracle")
    a.add_argument("--svg", help="also write a line chart to this SVG file")
    a.set_defaults(func=cmd_abelian)

    v = sub.add_parser("verify", help="compare oracle, reduction and closed form over a (k, n) grid")
    v.add_argument("--k-min", type=int, default=2)
    v.add_argument("--k-max", type=int, default=6)
    v.add_argument("--n-max", type=int, default=None, help="largest n for every k (default: n-factor * k)")
    v.add_argument("--n-factor", type=int, default=40)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("boundary", help="boundary sets as CSV")
    b.add_argument("--seq", required=True, help=seq_help)
    b.add_argument("--n-max", type=int, required=True)
    b.add_argument("--svg", help="also write a chart of set sizes to this SVG file")
    b.set_defaults(func=cmd_boundary)

    k = sub.add_parser("kernel", help="explore the k-kernel of a sequence prefix")
    src = k.add_mutually_exclusive_group(required=True)
    src.add_argument("--seq", help=seq_help)
    src.add_argument("--file", help="one symbol per line")
    k.add_argument("--length", type=int, default=4096, help="prefix length for --seq")
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--depth", type=int, default=6)
    k.add_argument("--min-overlap", type=int, default=64)
    k.set_defaults(func=cmd_kernel)

    t = sub.add_parser("theorem2", help="evidence that the abelian complexity of pi(w) is automatic")
    t.add_argument("--seq", required=True, help=seq_help)
    t.add_argument("--pi", required=True, help="projection text or tm:<k>")
    t.add_argument("--n-max", type=int, default=300)
    t.add_argument("--depth", type=int, default=5)
    t.add_argument("--min-overlap", type=int, default=64)
    t.set_defaults(func=cmd_theorem2)

    c = sub.add_parser("conjecture1", help="kernel evidence for the boundary sequence")
    c.add_argument("--seq", required=True, help=seq_help)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n-max", type=int, default=200)
    c.add_argument("--depth", type=int, default=4)
    c.add_argument("--min-overlap", type=int, default=64)
    c.set_defaults(func=cmd_conjecture1)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, MorphismError, WordError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
