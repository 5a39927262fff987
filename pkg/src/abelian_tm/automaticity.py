"""Finite-prefix evidence for periodicity and automaticity.

Nothing here decides automaticity: kernel rows are compared on finite
prefixes only, and every report carries a verdict that says how far the
evidence goes.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Hashable, Sequence

import numpy as np

from .abelian import prefix_profile
from .boundary import (
    Projection,
    ProjectionError,
    abelian_complexity_reduced,
    boundary_set,
    projected_complexity_oracle,
)
from .morphisms import UniformMorphism, fixed_point_prefix

log = logging.getLogger(__name__)

SCHEMA_VERSION = "1"

STABILIZED = "stabilized"
INCONCLUSIVE = "inconclusive (short prefix)"
COUNTEREXAMPLE = "counterexample candidate"

HEURISTIC_NOTE = (
    "kernel rows are merged when they agree on a finite overlap; "
    "this is evidence, not a proof of automaticity"
)


@dataclass(frozen=True)
class SymbolSequence:
    symbols: tuple[Hashable, ...]
    origin: str = ""
    table: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "table", tuple(self.table))
        if not self.symbols:
            raise ValueError("a symbol sequence must be non-empty")

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def alphabet(self) -> frozenset:
        return frozenset(self.symbols)


@dataclass(frozen=True)
class PeriodicityReport:
    preperiod: int
    period: int
    verified_up_to: int

    def to_dict(self) -> dict:
        return {"preperiod": self.preperiod, "period": self.period, "verified_up_to": self.verified_up_to}


def _codes(symbols: Sequence[Hashable]) -> np.ndarray:
    index: dict = {}
    return np.array([index.setdefault(s, len(index)) for s in symbols], dtype=np.int64)


def ultimate_periodicity(s: SymbolSequence, max_p: int, max_q: int) -> PeriodicityReport | None:
    """Smallest period ``q <= max_q``, then smallest preperiod ``p <= max_p``,
    with ``s[i + q] == s[i]`` for every ``p <= i < len(s) - q``."""
    if max_q < 1 or max_p < 0:
        raise ValueError("need max_q >= 1 and max_p >= 0")
    if len(s) < 2 * max_q + max_p:
        raise ValueError(f"prefix of length {len(s)} is too short for max_p={max_p}, max_q={max_q}")
    a = _codes(s.symbols)
    for q in range(1, max_q + 1):
        bad = np.flatnonzero(a[:-q] != a[q:])
        p = int(bad[-1]) + 1 if bad.size else 0
        if p <= max_p:
            return PeriodicityReport(p, q, len(s))
    return None


def holds_periodicity(s: SymbolSequence, report: PeriodicityReport) -> bool:
    """Re-check a periodicity witness term by term."""
    p, q = report.preperiod, report.period
    return all(s.symbols[i + q] == s.symbols[i] for i in range(p, report.verified_up_to - q))


@dataclass
class KernelClass:
    rep: tuple[int, int]
    row: tuple
    members: list[tuple[int, int]] = field(default_factory=list)
    conclusive: bool = True

    def to_dict(self) -> dict:
        return {
            "representative": list(self.rep),
            "observed_length": len(self.row),
            "members": len(self.members),
            "conclusive": self.conclusive,
            "head": " ".join(str(x) for x in self.row[:24]),
        }


@dataclass
class KernelReport:
    k: int
    max_depth: int
    depth: int
    min_overlap: int
    classes: list[KernelClass]
    stabilized: bool
    truncated: bool
    verdict: str
    length: int
    origin: str = ""

    @property
    def distinct_classes(self) -> int:
        return len(self.classes)

    @property
    def conclusive_classes(self) -> int:
        return sum(1 for c in self.classes if c.conclusive)

    def to_dict(self) -> dict:
        return {
            "origin": self.origin,
            "k": self.k,
            "sequence_length": self.length,
            "max_depth": self.max_depth,
            "depth_explored": self.depth,
            "min_overlap": self.min_overlap,
            "distinct_classes": self.distinct_classes,
            "conclusive_classes": self.conclusive_classes,
            "stabilized": self.stabilized,
            "truncated": self.truncated,
            "verdict": self.verdict,
            "note": HEURISTIC_NOTE,
            "classes": [c.to_dict() for c in self.classes],
        }


def kernel_explore(s: SymbolSequence, k: int, max_depth: int = 6, min_overlap: int = 64) -> KernelReport:
    """Breadth-first search over the rows ``(s[k^e n + c])_n`` of the ``k``-kernel.

    A row joins an existing class when both agree on their common observed
    range and that range has at least ``min_overlap`` terms.  Only rows that
    open a new class are expanded, since equal rows have equal kernels.  Rows
    shorter than ``min_overlap`` can never merge; they are kept as their own
    (inconclusive) classes.
    """
    if k < 2:
        raise ValueError(f"kernel base must be >= 2, got {k}")
    if min_overlap < 16:
        raise ValueError(f"min_overlap must be >= 16, got {min_overlap}")
    if max_depth < 0:
        raise ValueError(f"max_depth must be >= 0, got {max_depth}")
    symbols = s.symbols
    classes: list[KernelClass] = []
    frontier = [0]
    depth = 0
    truncated = False
    for e in range(max_depth + 1):
        if not frontier:
            break
        depth = e
        step = k ** e
        expand = []
        for c in frontier:
            row = symbols[c::step]
            target = None
            if len(row) >= min_overlap:
                for cls in classes:
                    n = min(len(row), len(cls.row))
                    if n >= min_overlap and row[:n] == cls.row[:n]:
                        target = cls
                        break
            else:
                truncated = True
            if target is not None:
                target.members.append((e, c))
                if len(row) > len(target.row):
                    target.rep, target.row = (e, c), row
                continue
            classes.append(KernelClass((e, c), row, [(e, c)], conclusive=len(row) >= min_overlap))
            expand.append(c)
        if e == max_depth:
            # classes still opening at the last level leave the search unfinished
            frontier = expand
        else:
            frontier = [c + j * step for c in expand for j in range(k)]
    stabilized = not frontier
    if truncated:
        verdict = INCONCLUSIVE
        log.info("kernel rows shorter than min_overlap=%d; result inconclusive", min_overlap)
    elif stabilized:
        verdict = STABILIZED
    else:
        verdict = COUNTEREXAMPLE
    return KernelReport(
        k=k,
        max_depth=max_depth,
        depth=depth,
        min_overlap=min_overlap,
        classes=classes,
        stabilized=stabilized,
        truncated=truncated,
        verdict=verdict,
        length=len(s),
        origin=s.origin,
    )


def encode_boundary_sequence(m: UniformMorphism, n_max: int) -> SymbolSequence:
    """Boundary sets for ``n = 2 .. n_max`` interned as integer symbols.

    Symbols are numbered in order of first appearance; ``table[i]`` is the
    canonical (alphabet-ordered, space separated) pair list of symbol ``i``.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    table: dict[str, int] = {}
    symbols = []
    for n in range(2, n_max + 1):
        key = " ".join(boundary_set(m, n).canonical(m.alphabet))
        symbols.append(table.setdefault(key, len(table)))
    return SymbolSequence(tuple(symbols), f"boundary({m})", tuple(table))


def abelian_sequence(source: UniformMorphism, n_max: int, pi: Projection | None = None) -> list[int]:
    """Abelian complexity of ``pi(w)`` for ``n = 1 .. n_max``.

    Lengths below the image length come from the exact projected factor sets;
    the rest from boundary sets.
    """
    if pi is None:
        pi = Projection.from_morphism(source)
    ell = pi.length
    out = []
    for n in range(1, n_max + 1):
        if n < ell:
            out.append(projected_complexity_oracle(source, pi, n))
        else:
            out.append(abelian_complexity_reduced(source, n, pi))
    return out


def _periodicity_of(values: Sequence[int], origin: str) -> PeriodicityReport | None:
    s = SymbolSequence(tuple(values), origin)
    max_q = max(1, min(len(s) // 4, 512))
    return ultimate_periodicity(s, len(s) - 2 * max_q, max_q)


def _kernel_with_growth(
    source: UniformMorphism,
    pi: Projection,
    base: int,
    start: int,
    depth: int,
    min_overlap: int,
    max_terms: int,
    origin: str,
) -> KernelReport:
    # double the number of terms while short rows keep the verdict open
    terms = start
    while True:
        values = abelian_sequence(source, terms, pi)
        report = kernel_explore(SymbolSequence(tuple(values), origin), base, depth, min_overlap)
        if report.verdict != INCONCLUSIVE or terms >= max_terms:
            return report
        terms = min(2 * terms, max_terms)


def check_theorem2(
    w: UniformMorphism,
    pi: Projection,
    n_max: int,
    depth: int = 5,
    min_overlap: int = 64,
    prefix_length: int | None = None,
    max_terms: int = 1 << 17,
) -> dict:
    """Compare boundary-set values with a prefix scan of ``pi(w)`` and gather
    kernel and periodicity evidence for the value sequence."""
    if set(pi.source) != set(w.alphabet):
        raise ProjectionError("projection source alphabet differs from the sequence alphabet")
    ell = pi.length
    if n_max < ell:
        raise ValueError(f"n_max must be >= {ell}")
    ns = list(range(ell, n_max + 1))
    reduced = [abelian_complexity_reduced(w, n, pi) for n in ns]

    if prefix_length is None:
        prefix_length = 64 * n_max
    source_len = -(-2 * prefix_length // ell)
    long_word = pi.apply(fixed_point_prefix(w, source_len))[: 2 * prefix_length]
    short_values = prefix_profile(long_word[:prefix_length], ns, pi.target)
    long_values = prefix_profile(long_word, ns, pi.target)
    mismatches = [
        {"n": n, "reduced": a, "prefix": b} for n, a, b in zip(ns, reduced, long_values) if a != b
    ]
    unstable = [n for n, a, b in zip(ns, short_values, long_values) if a != b]

    origin = f"rho_ab({pi}({w}))"
    kernels = []
    for label, base in (("sequence image length", w.length), ("projection image length", ell)):
        report = _kernel_with_growth(w, pi, base, n_max, depth, min_overlap, max_terms, origin)
        kernels.append({"base_source": label, **report.to_dict()})

    values = abelian_sequence(w, n_max, pi)
    period = _periodicity_of(values, origin)
    agreement = not mismatches
    return {
        "schema_version": SCHEMA_VERSION,
        "check": "theorem2",
        "sequence": str(w),
        "projection": str(pi),
        "n_min": ell,
        "n_max": n_max,
        "values": reduced,
        "prefix_length": 2 * prefix_length,
        "agreement": agreement,
        "prefix_stable": not unstable,
        "unstable_n": unstable,
        "mismatches": mismatches,
        "kernels": kernels,
        "periodicity": period.to_dict() if period else None,
        "notes": [
            "kernel bases are reported for both the sequence image length and the projection image length",
            "uniform recurrence of the source sequence is not checked",
        ],
    }


def check_conjecture1(
    m: UniformMorphism, k: int, n_max: int, depth: int = 4, min_overlap: int = 64
) -> dict:
    """Kernel evidence for the boundary sequence of the fixed point of ``m``."""
    seq = encode_boundary_sequence(m, n_max)
    report = kernel_explore(seq, k, depth, min_overlap)
    period = _periodicity_of(seq.symbols, seq.origin) if len(seq) >= 4 else None
    return {
        "schema_version": SCHEMA_VERSION,
        "check": "conjecture1",
        "sequence": str(m),
        "n_min": 2,
        "n_max": n_max,
        "symbol_table": list(seq.table),
        "symbols": list(seq.symbols),
        "periodicity": period.to_dict() if period else None,
        "kernel": report.to_dict(),
        "verdict": report.verdict,
        "note": "finite-prefix evidence only; the conjecture is not proved or refuted here",
    }
