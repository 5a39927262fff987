"""Abelian complexity by exhaustive enumeration of factors.

This is the ground truth the boundary reduction and the closed form are
checked against.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .morphisms import UniformMorphism, factor_set
from .words import Alphabet, Word, WordError, abelian_classes


def abelian_complexity_oracle(m: UniformMorphism, n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return len(abelian_classes(factor_set(m, n), m.alphabet))


def abelian_complexity_of_prefix(w: Word, n: int, alphabet: Alphabet | None = None) -> int:
    """Number of Parikh vectors among the length-``n`` factors of the finite word ``w``.

    A lower bound for the infinite word ``w`` is a prefix of.
    """
    if not 1 <= n <= len(w):
        raise WordError(f"need 1 <= n <= |w| = {len(w)}, got n={n}")
    return int(prefix_profile(w, [n], alphabet)[0])


def prefix_profile(w: Word, ns, alphabet: Alphabet | None = None) -> list[int]:
    """Abelian complexity of the finite word ``w`` for every length in ``ns``.

    Window Parikh vectors come from differences of cumulative letter counts.
    """
    if alphabet is None:
        alphabet = Alphabet.from_symbols(w)
    alphabet.check(w)
    codes = np.frombuffer(w.encode("utf-32-le"), dtype=np.uint32)
    letters = np.array([ord(a) for a in alphabet.letters], dtype=np.uint32)
    onehot = (codes[:, None] == letters[None, :]).astype(np.int64)
    cum = np.vstack([np.zeros((1, len(letters)), dtype=np.int64), np.cumsum(onehot, axis=0)])
    out = []
    for n in ns:
        if not 1 <= n <= len(w):
            raise WordError(f"need 1 <= n <= |w| = {len(w)}, got n={n}")
        vecs = cum[n:] - cum[:-n]
        out.append(_distinct_rows(vecs, n))
    return out


def _distinct_rows(vecs: np.ndarray, n: int) -> int:
    # coordinates sum to n, so all but the last one identify the row
    q = vecs.shape[1]
    if q == 1:
        return 1
    if (q - 1) * np.log2(n + 1) < 62:
        weights = (n + 1) ** np.arange(q - 1, dtype=np.int64)
        return len(np.unique(vecs[:, :-1] @ weights))
    return len(np.unique(vecs, axis=0))


@dataclass(frozen=True)
class PrefixEstimate:
    value: int
    stable: bool
    length: int

    @property
    def status(self) -> str:
        return "stable" if self.stable else "lower bound"


def stable_prefix_complexity(
    prefix: Callable[[int], Word], n: int, length: int, alphabet: Alphabet | None = None
) -> PrefixEstimate:
    """Prefix estimate of the abelian complexity, re-checked on a prefix twice as long."""
    short = abelian_complexity_of_prefix(prefix(length), n, alphabet)
    long = abelian_complexity_of_prefix(prefix(2 * length), n, alphabet)
    return PrefixEstimate(long, short == long, 2 * length)
