"""Finite words, factors, slices and Parikh vectors.

Words are plain ``str`` values whose characters are the letters.  An
:class:`Alphabet` fixes the coordinate order of Parikh vectors, which are
plain tuples of ints.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

MAX_LETTERS = 255

# Letter glyphs used for the built-in numeric alphabets Sigma_k.
_GLYPHS = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"

Word = str
ParikhVector = tuple


class WordError(ValueError):
    """A word contains a letter outside the alphabet, or an index is out of range."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


def letter_glyph(i: int) -> str:
    """Glyph for the ``i``-th letter of ``Sigma_k``: digits, then a-z, A-Z, then Latin-1+."""
    if i < len(_GLYPHS):
        return _GLYPHS[i]
    return chr(0x100 + i)


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not 1 <= len(letters) <= MAX_LETTERS:
            raise WordError(f"alphabet size must be in [1, {MAX_LETTERS}], got {len(letters)}")
        for a in letters:
            if not isinstance(a, str) or len(a) != 1:
                raise WordError(f"letters must be single symbols, got {a!r}")
        if len(set(letters)) != len(letters):
            raise WordError(f"alphabet letters are not distinct: {''.join(letters)!r}")
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(letters)})

    @classmethod
    def sigma(cls, k: int) -> "Alphabet":
        """The numeric alphabet {0, ..., k-1}."""
        return cls(tuple(letter_glyph(i) for i in range(k)))

    @classmethod
    def from_symbols(cls, symbols: Iterable[str]) -> "Alphabet":
        """Alphabet of the distinct symbols, sorted."""
        return cls(tuple(sorted(set(symbols))))

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, a: object) -> bool:
        return a in self._index

    def __iter__(self):
        return iter(self.letters)

    def index(self, a: str) -> int:
        return self._index[a]

    def check(self, w: Word) -> None:
        """Raise :class:`WordError` naming the first position holding a foreign letter."""
        if set(w) <= self._index.keys():
            return
        for pos, a in enumerate(w):
            if a not in self._index:
                raise WordError(
                    f"letter {a!r} at position {pos} is not in alphabet {''.join(self.letters)!r}",
                    position=pos,
                )


def parikh(w: Word, alphabet: Alphabet) -> ParikhVector:
    alphabet.check(w)
    return tuple(w.count(a) for a in alphabet.letters)


def add_vectors(u: ParikhVector, v: ParikhVector) -> ParikhVector:
    return tuple(x + y for x, y in zip(u, v))


def format_parikh(v: ParikhVector) -> str:
    return ",".join(str(x) for x in v)


def parse_parikh(text: str) -> ParikhVector:
    return tuple(int(x) for x in text.split(","))


def factors(w: Word, n: int) -> frozenset[Word]:
    """All length-``n`` factors of the finite word ``w``."""
    if n < 0:
        raise WordError(f"factor length must be >= 0, got {n}")
    if n > len(w):
        return frozenset()
    return frozenset(w[i:i + n] for i in range(len(w) - n + 1))


def slice_word(w: Word, i: int, j: int) -> Word:
    """``w[i, j]`` with 1-based inclusive bounds, i.e. letters ``w_{i-1} ... w_{j-1}``."""
    if not 1 <= i <= j <= len(w):
        raise WordError(f"slice bounds [{i}, {j}] out of range for a word of length {len(w)}")
    return w[i - 1:j]


def abelian_classes(words: Iterable[Word], alphabet: Alphabet) -> frozenset[ParikhVector]:
    """Distinct Parikh vectors of ``words``.

    Words are grouped by length and counted as rows of a code matrix, which is
    far faster than per-word counting on large factor sets.
    """
    by_length: dict[int, list[Word]] = {}
    for w in words:
        by_length.setdefault(len(w), []).append(w)
    q = len(alphabet)
    codes_of = [ord(a) for a in alphabet.letters]
    lut = np.full(max(codes_of) + 1, q, dtype=np.int32)
    lut[codes_of] = np.arange(q)
    out: set[ParikhVector] = set()
    for n, group in by_length.items():
        if n == 0:
            out.add((0,) * q)
            continue
        codes = np.frombuffer("".join(group).encode("utf-32-le"), dtype=np.uint32)
        cols = lut[np.minimum(codes, len(lut) - 1)]
        bad = (cols == q) | (codes >= len(lut))
        if bad.any():
            alphabet.check(group[int(np.argmax(bad)) // n])
        cols += np.repeat(np.arange(len(group), dtype=np.int32) * q, n)
        counts = np.bincount(cols, minlength=len(group) * q).reshape(len(group), q)
        out.update(map(tuple, counts.tolist()))
    return frozenset(out)
