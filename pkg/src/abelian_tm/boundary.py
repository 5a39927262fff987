"""Boundary words, boundary sets, and abelian complexity computed from boundary sets.

Write ``n = l*m + r`` with ``0 <= r < l`` where ``l`` is the image length of a
projection ``pi``.  Every length-``n`` factor of ``pi(w)`` is, up to abelian
equivalence, ``(m-1)`` full images plus a short remainder, and the remainders
are windows of ``pi(ab)`` for boundary words ``ab`` of factors of ``w``.  So
the abelian complexity of ``pi(w)`` only depends on the boundary sets of
``w`` at lengths ``m+1`` and ``m+2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .morphisms import (
    MorphismError,
    UniformMorphism,
    factor_set,
    parse_rules,
    reachable_letters,
    resolve_sequence,
)
from .words import (
    Alphabet,
    ParikhVector,
    Word,
    WordError,
    add_vectors,
    factors,
    format_parikh,
    parikh,
    slice_word,
)


class ProjectionError(MorphismError):
    """Projection images are not pairwise abelian-equivalent."""

    def __init__(self, message: str, pair: tuple[tuple[str, ParikhVector], tuple[str, ParikhVector]] | None = None):
        super().__init__(message)
        self.pair = pair


@dataclass(frozen=True)
class Projection:
    """A letter-to-word map whose images all share one Parikh vector."""

    source: Alphabet
    target: Alphabet
    images: tuple[Word, ...]
    name: str = ""

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.source):
            raise ProjectionError("one image per source letter is required")
        vectors = []
        for a, w in zip(self.source, images):
            if not w:
                raise ProjectionError(f"image of {a!r} is empty")
            try:
                vectors.append(parikh(w, self.target))
            except WordError as exc:
                raise ProjectionError(f"image of {a!r}: {exc}") from None
        first = (self.source.letters[0], vectors[0])
        for a, v in zip(self.source.letters[1:], vectors[1:]):
            if v != first[1]:
                raise ProjectionError(
                    f"images are not abelian-equivalent: psi(pi({first[0]})) = ({format_parikh(first[1])}) "
                    f"but psi(pi({a})) = ({format_parikh(v)})",
                    pair=(first, (a, v)),
                )
        object.__setattr__(self, "_table", {ord(a): w for a, w in zip(self.source, images)})

    @classmethod
    def from_morphism(cls, m: UniformMorphism) -> "Projection":
        return cls(m.alphabet, m.alphabet, m.images, name=m.name)

    @property
    def length(self) -> int:
        return len(self.images[0])

    @property
    def image_vector(self) -> ParikhVector:
        """The common Parikh vector of all images."""
        return parikh(self.images[0], self.target)

    def image(self, a: str) -> Word:
        return self.images[self.source.index(a)]

    def apply(self, w: Word) -> Word:
        self.source.check(w)
        return w.translate(self._table)

    def __str__(self) -> str:
        return self.name or ",".join(f"{a}->{w}" for a, w in zip(self.source, self.images))


def parse_projection(text: str) -> Projection:
    """Parse a projection in morphism syntax (``tm:<k>`` also accepted).

    The target alphabet is the source alphabet when every image letter is a
    source letter, else the sorted set of image letters.
    """
    text = text.strip()
    if text.startswith("tm:") or text == "cantor":
        return Projection.from_morphism(resolve_sequence(text))
    letters, images, seed = parse_rules(text)
    if seed is not None:
        raise ProjectionError("a projection takes no seed clause")
    try:
        source = Alphabet(tuple(letters))
    except WordError as exc:
        raise ProjectionError(str(exc)) from None
    used = set("".join(images))
    target = source if used <= set(letters) else Alphabet.from_symbols(used)
    return Projection(source, target, tuple(images), name=text)


def boundary_word(u: Word) -> Word:
    return u if len(u) <= 1 else u[0] + u[-1]


@dataclass(frozen=True)
class BoundarySet:
    pairs: frozenset[Word]
    n: int

    def canonical(self, alphabet: Alphabet) -> tuple[Word, ...]:
        """Pairs sorted by (first, second) letter in alphabet order."""
        return tuple(sorted(self.pairs, key=lambda ab: tuple(alphabet.index(a) for a in ab)))

    def __len__(self) -> int:
        return len(self.pairs)


def boundary_set_from_factors(m: UniformMorphism, n: int) -> BoundarySet:
    """Boundary set read straight off the factor set (the definition)."""
    if n < 2:
        raise ValueError(f"boundary sets are taken for n >= 2, got {n}")
    return BoundarySet(frozenset(boundary_word(u) for u in factor_set(m, n)), n)


@lru_cache(maxsize=None)
def letter_pairs_at_distance(m: UniformMorphism, d: int) -> frozenset[Word]:
    """All ``w_p w_{p+d}`` over positions ``p`` of the fixed point ``w``.

    Uses ``w = sigma(w)``: positions ``l*q + j`` and ``l*q + j + d`` fall in
    the images of ``w_q`` and ``w_{q + (j+d)//l}``.
    """
    if d == 0:
        return frozenset(a + a for a in reachable_letters(m))
    ell = m.length
    if d // ell + 1 >= d:
        # the recursion would refer to d itself; small enough to enumerate
        return frozenset(u[0] + u[-1] for u in factor_set(m, d + 1))
    images = dict(zip(m.alphabet.letters, m.images))
    out = set()
    for j in range(ell):
        e, j2 = divmod(j + d, ell)
        for ab in letter_pairs_at_distance(m, e):
            out.add(images[ab[0]][j] + images[ab[1]][j2])
    return frozenset(out)


def boundary_set(m: UniformMorphism, n: int) -> BoundarySet:
    """Exact boundary set of the length-``n`` factors of the fixed point of ``m``."""
    if n < 2:
        raise ValueError(f"boundary sets are taken for n >= 2, got {n}")
    return BoundarySet(letter_pairs_at_distance(m, n - 1), n)


def s_set(pi: Projection, boundary: BoundarySet, r: int) -> frozenset[Word]:
    """Union over ``ab`` in ``boundary`` of the length-``(r + l)`` factors of ``pi(ab)``."""
    if not 0 <= r < pi.length:
        raise ValueError(f"residue must be in [0, {pi.length}), got {r}")
    return _aligned_windows(pi, boundary.pairs, r)


def g_set(pi: Projection, boundary: BoundarySet, r: int) -> frozenset[Word]:
    """Length-``r`` windows of ``pi(ab)`` straddling the middle, with at least one letter on each side."""
    if not 2 <= r < pi.length:
        raise ValueError(f"the straddling set needs 2 <= r < {pi.length}, got r={r}")
    return _straddling_windows(pi, boundary.pairs, r)


def _aligned_windows(pi: Projection, pairs, r: int) -> frozenset[Word]:
    out = set()
    for ab in pairs:
        out |= factors(pi.image(ab[0]) + pi.image(ab[1]), r + pi.length)
    return frozenset(out)


def _straddling_windows(pi: Projection, pairs, r: int) -> frozenset[Word]:
    ell = pi.length
    out = set()
    for ab in pairs:
        middle = slice_word(pi.image(ab[0]) + pi.image(ab[1]), ell - r + 2, ell + r - 1)
        out |= factors(middle, r)
    return frozenset(out)


@dataclass(frozen=True)
class ReducedParts:
    """Parikh classes from the aligned windows and from the straddling windows."""

    aligned: frozenset[ParikhVector]
    straddling: frozenset[ParikhVector]

    @property
    def count(self) -> int:
        return len(self.aligned | self.straddling)


def reduced_parts(source: UniformMorphism, n: int, pi: Projection | None = None) -> ReducedParts:
    if pi is None:
        pi = Projection.from_morphism(source)
    elif set(pi.source) != set(source.alphabet):
        raise ProjectionError("projection source alphabet differs from the sequence alphabet")
    ell = pi.length
    if n < ell:
        raise ValueError(f"reduction needs n >= {ell}, got {n}; use the oracle")
    m, r = divmod(n, ell)
    near = letter_pairs_at_distance(source, m)
    far = letter_pairs_at_distance(source, m + 1) if r >= 2 else None
    return _parts(pi, near, far, r)


@lru_cache(maxsize=None)
def _parts(pi: Projection, near: frozenset, far: frozenset | None, r: int) -> ReducedParts:
    target = pi.target
    aligned = frozenset(parikh(u, target) for u in _aligned_windows(pi, near, r))
    straddling: frozenset = frozenset()
    if r >= 2:
        shift = pi.image_vector
        straddling = frozenset(
            add_vectors(shift, parikh(v, target)) for v in _straddling_windows(pi, far, r)
        )
    return ReducedParts(aligned, straddling)


def abelian_complexity_reduced(source: UniformMorphism, n: int, pi: Projection | None = None) -> int:
    """Abelian complexity of ``pi(w)`` at length ``n`` from boundary sets of ``w`` alone.

    ``w`` is the fixed point of ``source``; ``pi`` defaults to ``source``
    itself, giving the abelian complexity of ``w``.
    """
    return reduced_parts(source, n, pi).count


def projected_factor_set(source: UniformMorphism, pi: Projection, n: int) -> frozenset[Word]:
    """Exact length-``n`` factors of ``pi(w)``.

    A window of length ``n`` in ``pi(w)`` covers at most ``ceil(n/l) + 1`` images.
    """
    parent = -(-n // pi.length) + 1
    out = set()
    for v in factor_set(source, parent):
        out |= factors(pi.apply(v), n)
    return frozenset(out)


def projected_complexity_oracle(source: UniformMorphism, pi: Projection, n: int) -> int:
    return len({parikh(u, pi.target) for u in projected_factor_set(source, pi, n)})
