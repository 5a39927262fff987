"""Uniform morphisms, their fixed points, and exact factor sets of those fixed points."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .words import Alphabet, Word, WordError, factors, letter_glyph

MAX_K = 255


class MorphismError(ValueError):
    """Invalid morphism text or morphism data."""


@dataclass(frozen=True)
class UniformMorphism:
    """A letter-to-word map with images of a common length, prolongable at ``seed``.

    ``images[i]`` is the image of ``alphabet.letters[i]``.
    """

    alphabet: Alphabet
    images: tuple[Word, ...]
    seed: str
    name: str = field(default="", compare=False)

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.alphabet):
            raise MorphismError("one image per alphabet letter is required")
        lengths = {len(w) for w in images}
        if len(lengths) != 1:
            detail = ", ".join(f"{a}->{w}" for a, w in zip(self.alphabet, images))
            raise MorphismError(f"morphism is not uniform: image lengths differ ({detail})")
        if lengths.pop() < 2:
            raise MorphismError("image length must be at least 2")
        for a, w in zip(self.alphabet, images):
            try:
                self.alphabet.check(w)
            except WordError as exc:
                raise MorphismError(f"image of {a!r}: {exc}") from None
        if self.seed not in self.alphabet:
            raise MorphismError(f"seed {self.seed!r} is not a letter of the morphism")
        if self.image(self.seed)[0] != self.seed:
            raise MorphismError(
                f"seed {self.seed!r} is not prolongable: its image "
                f"{self.image(self.seed)!r} does not start with it"
            )
        table = {ord(a): w for a, w in zip(self.alphabet, images)}
        object.__setattr__(self, "_table", table)

    @property
    def length(self) -> int:
        return len(self.images[0])

    def image(self, a: str) -> Word:
        return self.images[self.alphabet.index(a)]

    def __str__(self) -> str:
        if self.name:
            return self.name
        return format_morphism(self)


def tm_morphism(k: int) -> UniformMorphism:
    """The generalized Thue-Morse morphism ``i -> i (i+1) ... (i+k-1) mod k``."""
    if not 2 <= k <= MAX_K:
        raise MorphismError(f"k must be in [2, {MAX_K}], got {k}")
    alphabet = Alphabet.sigma(k)
    images = tuple("".join(letter_glyph((i + j) % k) for j in range(k)) for i in range(k))
    return UniformMorphism(alphabet, images, alphabet.letters[0], name=f"tm:{k}")


def cantor_morphism(seed: str = "1") -> UniformMorphism:
    """``0 -> 000, 1 -> 101``.

    Seeded at 1 by default: the fixed point at 0 is the constant word 000...
    """
    return UniformMorphism(Alphabet(("0", "1")), ("000", "101"), seed, name="cantor")


_RULE = re.compile(r"^\s*(\S)\s*->\s*(\S+)\s*$")
_SEED = re.compile(r"^\s*seed\s*=\s*(\S)\s*$")


def parse_rules(text: str) -> tuple[list[str], list[str], str | None]:
    """Split ``"a->w,b->v[;seed=a]"`` into rule letters, images and the optional seed."""
    body, _, tail = text.partition(";")
    seed = None
    if tail:
        m = _SEED.match(tail)
        if not m:
            raise MorphismError(f"cannot parse seed clause {tail!r}; expected 'seed=<letter>'")
        seed = m.group(1)
    letters: list[str] = []
    images: list[str] = []
    for rule in body.split(","):
        m = _RULE.match(rule)
        if not m:
            raise MorphismError(f"cannot parse rule {rule!r}; expected '<letter>-><word>'")
        a, w = m.groups()
        if a in letters:
            raise MorphismError(f"duplicate rule for letter {a!r}")
        letters.append(a)
        images.append(w)
    return letters, images, seed


def parse_morphism(text: str) -> UniformMorphism:
    """Parse ``"0->01,1->10"`` with an optional ``";seed=<letter>"`` suffix.

    The alphabet is the rule letters in rule order; the seed defaults to the
    first rule's letter.
    """
    letters, images, seed = parse_rules(text)
    try:
        alphabet = Alphabet(tuple(letters))
    except WordError as exc:
        raise MorphismError(str(exc)) from None
    return UniformMorphism(alphabet, tuple(images), seed if seed is not None else letters[0])


def format_morphism(m: UniformMorphism) -> str:
    rules = ",".join(f"{a}->{w}" for a, w in zip(m.alphabet, m.images))
    return f"{rules};seed={m.seed}"


def resolve_sequence(spec: str) -> UniformMorphism:
    """Resolve ``tm:<k>``, ``cantor`` or inline morphism text."""
    spec = spec.strip()
    if spec == "cantor":
        return cantor_morphism()
    if spec.startswith("tm:"):
        try:
            k = int(spec[3:])
        except ValueError:
            raise MorphismError(f"bad built-in {spec!r}; expected tm:<k>") from None
        return tm_morphism(k)
    return parse_morphism(spec)


def apply(m: UniformMorphism, w: Word) -> Word:
    m.alphabet.check(w)
    return w.translate(m._table)


def fixed_point_prefix(m: UniformMorphism, length: int) -> Word:
    """First ``length`` letters of the fixed point starting at the seed."""
    if length < 1:
        raise MorphismError(f"prefix length must be >= 1, got {length}")
    w = m.seed
    while len(w) < length:
        w = w.translate(m._table)
    return w[:length]


def reachable_letters(m: UniformMorphism) -> frozenset[str]:
    """Letters occurring in the fixed point, i.e. reachable from the seed."""
    seen = {m.seed}
    stack = [m.seed]
    while stack:
        for b in m.image(stack.pop()):
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return frozenset(seen)


def _two_factor_closure(m: UniformMorphism) -> frozenset[Word]:
    found = set()
    for a in reachable_letters(m):
        found |= factors(m.image(a), 2)
    # bounded by q^2 pairs, so the set stabilizes within q^2 rounds
    for _ in range(len(m.alphabet) ** 2 + 1):
        new = {m.image(ab[0])[-1] + m.image(ab[1])[0] for ab in found} - found
        if not new:
            return frozenset(found)
        found |= new
    raise RuntimeError("two-factor closure did not stabilize")  # pragma: no cover


def _closure(m: UniformMorphism, n: int) -> frozenset[Word]:
    # Every length-n factor sits inside the image of a length-n factor that
    # occurs strictly earlier, so the least fixed point seeded with the
    # length-n prefix is the full factor set.
    found = {fixed_point_prefix(m, n)}
    todo = list(found)
    while todo:
        for u in factors(apply(m, todo.pop()), n):
            if u not in found:
                found.add(u)
                todo.append(u)
    return frozenset(found)


@lru_cache(maxsize=None)
def factor_set(m: UniformMorphism, n: int) -> frozenset[Word]:
    """Exactly the set of length-``n`` factors of the fixed point of ``m``."""
    if n < 1:
        raise MorphismError(f"factor length must be >= 1, got {n}")
    if n == 1:
        return reachable_letters(m)
    if n == 2:
        return _two_factor_closure(m)
    ell = m.length
    parent = -(-n // ell) + 1
    if parent >= n:
        return _closure(m, n)
    out = set()
    for v in factor_set(m, parent):
        w = v.translate(m._table)
        out.update(w[i:i + n] for i in range(len(w) - n + 1))
    return frozenset(out)
