"""Closed-form abelian complexity of the generalized Thue-Morse words, and the
summation forms it is built from.

The summations and the five-branch formula share no code, so asserting them
equal is a real check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

MAX_CLOSED_K = 2 ** 20


@dataclass(frozen=True)
class TMParameters:
    k: int
    n: int

    def __post_init__(self):
        if not 2 <= self.k <= MAX_CLOSED_K:
            raise ValueError(f"k must be in [2, {MAX_CLOSED_K}], got {self.k}")
        if self.n < self.k:
            raise ValueError(f"closed form needs n >= k, got n={self.n}, k={self.k}")

    @property
    def m(self) -> int:
        return self.n // self.k

    @property
    def r(self) -> int:
        return self.n % self.k


def _quarter(numerator: int) -> int:
    q, rem = divmod(numerator, 4)
    assert rem == 0, f"non-integral branch value {numerator}/4"
    return q


def closed_form_branch(k: int, r: int) -> str:
    """Name of the branch used for ``(k, r)``."""
    if k % 2:
        return "odd,r=0" if r == 0 else "odd,r!=0"
    if r == 0:
        return "even,r=0"
    return "even,r even" if r % 2 == 0 else "even,r odd"


def tm_abelian_closed(k: int, n: int) -> int:
    p = TMParameters(k, n)
    r = p.r
    if k % 2:
        if r == 0:
            return _quarter(k * (k * k - 1)) + 1
        return _quarter(k * (k - 1) ** 2) + k
    if r == 0:
        return _quarter(k ** 3) + 1
    if r % 2 == 0:
        # 1/4 k(k-1)^2 + 5/4 k
        return _quarter(k * (k - 1) ** 2 + 5 * k)
    return _quarter(k * k * (k - 2)) + k


def lemma3_sum(k: int) -> int:
    """``1 + sum_{t=1}^{floor(k/2)} k (k - 2t + 1)``: the value at multiples of ``k``."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    total = 1
    for t in range(1, k // 2 + 1):
        total += k * (k - 2 * t + 1)
    return total


def lemma4_sum(k: int, r: int) -> int:
    """The value at ``n = k m + r`` for ``1 <= r <= k - 1``, as the literal summation."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 1 <= r <= k - 1:
        raise ValueError(f"r must be in [1, {k - 1}], got {r}")
    total = Fraction(k) + Fraction(k * (r - 1) * (k - r - 1), 2)
    for tau in range(1, r // 2 + 1):
        total += k * (r - 2 * tau + 1)
    for t in range(1 + r, (k + r) // 2 + 1):
        total += k * (k + r - 2 * t + 1)
    assert total.denominator == 1, f"non-integral summation for k={k}, r={r}"
    return int(total)


def _is_single_arc(marks: tuple[bool, ...]) -> bool:
    """True when the marked positions form one contiguous arc of the circle."""
    k = len(marks)
    starts = sum(1 for i in range(k) if marks[i] and not marks[i - 1])
    return starts == 1 or all(marks)


def count_circle_arc_vectors(k: int) -> int:
    """Brute-force count of vectors in {0,1,2}^k (positions on a k-circle) whose
    2-entries and 0-entries each form one nonempty arc of the same length."""
    count = 0
    for v in product((0, 1, 2), repeat=k):
        twos = tuple(x == 2 for x in v)
        zeros = tuple(x == 0 for x in v)
        n2 = sum(twos)
        if n2 == 0 or n2 != sum(zeros):
            continue
        if _is_single_arc(twos) and _is_single_arc(zeros):
            count += 1
    return count
