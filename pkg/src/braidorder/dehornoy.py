"""
The Dehornoy order on braid groups.

``b`` is positive when some word representing it is sigma-positive: its
lowest-index generator occurs only with positive exponent. Handle reduction
turns any word into an equivalent one that is empty, sigma-positive or
sigma-negative, which decides the sign and hence the left-invariant order
``a < b  iff  a^-1 b > 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .braid import BraidWord, BraidWordError, inverse, product

__all__ = [
    "Verdict",
    "Relation",
    "DehornoySign",
    "HandleReductionLimitError",
    "DEFAULT_STEP_CAP",
    "sigma_positive_index",
    "sigma_negative_index",
    "find_handle",
    "handle_reduce",
    "dehornoy_sign",
    "dehornoy_compare",
    "dual_right_compare",
]

DEFAULT_STEP_CAP = 10**6


class Verdict(str, Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    IDENTITY = "Identity"

    def negate(self) -> Verdict:
        if self is Verdict.POSITIVE:
            return Verdict.NEGATIVE
        if self is Verdict.NEGATIVE:
            return Verdict.POSITIVE
        return self


class Relation(str, Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"


@dataclass(frozen=True)
class DehornoySign:
    verdict: Verdict
    witness: BraidWord


class HandleReductionLimitError(RuntimeError):
    """The step cap was hit. Handle reduction always terminates, so this is a bug."""


def sigma_positive_index(w: BraidWord) -> int | None:
    """Index ``i`` such that the word is sigma_i-positive, else ``None``.

    Only the lowest index present can qualify: a sigma_i-positive word has
    no letters of index below ``i``.
    """
    if not w.letters:
        return None
    low = min(abs(x) for x in w.letters)
    if low in w.letters and -low not in w.letters:
        return low
    return None


def sigma_negative_index(w: BraidWord) -> int | None:
    if not w.letters:
        return None
    low = min(abs(x) for x in w.letters)
    if -low in w.letters and low not in w.letters:
        return low
    return None


def find_handle(letters: tuple[int, ...]) -> tuple[int, int] | None:
    """Positions ``(p, q)`` of the handle whose right end comes first.

    A sigma_i-handle is ``sigma_i^e v sigma_i^-e`` with ``v`` using only
    generators of index above ``i``. The handle found first cannot contain
    another handle, so it is always permitted.
    """
    # last[i]: position of the latest index-i letter not followed by a lower index
    last: dict[int, int] = {}
    for q, x in enumerate(letters):
        i = abs(x)
        p = last.get(i)
        if p is not None and letters[p] == -x:
            return p, q
        last[i] = q
        for k in [k for k in last if k > i]:
            del last[k]
    return None


def _reduce_handle(letters: tuple[int, ...], p: int, q: int) -> tuple[int, ...]:
    e = 1 if letters[p] > 0 else -1
    i = abs(letters[p])
    middle: list[int] = []
    for x in letters[p + 1 : q]:
        if abs(x) == i + 1:
            d = 1 if x > 0 else -1
            middle += [-e * (i + 1), d * i, e * (i + 1)]
        else:
            middle.append(x)
    return letters[:p] + tuple(middle) + letters[q + 1 :]


def handle_reduce(w: BraidWord, max_steps: int = DEFAULT_STEP_CAP) -> BraidWord:
    """An equivalent word that is empty, sigma-positive or sigma-negative."""
    letters = w.letters
    for _ in range(max_steps):
        handle = find_handle(letters)
        if handle is None:
            return BraidWord(w.strands, letters)
        letters = _reduce_handle(letters, *handle)
    raise HandleReductionLimitError(f"handle reduction of {w} exceeded {max_steps} steps")


def dehornoy_sign(b: BraidWord, max_steps: int = DEFAULT_STEP_CAP) -> DehornoySign:
    reduced = handle_reduce(b, max_steps)
    if not reduced.letters:
        return DehornoySign(Verdict.IDENTITY, reduced)
    if sigma_positive_index(reduced) is not None:
        return DehornoySign(Verdict.POSITIVE, reduced)
    return DehornoySign(Verdict.NEGATIVE, reduced)


_RELATION = {
    Verdict.POSITIVE: Relation.LESS,
    Verdict.NEGATIVE: Relation.GREATER,
    Verdict.IDENTITY: Relation.EQUAL,
}


def dehornoy_compare(a: BraidWord, b: BraidWord) -> Relation:
    """Left-invariant order: ``a < b`` iff ``a^-1 b`` is positive."""
    if a.strands != b.strands:
        raise BraidWordError(f"strand counts differ: {a.strands} vs {b.strands}")
    return _RELATION[dehornoy_sign(product(inverse(a), b)).verdict]


def dual_right_compare(a: BraidWord, b: BraidWord) -> Relation:
    """The right-invariant order: ``a <* b`` iff ``b^-1 < a^-1``."""
    if a.strands != b.strands:
        raise BraidWordError(f"strand counts differ: {a.strands} vs {b.strands}")
    return dehornoy_compare(inverse(b), inverse(a))
