"""
Left normal form ``Delta^p s_1 ... s_l`` and positive decompositions.

Simple factors (positive permutation braids) are stored as permutations in
0-based one-line notation. A reduced word ``s_a1 ... s_ak`` corresponds to
the composite ``s_a1 o ... o s_ak``, so right multiplication by ``sigma_i``
swaps one-line positions ``i-1, i`` and left multiplication swaps the values
``i-1, i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord

__all__ = ["NormalForm", "left_normal_form", "positive_decompose", "delta_word"]

Perm = tuple[int, ...]


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _right_descents(p: Perm) -> set[int]:
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def _left_descents(p: Perm) -> set[int]:
    pos = [0] * len(p)
    for j, v in enumerate(p):
        pos[v] = j
    return {i for i in range(1, len(p)) if pos[i - 1] > pos[i]}


def _times_generator(p: Perm, i: int) -> Perm:
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _generator_times(i: int, p: Perm) -> Perm:
    return tuple(i if v == i - 1 else i - 1 if v == i else v for v in p)


def _tau(p: Perm) -> Perm:
    """Conjugation by Delta, which sends sigma_i to sigma_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


def _word(p: Perm) -> tuple[int, ...]:
    """A reduced positive word for the permutation braid ``p``."""
    letters = []
    while True:
        descents = _right_descents(p)
        if not descents:
            break
        i = min(descents)
        letters.append(i)
        p = _times_generator(p, i)
    return tuple(reversed(letters))


def delta_word(n: int) -> tuple[int, ...]:
    """Positive word for the half twist on ``n`` strands."""
    return _word(_delta(n))


@dataclass(frozen=True)
class NormalForm:
    strands: int
    delta_power: int
    factors: tuple[tuple[int, ...], ...]  # positive words of the simple factors

    def word(self) -> BraidWord:
        """The normal form as a (not freely reduced) braid word."""
        d = delta_word(self.strands)
        if self.delta_power >= 0:
            head = d * self.delta_power
        else:
            head = tuple(-x for x in reversed(d)) * (-self.delta_power)
        return BraidWord(self.strands, head + tuple(x for f in self.factors for x in f))


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    while True:
        moves = _left_descents(b) - _right_descents(a)
        if not moves:
            return a, b
        i = min(moves)
        a = _times_generator(a, i)
        b = _generator_times(i, b)


def left_normal_form(b: BraidWord) -> NormalForm:
    n = b.strands
    delta, ident = _delta(n), _identity(n)
    negatives = 0
    factors: list[Perm] = []
    for x in b.letters:
        if x > 0:
            factors.append(_times_generator(ident, x))
        else:
            # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); move Delta^-1 to the front
            factors = [_tau(f) for f in factors]
            factors.append(_times_generator(delta, -x))
            negatives += 1

    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 2, -1, -1):
            a, c = _left_weight(factors[j], factors[j + 1])
            if (a, c) != (factors[j], factors[j + 1]):
                factors[j], factors[j + 1] = a, c
                changed = True

    leading = 0
    while leading < len(factors) and factors[leading] == delta:
        leading += 1
    rest = [f for f in factors[leading:] if f != ident]
    return NormalForm(n, leading - negatives, tuple(_word(f) for f in rest))


def positive_decompose(b: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Positive words ``(beta1, beta2)`` with ``beta1^-1 beta2 == b`` in ``B_n``.

    Read off the left normal form ``Delta^p s_1...s_l``: for ``p < 0`` this is
    ``(Delta^-p, s_1...s_l)``, otherwise ``(1, Delta^p s_1...s_l)``.
    """
    nf = left_normal_form(b)
    d = delta_word(b.strands)
    tail = tuple(x for f in nf.factors for x in f)
    if nf.delta_power < 0:
        return BraidWord(b.strands, d * (-nf.delta_power)), BraidWord(b.strands, tail)
    return BraidWord(b.strands, ()), BraidWord(b.strands, d * nf.delta_power + tail)
