"""
Braid action on integral lamination (Dynnikov) coordinates.

An integral lamination of a punctured disk is encoded by a vector
``(a_1, b_1, ..., a_n, b_n)``. Braids act on the right through
piecewise-linear max/min formulas; ``sigma_i`` only changes the pairs
``i`` and ``i + 1``. Comparing the image of the reference lamination
``(0, 1, ..., 0, 1)`` with the reference itself, the sign of the first
differing coordinate is the Dehornoy sign.

This shares no code with handle reduction and serves as an independent
check on it.
"""

from __future__ import annotations

from .braid import BraidWord
from .dehornoy import DehornoySign, Verdict

__all__ = ["MAX_STRANDS", "reference_lamination", "act", "lamination_coordinates", "lamination_sign"]

MAX_STRANDS = 64


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


def reference_lamination(strands: int) -> tuple[int, ...]:
    return (0, 1) * strands


def act(coords: tuple[int, ...], letter: int) -> tuple[int, ...]:
    """Right action of a single generator ``sigma_|letter|^sign(letter)``."""
    v = list(coords)
    j = 2 * (abs(letter) - 1)
    a1, b1, a2, b2 = v[j : j + 4]
    if letter > 0:
        c = a1 - _neg(b1) - a2 + _pos(b2)
        v[j] = a1 + _pos(b1) + _pos(_pos(b2) - c)
        v[j + 1] = b2 - _pos(c)
        v[j + 2] = a2 + _neg(b2) + _neg(_neg(b1) + c)
        v[j + 3] = b1 + _pos(c)
    else:
        d = a1 + _neg(b1) - a2 - _pos(b2)
        v[j] = a1 - _pos(b1) - _pos(_pos(b2) + d)
        v[j + 1] = b2 + _neg(d)
        v[j + 2] = a2 - _neg(b2) - _neg(_neg(b1) - d)
        v[j + 3] = b1 - _neg(d)
    return tuple(v)


def lamination_coordinates(b: BraidWord, start: tuple[int, ...] | None = None) -> tuple[int, ...]:
    coords = reference_lamination(b.strands) if start is None else tuple(start)
    for x in b.letters:
        coords = act(coords, x)
    return coords


def lamination_sign(b: BraidWord) -> DehornoySign:
    if b.strands > MAX_STRANDS:
        raise ValueError(f"lamination oracle supports at most {MAX_STRANDS} strands")
    ref = reference_lamination(b.strands)
    empty = BraidWord(b.strands, ())
    for got, want in zip(lamination_coordinates(b), ref):
        if got != want:
            return DehornoySign(Verdict.POSITIVE if got > want else Verdict.NEGATIVE, empty)
    return DehornoySign(Verdict.IDENTITY, empty)
