"""
Braid closures and their Laurent-polynomial invariants.

Conventions
-----------
Strands run downward through the word. At ``sigma_i`` the strand arriving
from position ``i + 1`` passes over, which makes every positive letter a
positive crossing.

* Kauffman bracket: ``<X> = A <oriented smoothing> + A^-1 <other>`` at a
  positive crossing (roles swapped at a negative one), loop value
  ``-A^2 - A^-2``, ``<unknot> = 1``.
* Jones: ``V = (-A)^(-3w) <D>`` with ``t = A^-4``, stored in powers of
  ``t^(1/2) = A^-2``.
* HOMFLY: ``a P(L+) - a^-1 P(L-) = z P(L0)``, ``P(unknot) = 1``. The
  Jones polynomial is recovered by ``a -> t^-1``, ``z -> t^1/2 - t^-1/2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord, BraidWordError, free_reduce, permutation_of
from .laurent import LaurentPoly, divide_exact, substitute

__all__ = [
    "CapExceededError",
    "Crossing",
    "LinkDiagram",
    "InvariantValue",
    "BRACKET_CAP",
    "HOMFLY_CAP",
    "braid_closure",
    "writhe",
    "kauffman_bracket",
    "bracket_state_sum",
    "jones",
    "jones_from_bracket",
    "homfly",
    "jones_specialization",
    "homfly_to_jones",
    "stabilize",
    "mirror",
    "braid_to_laurent",
    "A_RING",
    "JONES_RING",
    "HOMFLY_RING",
]

BRACKET_CAP = 24
HOMFLY_CAP = 14

A_RING = (("A",), (1,))
JONES_RING = (("t",), (2,))
HOMFLY_RING = (("a", "z"), (1, 1))


class CapExceededError(RuntimeError):
    """Input exceeds the configured size cap of an invariant kernel."""


def _a(power: int) -> LaurentPoly:
    return LaurentPoly.monomial((power,), A_RING[0], denominators=A_RING[1])


def _q(power: int) -> LaurentPoly:
    return LaurentPoly.monomial((power,), JONES_RING[0], denominators=JONES_RING[1])


def _az(a: int, z: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial((a, z), HOMFLY_RING[0], coeff, HOMFLY_RING[1])


LOOP = _a(2) * -1 - _a(-2)


@dataclass(frozen=True)
class Crossing:
    """Oriented crossing given by its four incident arcs."""

    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int

    def smoothings(self) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
        """Arc pairings of the A-smoothing and the A^-1-smoothing."""
        oriented = ((self.over_in, self.under_out), (self.under_in, self.over_out))
        other = ((self.over_in, self.under_in), (self.over_out, self.under_out))
        return (oriented, other) if self.sign > 0 else (other, oriented)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    component_count: int
    free_loops: int = 0  # components without crossings

    def arcs(self) -> set[int]:
        return {a for c in self.crossings for a in (c.over_in, c.over_out, c.under_in, c.under_out)}

    def traced_components(self) -> int:
        """Count components by following arcs through crossings."""
        succ = {}
        for c in self.crossings:
            succ[c.over_in] = c.over_out
            succ[c.under_in] = c.under_out
        seen: set[int] = set()
        count = 0
        for start in succ:
            if start in seen:
                continue
            count += 1
            arc = start
            while arc not in seen:
                seen.add(arc)
                arc = succ[arc]
        return count + self.free_loops


@dataclass(frozen=True)
class InvariantValue:
    kind: str  # bracket | jones | homfly
    poly: LaurentPoly


def braid_closure(b: BraidWord) -> LinkDiagram:
    """Planar diagram of the trace closure of ``b``."""
    n = b.strands
    arc = list(range(n))
    next_id = n
    raw = []
    for x in b.letters:
        i = abs(x) - 1
        left_in, right_in = arc[i], arc[i + 1]
        left_out, right_out = next_id, next_id + 1
        next_id += 2
        if x > 0:
            raw.append((right_in, left_out, left_in, right_out, 1))
        else:
            raw.append((left_in, right_out, right_in, left_out, -1))
        arc[i], arc[i + 1] = left_out, right_out
    close = {arc[p]: p for p in range(n) if arc[p] != p}
    free_loops = sum(1 for p in range(n) if arc[p] == p)
    crossings = tuple(Crossing(*(close.get(a, a) for a in r[:4]), r[4]) for r in raw)
    return LinkDiagram(crossings, permutation_of(b).cycle_count(), free_loops)


def writhe(d: LinkDiagram) -> int:
    return sum(c.sign for c in d.crossings)


def _check_cap(d: LinkDiagram, cap: int) -> None:
    if len(d.crossings) > cap:
        raise CapExceededError(f"{len(d.crossings)} crossings exceed the bracket cap of {cap}")


def bracket_state_sum(d: LinkDiagram, cap: int = BRACKET_CAP) -> LaurentPoly:
    """Reference evaluation: sum over all ``2^c`` smoothing states."""
    _check_cap(d, cap)
    arcs = sorted(d.arcs())
    total = LaurentPoly.zero(*A_RING)
    for state in itertools.product((0, 1), repeat=len(d.crossings)):
        parent = {a: a for a in arcs}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for c, s in zip(d.crossings, state):
            for x, y in c.smoothings()[s]:
                parent[find(x)] = find(y)
        loops = len({find(a) for a in arcs}) + d.free_loops
        a_power = state.count(0) - state.count(1)
        total = total + _a(a_power) * LOOP ** (loops - 1)
    return total


def kauffman_bracket(d: LinkDiagram, cap: int = BRACKET_CAP) -> LaurentPoly:
    """Bracket by contracting crossings one at a time.

    Partial states are keyed by how the pending arcs (one end already
    smoothed) are joined in pairs; states with equal keys are merged, so the
    work grows with the width of the diagram rather than ``2^c``.
    """
    _check_cap(d, cap)
    if not d.crossings:
        return LOOP ** (d.free_loops - 1)

    states: dict[frozenset, LaurentPoly] = {frozenset(): LaurentPoly.constant(1, *A_RING)}
    for crossing in d.crossings:
        new_states: dict[frozenset, LaurentPoly] = {}
        for key, value in states.items():
            for weight, pairs in zip((1, -1), crossing.smoothings()):
                partner = {}
                for p, q in key:
                    partner[p] = q
                    partner[q] = p
                loops = 0
                for x, y in pairs:
                    if x == y:
                        loops += 1
                        continue
                    if partner.get(x) == y:
                        del partner[x], partner[y]
                        loops += 1
                        continue
                    fx = partner.pop(x) if x in partner else x
                    fy = partner.pop(y) if y in partner else y
                    partner.pop(fx, None)
                    partner.pop(fy, None)
                    partner[fx] = fy
                    partner[fy] = fx
                new_key = frozenset((p, q) for p, q in partner.items() if p < q)
                contribution = value * _a(weight) * LOOP ** loops
                new_states[new_key] = new_states.get(new_key, LaurentPoly.zero(*A_RING)) + contribution
        states = new_states
    (key, value), = states.items()
    assert not key
    return divide_exact(value * LOOP ** d.free_loops, LOOP)


def jones_from_bracket(bracket: LaurentPoly, w: int) -> LaurentPoly:
    """``(-A)^(-3w) <D>`` rewritten in powers of ``t^(1/2) = A^-2``."""
    normalized = bracket * _a(-3 * w) * (-1 if w % 2 else 1)
    terms = {}
    for (e,), c in normalized.items():
        if e % 2:
            raise ValueError("odd power of A in a normalized bracket")
        terms[(-e // 2,)] = c
    return LaurentPoly(*JONES_RING[:1], terms, JONES_RING[1]) if terms else LaurentPoly.zero(*JONES_RING)


def jones(b: BraidWord, cap: int = BRACKET_CAP) -> InvariantValue:
    d = braid_closure(b)
    return InvariantValue("jones", jones_from_bracket(kauffman_bracket(d, cap), writhe(d)))


# -- HOMFLY -------------------------------------------------------------------

_UNLINK = (_az(1, -1) - _az(-1, -1))  # (a - a^-1)/z, the value of a 2-component unlink


def _traversal(n: int, letters: tuple[int, ...]) -> list[int]:
    """Crossings first met from below while walking the closure.

    Components are walked in order of their lowest strand position, each from
    the top of that position. A diagram with no such crossing is descending,
    hence an unlink.
    """
    first_seen: dict[int, bool] = {}
    visited_top: set[int] = set()
    for start in range(n):
        if start in visited_top:
            continue
        pos = start
        while True:
            visited_top.add(pos)
            for k, x in enumerate(letters):
                i = abs(x) - 1
                if pos == i or pos == i + 1:
                    from_right = pos == i + 1
                    over = from_right if x > 0 else not from_right
                    first_seen.setdefault(k, over)
                    pos = i if from_right else i + 1
            if pos == start:
                break
    return [k for k in sorted(first_seen) if not first_seen[k]]


def _cyclic_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    letters = free_reduce(letters)
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        letters = letters[1:-1]
    return letters


@lru_cache(maxsize=None)
def _homfly(n: int, letters: tuple[int, ...]) -> LaurentPoly:
    letters = _cyclic_reduce(letters)
    bad = _traversal(n, letters)
    if not bad:
        components = permutation_of(BraidWord(n, letters)).cycle_count()
        return _UNLINK ** (components - 1)
    k = bad[0]
    x = letters[k]
    switched = letters[:k] + (-x,) + letters[k + 1 :]
    smoothed = letters[:k] + letters[k + 1 :]
    if x > 0:
        # P(L+) = a^-2 P(L-) + a^-1 z P(L0)
        return _az(-2, 0) * _homfly(n, switched) + _az(-1, 1) * _homfly(n, smoothed)
    # P(L-) = a^2 P(L+) - a z P(L0)
    return _az(2, 0) * _homfly(n, switched) - _az(1, 1) * _homfly(n, smoothed)


def homfly(b: BraidWord, cap: int = HOMFLY_CAP) -> InvariantValue:
    """HOMFLY polynomial of the closure by skein recursion on braid words.

    Crossings met from below are switched one at a time; each switch spawns
    a smoothing with one letter fewer. Leaves are descending diagrams, i.e.
    unlinks.
    """
    if len(b.letters) > cap:
        raise CapExceededError(f"{len(b.letters)} letters exceed the HOMFLY cap of {cap}")
    return InvariantValue("homfly", _homfly(b.strands, b.letters))


def jones_specialization() -> dict[str, LaurentPoly]:
    """Assignment turning a HOMFLY value into the Jones value."""
    return {"a": _q(-2), "z": _q(1) - _q(-1)}


def homfly_to_jones(p: LaurentPoly) -> LaurentPoly:
    return substitute(p, jones_specialization())


# -- braid moves ----------------------------------------------------------------


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: ``b`` in ``B_(n+1)`` followed by ``sigma_n^(+-1)``."""
    n = b.strands
    return BraidWord(n + 1, b.letters + ((n if sign > 0 else -n),))


def mirror(b: BraidWord) -> BraidWord:
    """Flip every crossing; the closure becomes the mirror image."""
    return BraidWord(b.strands, tuple(-x for x in b.letters))


_SURFACES = {(0, 2): (2, "jones"), (1, 1): (3, "homfly")}


def parse_surface(surface) -> tuple[int, int]:
    if isinstance(surface, str):
        try:
            surface = tuple(int(s) for s in surface.split(","))
        except ValueError:
            raise ValueError(f"malformed surface {surface!r}") from None
    surface = tuple(surface)
    if surface not in _SURFACES:
        raise ValueError(f"unsupported surface {surface}; expected (0,2) or (1,1)")
    return surface


def braid_to_laurent(b: BraidWord, surface) -> InvariantValue:
    """Jones for ``S_{0,2}`` (braids on 2 strands), HOMFLY for ``S_{1,1}`` (3 strands)."""
    g_n = parse_surface(surface)
    strands, kind = _SURFACES[g_n]
    if b.strands != strands:
        raise BraidWordError(f"surface {g_n} needs a braid on {strands} strands, got {b.strands}")
    return jones(b) if kind == "jones" else homfly(b)
