"""
Braid words, permutations, free-group words and the Artin action.

A braid word on ``n`` strands is a tuple of nonzero integers; the letter
``k`` stands for ``sigma_|k|`` raised to ``sign(k)``. Group operations
(:func:`product`, :func:`inverse`) freely reduce their result; parsing does
not.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "BraidWordError",
    "BraidWord",
    "Permutation",
    "FreeWord",
    "GroupPresentation",
    "free_reduce",
    "parse_braid",
    "identity",
    "product",
    "inverse",
    "permutation_of",
    "artin_action",
    "artin_images",
    "link_group_presentation",
]


class BraidWordError(ValueError):
    """Malformed braid word or incompatible strand counts."""


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent ``k, -k`` pairs until none remain."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise BraidWordError(f"strand count must be an integer >= 2, got {self.strands!r}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise BraidWordError(
                    f"letter {x} out of range for {self.strands} strands "
                    f"(allowed: ±1..±{self.strands - 1})"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return product(self, other)

    def __invert__(self) -> BraidWord:
        return inverse(self)

    def is_identity_word(self) -> bool:
        return not self.letters

    def is_positive_word(self) -> bool:
        return all(x > 0 for x in self.letters)

    def text(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def reduced(self) -> BraidWord:
        return BraidWord(self.strands, free_reduce(self.letters))

    def __str__(self) -> str:
        return f"B{self.strands}[{self.text()}]"


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated nonzero integers; the word is kept unreduced."""
    letters = []
    for token in text.split():
        try:
            letters.append(int(token))
        except ValueError:
            raise BraidWordError(f"non-integer token {token!r} in braid word") from None
    return BraidWord(strands, tuple(letters))


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise BraidWordError(f"strand counts differ: {a.strands} vs {b.strands}")


def product(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, free_reduce(a.letters + b.letters))


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, free_reduce(-x for x in reversed(a.letters)))


# -- permutations -----------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[j-1]`` is the image of ``j``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __matmul__(self, other: Permutation) -> Permutation:
        """Composition ``(self @ other)(j) = self(other(j))``."""
        return Permutation(tuple(self(other(j)) for j in range(1, len(self.images) + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cycle))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())


def permutation_of(b: BraidWord) -> Permutation:
    """Image under ``B_n -> S_n``; ``sigma_i`` goes to the transposition ``(i, i+1)``.

    This is a homomorphism for composition ``@``: the word ``w1 w2 ... wk``
    maps to ``s_w1 @ s_w2 @ ... @ s_wk``.
    """
    images = list(range(1, b.strands + 1))
    for x in b.letters:
        i = abs(x)
        # right-composing with (i i+1) swaps one-line positions i, i+1
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


# -- free groups --------------------------------------------------------------


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word in ``x_1..x_rank``; letter ``k`` is ``x_|k|^sign(k)``."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for free group of rank {self.rank}")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def generator(cls, rank: int, i: int) -> FreeWord:
        return cls(rank, (i,))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.rank != other.rank:
            raise ValueError("free words of different rank")
        return FreeWord(self.rank, self.letters + other.letters)

    def __invert__(self) -> FreeWord:
        return FreeWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sums(self) -> tuple[int, ...]:
        sums = [0] * self.rank
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(sums)

    def text(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relations: tuple[FreeWord, ...] = field(default_factory=tuple)

    def relation_matrix(self) -> list[list[int]]:
        """Exponent-sum rows; the abelianization is ``Z^n`` modulo their span."""
        return [list(r.exponent_sums()) for r in self.relations]


def _substitute(word: Sequence[int], images: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        img = images[abs(x) - 1]
        out.extend(img if x > 0 else (-y for y in reversed(img)))
    return free_reduce(out)


def _inv(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(word))


def artin_images(b: BraidWord) -> list[tuple[int, ...]]:
    """Images ``r(b)(x_j)`` of the free generators, as reduced letter tuples.

    ``sigma_i`` sends ``x_i -> x_i x_{i+1} x_i^-1`` and ``x_{i+1} -> x_i``;
    ``r`` is a homomorphism, ``r(uv) = r(u) o r(v)``. Composing on the right
    with a generator only touches the images of ``x_i`` and ``x_{i+1}``.
    """
    images: list[tuple[int, ...]] = [(j,) for j in range(1, b.strands + 1)]
    for x in b.letters:
        i = abs(x) - 1
        u, v = images[i], images[i + 1]
        if x > 0:
            images[i] = free_reduce(u + v + _inv(u))
            images[i + 1] = u
        else:
            images[i] = v
            images[i + 1] = free_reduce(_inv(v) + u + v)
    return images


def artin_action(b: BraidWord, w: FreeWord) -> FreeWord:
    if w.rank != b.strands:
        raise ValueError(f"free word rank {w.rank} does not match {b.strands} strands")
    return FreeWord(w.rank, _substitute(w.letters, artin_images(b)))


def link_group_presentation(b: BraidWord) -> GroupPresentation:
    """Presentation ``< x_1..x_n | x_i^-1 r(b)(x_i) >`` of the closure's link group.

    Relations that reduce to the empty word are dropped.
    """
    relations = []
    for j, img in enumerate(artin_images(b), start=1):
        rel = FreeWord(b.strands, (-j,) + img)
        if not rel.is_identity():
            relations.append(rel)
    return GroupPresentation(b.strands, tuple(relations))
