from __future__ import annotations

import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from braidorder import BraidWord, LaurentPoly

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_word(rng: random.Random, strands: int, max_len: int, min_len: int = 0) -> BraidWord:
    length = rng.randint(min_len, max_len)
    return BraidWord(strands, tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)))


def random_positive_word(rng: random.Random, strands: int, max_len: int) -> BraidWord:
    return BraidWord(strands, tuple(rng.randint(1, strands - 1) for _ in range(rng.randint(1, max_len))))


@st.composite
def braid_words(draw, strands=st.integers(3, 4), max_len=12):
    n = draw(strands)
    letters = draw(
        st.lists(st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k))), max_size=max_len)
    )
    return BraidWord(n, tuple(letters))


@st.composite
def braid_tuples(draw, count, strands=st.integers(3, 4), max_len=12):
    n = draw(strands)
    letter = st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k)))
    return tuple(BraidWord(n, tuple(draw(st.lists(letter, max_size=max_len)))) for _ in range(count))


VARS = ("x", "y", "z")


@st.composite
def laurent_polys(draw, variables=VARS, max_terms=5, exp=3, coeff=5, denominators=None, positive=False):
    values = st.integers(1, coeff) if positive else st.integers(-coeff, coeff).filter(bool)
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(-exp, exp) for _ in variables]),
            values,
            min_size=1 if positive else 0,
            max_size=max_terms,
        )
    )
    return LaurentPoly(variables, terms, denominators)


@pytest.fixture
def rng():
    return random.Random(20261016)
