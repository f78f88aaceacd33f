from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from braidorder.cluster import (
    PRESETS,
    ExchangeMatrix,
    Seed,
    Triangulation,
    initial_seed,
    laurent_audit,
    matrix_from_triangulation,
    mutate,
    mutate_matrix,
    mutate_sequence,
    positivity_audit,
    surface_preset,
)
from braidorder.laurent import LaurentPoly, canonical_text, parse_poly

MARKOV = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))


def to_sympy(p: LaurentPoly):
    syms = sympy.symbols(p.variables)
    return sum(c * sympy.Mul(*[s**e for s, e in zip(syms, exps)]) for exps, c in p.items())


@st.composite
def skew_matrices(draw, size=st.integers(2, 4), bound=2):
    n = draw(size)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = draw(st.integers(-bound, bound))
            m[j][i] = -m[i][j]
    return ExchangeMatrix(tuple(map(tuple, m)))


def test_matrix_must_be_skew():
    with pytest.raises(ValueError):
        ExchangeMatrix(((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        ExchangeMatrix(((1, 0), (0, 0)))


def test_mutate_markov_example():
    s = surface_preset("torus-1")
    assert s.matrix.entries == MARKOV
    m = mutate(s, 1)
    names = s.variables[0].variables
    assert m.variables[0] == parse_poly("x1^-1*x2^2 + x1^-1*x3^2", names)
    assert m.variables[1:] == s.variables[1:]
    assert m.matrix.entries == ((0, -2, 2), (2, 0, -2), (-2, 2, 0))
    assert mutate(m, 1) == s


def test_mutate_direction_range():
    with pytest.raises(IndexError):
        mutate(surface_preset("annulus-2"), 3)
    with pytest.raises(IndexError):
        mutate(surface_preset("annulus-2"), 0)


def test_matrix_from_triangulation_examples():
    assert matrix_from_triangulation(PRESETS["torus-1"]).entries == MARKOV
    assert matrix_from_triangulation(PRESETS["annulus-2"]).entries == ((0, 2), (-2, 0))
    single = Triangulation(3, ((0, 1, 2),))
    assert matrix_from_triangulation(single).entries == ((0, 1, -1), (-1, 0, 1), (1, -1, 0))


def test_triangulation_validation():
    with pytest.raises(ValueError):
        Triangulation(2, ((0, 0, 1),))
    with pytest.raises(ValueError):
        Triangulation(2, ((0, 1, 2),))
    with pytest.raises(ValueError):
        Triangulation(2, ((0, 1),))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(*[st.one_of(st.none(), st.integers(0, n - 1))] * 3), min_size=1, max_size=4),
)))
def test_triangulation_matrix_is_skew(data):
    n, triangles = data
    triangles = [t for t in triangles if len({a for a in t if a is not None}) == sum(a is not None for a in t)]
    m = matrix_from_triangulation(Triangulation(n, tuple(triangles)))
    assert all(m[i, j] == -m[j, i] for i in range(n) for j in range(n))


def test_surface_preset_examples():
    assert surface_preset("torus-1").rank == 3
    annulus = surface_preset("annulus-2")
    assert annulus.rank == 2 and annulus.matrix.entries == ((0, 2), (-2, 0))
    with pytest.raises(ValueError):
        surface_preset("sphere-0")


def test_seed_shape_is_checked():
    s = surface_preset("annulus-2")
    with pytest.raises(ValueError):
        Seed(s.variables[:1], s.matrix)


@given(skew_matrices(), st.lists(st.integers(1, 4), max_size=6), st.integers(1, 4))
def test_involution_on_random_seeds(matrix, seq, k):
    s = initial_seed(matrix)
    seq = [min(x, s.rank) for x in seq]
    k = min(k, s.rank)
    for x in seq:
        s = mutate(s, x)
        assert all(s.matrix[i, j] == -s.matrix[j, i] for i in range(s.rank) for j in range(s.rank))
    assert mutate(mutate(s, k), k) == s
    assert mutate_matrix(mutate_matrix(s.matrix, k), k) == s.matrix


def test_mutation_trace():
    s = surface_preset("torus-1")
    trace = mutate_sequence(s, [1, 2, 3], source="torus-1")
    assert trace.seeds[0] == s and len(trace.seeds) == 4
    for i, k in enumerate(trace.directions):
        assert trace.seeds[i + 1] == mutate(trace.seeds[i], k)


def evaluate(p: LaurentPoly, point) -> Fraction:
    total = Fraction(0)
    for exps, c in p.items():
        term = Fraction(c)
        for x, e in zip(point, exps):
            term *= Fraction(x) ** e
        total += term
    return total


@settings(max_examples=30)
@given(st.lists(st.integers(1, 3), max_size=7))
def test_markov_invariant(seq):
    # the torus cluster variables keep (x^2 + y^2 + z^2) / (x y z) fixed
    s = mutate_sequence(surface_preset("torus-1"), seq).seeds[-1]
    for point in ((1, 1, 1), (2, 3, 5), (Fraction(1, 2), 7, -3)):
        x, y, z = (evaluate(v, point) for v in s.variables)
        p1, p2, p3 = map(Fraction, point)
        assert (x * x + y * y + z * z) / (x * y * z) == (p1 * p1 + p2 * p2 + p3 * p3) / (p1 * p2 * p3)
    a, b, c = (evaluate(v, (1, 1, 1)) for v in s.variables)
    assert all(v.denominator == 1 and v > 0 for v in (a, b, c))  # Markov numbers


def kronecker_variables(depth: int) -> set[str]:
    """Variables of the Kronecker cluster algebra: x_{n+1} x_{n-1} = x_n^2 + 1."""
    x1, x2 = sympy.symbols("x1 x2")
    seq = {0: x1, 1: x2}
    for n in range(2, depth + 2):
        seq[n] = sympy.cancel((seq[n - 1] ** 2 + 1) / seq[n - 2])
    for n in range(-1, -depth - 1, -1):
        seq[n] = sympy.cancel((seq[n + 1] ** 2 + 1) / seq[n + 2])
    return {sympy.srepr(sympy.expand(v)) for v in seq.values()}


@pytest.mark.parametrize("depth", [0, 1, 2, 5])
def test_annulus_audit_matches_recurrence(depth):
    report = positivity_audit(surface_preset("annulus-2"), depth)
    assert report.passed
    assert len(report.variables) == 2 + 2 * depth
    names = ("x1", "x2")
    got = {sympy.srepr(sympy.expand(to_sympy(parse_poly(t, names)))) for t in report.variables}
    assert got == kronecker_variables(depth)


def test_audit_depth_zero():
    for name in PRESETS:
        s = surface_preset(name)
        for audit in (laurent_audit, positivity_audit):
            report = audit(s, 0)
            assert report.passed and report.explored == 1
            assert sorted(report.variables) == sorted(s.texts())


def test_torus_depth_two():
    report = laurent_audit(surface_preset("torus-1"), 2)
    assert report.passed
    expected = parse_poly("x1^-1*x2^2 + x1^-1*x3^2", ("x1", "x2", "x3"))
    assert canonical_text(expected) in report.variables


def test_audit_records_failures_without_raising():
    # x1 + 1 does not divide the exchange binomial, so the first mutation is inexact
    names = ("x1", "x2")
    bad = Seed(
        (LaurentPoly.variable("x1", names) + 1, LaurentPoly.variable("x2", names)),
        ExchangeMatrix(((0, 1), (-1, 0))),
    )
    report = laurent_audit(bad, 1)
    assert not report.passed
    assert report.failures[0]["sequence"] == [1]
    assert report.to_json()["passed"] is False


def test_positivity_audit_flags_negative_initial_variable():
    names = ("x1", "x2")
    s = Seed((-LaurentPoly.variable("x1", names), LaurentPoly.variable("x2", names)), ((0, 0), (0, 0)))
    assert not positivity_audit(s, 0).passed


def test_audit_report_is_deterministic():
    a = laurent_audit(surface_preset("torus-1"), 3).to_json()
    b = laurent_audit(surface_preset("torus-1"), 3).to_json()
    assert a == b
    assert a["distinct_variables"] == len(a["variables"])
    assert canonical_text(surface_preset("torus-1").variables[0]) in a["variables"]
