from __future__ import annotations

from collections import Counter

import pytest

from braidorder.braid import inverse, parse_braid
from braidorder.dehornoy import Relation, dehornoy_compare
from braidorder.experiments import (
    distinct_elements,
    enumerate_words,
    experiment_order_positivity,
    lo_dimension,
)
from braidorder.invariants import HOMFLY_RING, JONES_RING
from braidorder.laurent import is_positive, parse_poly


def test_enumeration_order():
    words = [w.text() for w in enumerate_words(2, 2)]
    assert words == ["", "-1", "1", "-1 -1", "1 1"]
    assert sum(1 for _ in enumerate_words(3, 3)) == 1 + 4 + 12 + 36


def test_distinct_elements_drops_equal_braids():
    words = [parse_braid(t, 3) for t in ["1 2 1", "2 1 2", "1", "-2 1 2", "1 2 -1"]]
    kept = distinct_elements(words)
    assert [w.text() for w in kept] == ["1 2 1", "1", "-2 1 2"]


def test_max_len_one():
    rows = {r.braid: r for r in experiment_order_positivity(2, 1).records}
    assert rows["1"].dehornoy == "Positive"
    assert rows["-1"].dehornoy == "Negative"
    assert rows[""].dehornoy == "Identity"


def test_max_len_zero():
    report = experiment_order_positivity(2, 0)
    assert [(r.braid, r.dehornoy) for r in report.records] == [("", "Identity")]


def test_trefoil_row():
    rows = {r.braid: r for r in experiment_order_positivity(2, 3).records}
    trefoil = rows["1 1 1"]
    assert trefoil.dehornoy == "Positive"
    assert trefoil.invariant_kind == "jones"
    assert trefoil.all_coefficients_positive is False


def test_bad_parameters():
    with pytest.raises(ValueError):
        experiment_order_positivity(4, 2)
    with pytest.raises(ValueError):
        experiment_order_positivity(2, -1)


@pytest.mark.parametrize("strands,max_len", [(2, 5), (3, 3)])
def test_report_self_consistency(strands, max_len):
    report = experiment_order_positivity(strands, max_len)
    ring = JONES_RING if strands == 2 else HOMFLY_RING
    texts = [r.braid for r in report.records]
    assert texts == sorted(texts)
    for r in report.records:
        assert r.all_coefficients_positive == is_positive(parse_poly(r.poly, *ring))
    counts = Counter((r.dehornoy, r.all_coefficients_positive) for r in report.records)
    for verdict, cells in report.summary().items():
        assert cells["positive_coefficients"] == counts[(verdict, True)]
        assert cells["other"] == counts[(verdict, False)]
    data = report.to_json()
    assert data["schema"] == 1 and data["parameters"]["strands"] == strands


@pytest.mark.parametrize("strands,max_len", [(2, 5), (3, 3)])
def test_closure_under_inversion(strands, max_len):
    report = experiment_order_positivity(strands, max_len)
    words = [parse_braid(r.braid, strands) for r in report.records]
    verdicts = {r.braid: r.dehornoy for r in report.records}
    for w in words:
        if verdicts[w.text()] != "Positive":
            continue
        inv = inverse(w)
        match = [u for u in words if dehornoy_compare(u, inv) is Relation.EQUAL]
        assert len(match) == 1
        assert verdicts[match[0].text()] == "Negative"


def test_records_are_distinct_elements():
    words = [parse_braid(r.braid, 3) for r in experiment_order_positivity(3, 3).records]
    for i, a in enumerate(words):
        for b in words[i + 1 :]:
            assert dehornoy_compare(a, b) is not Relation.EQUAL


def test_lo_dimension_examples():
    assert lo_dimension(2) == 1
    assert lo_dimension(3) == 3
    assert lo_dimension(4) == 7
    with pytest.raises(ValueError):
        lo_dimension(1)


@pytest.mark.parametrize("m", range(2, 21))
def test_lo_dimension_parity(m):
    k = m // 2
    assert lo_dimension(m) == (6 * k - 5 if m % 2 == 0 else 6 * k - 3)
