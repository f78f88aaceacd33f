"""
Dehornoy sign versus coefficient positivity of closure invariants.

For every braid up to a given length the report records the Dehornoy
verdict next to whether the closure's Jones (2 strands) or HOMFLY (3 strands)
polynomial has only positive coefficients. It reports the contingency table
as observed and makes no claim either way.
"""

from __future__ import annotations

import bisect
import itertools
from collections import Counter
from dataclasses import asdict, dataclass, field

from .braid import BraidWord
from .dehornoy import Relation, Verdict, dehornoy_compare, dehornoy_sign
from .invariants import braid_to_laurent
from .laurent import canonical_text, is_positive

__all__ = [
    "SCHEMA_VERSION",
    "ExperimentRecord",
    "ExperimentReport",
    "enumerate_words",
    "distinct_elements",
    "experiment_order_positivity",
    "lo_dimension",
]

SCHEMA_VERSION = 1

_SURFACE = {2: ((0, 2), "jones"), 3: ((1, 1), "homfly")}


@dataclass(frozen=True)
class ExperimentRecord:
    braid: str
    strands: int
    dehornoy: str
    invariant_kind: str
    poly: str
    all_coefficients_positive: bool


@dataclass
class ExperimentReport:
    strands: int
    max_len: int
    surface: tuple[int, int]
    records: list[ExperimentRecord] = field(default_factory=list)

    def summary(self) -> dict[str, dict[str, int]]:
        counts = Counter((r.dehornoy, r.all_coefficients_positive) for r in self.records)
        return {
            v.value: {
                "positive_coefficients": counts[(v.value, True)],
                "other": counts[(v.value, False)],
            }
            for v in Verdict
        }

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "experiment": "order-positivity",
            "parameters": {
                "strands": self.strands,
                "max_len": self.max_len,
                "surface": list(self.surface),
            },
            "summary": self.summary(),
            "records": [asdict(r) for r in self.records],
        }


def enumerate_words(strands: int, max_len: int):
    """All freely reduced words by length, then lexicographically on letters."""
    alphabet = sorted(x for i in range(1, strands) for x in (i, -i))
    for length in range(max_len + 1):
        for letters in itertools.product(alphabet, repeat=length):
            if any(letters[j] == -letters[j + 1] for j in range(length - 1)):
                continue
            yield BraidWord(strands, letters)


def distinct_elements(words) -> list[BraidWord]:
    """First word seen for each group element, with equality decided by the order.

    Representatives are kept sorted in the Dehornoy order, so each new word is
    placed by binary search and dropped when it compares ``Equal``.
    """
    kept: list[BraidWord] = []

    class _Key:
        __slots__ = ("word",)

        def __init__(self, word):
            self.word = word

        def __lt__(self, other):
            return dehornoy_compare(self.word, other.word) is Relation.LESS

    keys: list[_Key] = []
    for w in words:
        key = _Key(w)
        pos = bisect.bisect_left(keys, key)
        if pos < len(keys) and dehornoy_compare(keys[pos].word, w) is Relation.EQUAL:
            continue
        keys.insert(pos, key)
        kept.append(w)
    return kept


def experiment_order_positivity(strands: int, max_len: int) -> ExperimentReport:
    if strands not in _SURFACE:
        raise ValueError(f"strands must be 2 or 3, got {strands}")
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    surface, kind = _SURFACE[strands]
    report = ExperimentReport(strands, max_len, surface)
    for w in distinct_elements(enumerate_words(strands, max_len)):
        value = braid_to_laurent(w, surface)
        report.records.append(
            ExperimentRecord(
                braid=w.text(),
                strands=strands,
                dehornoy=dehornoy_sign(w).verdict.value,
                invariant_kind=kind,
                poly=canonical_text(value.poly),
                all_coefficients_positive=is_positive(value.poly),
            )
        )
    report.records.sort(key=lambda r: r.braid)
    return report


def lo_dimension(m: int) -> int:
    """Dimension ``d`` of the ambient space ``R^d`` containing ``LO(F_m)``.

    ``6k - 5`` for ``m = 2k`` and ``6k - 3`` for ``m = 2k + 1``.
    """
    if m < 2:
        raise ValueError(f"rank must be >= 2, got {m}")
    k, odd = divmod(m, 2)
    return 6 * k - 3 if odd else 6 * k - 5
