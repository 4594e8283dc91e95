import importlib
from math import isqrt

import pytest

from hilbinv.classify import (
    DEGREE_TWO_DESCRIPTION,
    BiregularityKind,
    ClassificationError,
    ClassifyOptions,
    Verdict,
    batch_sweep,
    classify,
    known_examples_lookup,
)

from conftest import GOLDEN
from oracles import neg_pell_from_unit

classify_mod = importlib.import_module("hilbinv.classify")

FAST = ClassifyOptions(scan_bound=30, positivity_bound=50, aux_bound=500)


def test_classify_beauville():
    report = classify(2, 2)
    assert report.verdict is Verdict.DERIVED_NATURAL
    assert (report.pell.a, report.pell.b) == (1, 1)
    assert "Beauville" in report.known_description
    assert "T_O∘(-⊗O(H))∘T_O∘(-⊗O(H))[-1]" in report.known_description
    assert report.biregularity.kind is BiregularityKind.KNOWN_BIREGULAR
    assert report.all_checks_pass
    assert "aux_equation_unsolvable" not in report.checks


def test_classify_square():
    report = classify(2, 3)
    assert report.verdict is Verdict.NO_INVOLUTION and report.reason == "square"
    assert report.verdict_label == "NoInvolution(square)"
    assert report.pell is None and report.ns_matrix is None


def test_classify_unsolvable():
    report = classify(3, 2)
    assert report.verdict_label == "NoInvolution(neg-pell-unsolvable)"


def test_classify_degree_two():
    report = classify(1, 5)
    assert report.verdict is Verdict.NATURAL_COVERING
    assert "natural covering involution" in report.known_description
    assert report.known_description == DEGREE_TWO_DESCRIPTION


def test_classify_degree_ten_eleven_points():
    report = classify(5, 11)
    assert report.verdict is Verdict.DERIVED_NATURAL
    assert (report.pell.a, report.pell.b) == (7, 1)
    assert report.checks["aux_equation_unsolvable"].passed
    assert report.checks["aux_equation_unsolvable"].bound == 10_000


@pytest.mark.parametrize("t,n,a,b", GOLDEN)
def test_golden_reports_complete(t, n, a, b):
    report = classify(t, n, FAST)
    assert report.verdict is Verdict.DERIVED_NATURAL
    assert (report.pell.a, report.pell.b) == (a, b)
    assert report.known_description
    for field in ("pell", "ns_matrix", "mukai_matrix", "stability", "wall_report", "discriminant"):
        assert getattr(report, field) is not None
    assert report.all_checks_pass


@pytest.mark.parametrize("t,n", [(0, 2), (2, 1), (2.0, 2)])
def test_classify_rejects_bad_input(t, n):
    with pytest.raises(ValueError):
        classify(t, n)


def test_classify_flop_profiles():
    report = classify(2, 2, ClassifyOptions(flop_profiles=((0, 1), (-1, 2)), flop_search_bound=20))
    assert [f.verdict.value for f in report.flops] == ["ExcludedOnPath", "Inconclusive"]


def test_inconsistency_is_fatal(monkeypatch):
    # a failing check never turns into a silent verdict
    monkeypatch.setattr(classify_mod, "charge_invariance", lambda *args: False)
    with pytest.raises(ClassificationError) as info:
        classify(2, 2, FAST)
    assert "charge_invariance" in str(info.value)
    assert info.value.report is not None


def test_known_examples_lookup():
    assert "T_U∘T_O∘(-⊗O(H))[-1]" in known_examples_lookup(5, 3)
    assert "T_{O(-H)}∘(-⊗O(H))∘T_{O(-H)}∘(-⊗O(H))[-1]" in known_examples_lookup(2, 6)
    assert known_examples_lookup(7, 2) is None
    for t, n, _, _ in GOLDEN:
        assert known_examples_lookup(t, n)


def test_batch_sweep_small():
    result = batch_sweep(range(2, 4), range(2, 4), FAST)
    assert [(r.t, r.n) for r in result.reports] == [(2, 2), (2, 3), (3, 2), (3, 3)]
    labels = {(r.t, r.n): r.verdict_label for r in result.reports}
    assert labels == {
        (2, 2): "DerivedNaturalInvolution",
        (2, 3): "NoInvolution(square)",
        (3, 2): "NoInvolution(neg-pell-unsolvable)",
        (3, 3): "NoInvolution(neg-pell-unsolvable)",
    }
    assert result.errors == []
    assert result.summary == {
        "DerivedNaturalInvolution": 1,
        "NoInvolution(neg-pell-unsolvable)": 2,
        "NoInvolution(square)": 1,
    }


def test_batch_sweep_degree_ten():
    result = batch_sweep(range(5, 6), range(2, 15), FAST)
    derived = [r.n for r in result.reports if r.verdict is Verdict.DERIVED_NATURAL]
    assert derived == [2, 3, 11, 14]
    expected = [n for n in range(2, 15)
                if isqrt(5 * (n - 1)) ** 2 != 5 * (n - 1) and neg_pell_from_unit(5 * (n - 1))]
    assert derived == expected


def test_batch_sweep_empty_range():
    with pytest.raises(ValueError):
        batch_sweep(range(2, 2), range(2, 5))
    with pytest.raises(ValueError):
        batch_sweep(range(2, 5), range(5, 2))


def test_batch_sweep_collects_cell_errors(monkeypatch):
    monkeypatch.setattr(classify_mod, "charge_invariance", lambda *args: False)
    result = batch_sweep(range(2, 4), range(2, 3), FAST)
    assert [(e.t, e.n) for e in result.errors] == [(2, 2)]
    assert [(r.t, r.n) for r in result.reports] == [(3, 2)]
    assert result.summary["error"] == 1


def test_batch_sweep_parallel_matches_serial():
    serial = batch_sweep(range(2, 6), range(2, 8), FAST)
    parallel = batch_sweep(range(2, 6), range(2, 8), FAST, workers=3)
    assert [r.verdict_label for r in serial.reports] == [r.verdict_label for r in parallel.reports]
    assert [(r.t, r.n) for r in serial.reports] == [(r.t, r.n) for r in parallel.reports]
