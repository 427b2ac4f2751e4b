import json
import os

import pytest

from weylab.charts import (
    UnsupportedCase,
    BadParams,
    EliminationFailed,
    build_chart,
    eliminate,
    run_case,
    classify_semistable_table,
    gl_reverse_incidence_is_automatic,
)

GOLDEN = os.path.join(os.path.dirname(__file__), "golden", "gsp_m.json")


def test_table_small():
    rows = classify_semistable_table(4)
    assert rows
    assert all(row["ok"] for row in rows)


def test_gl_m_formula():
    for n in range(2, 6):
        for r in range(1, n):
            nf = run_case("gl", n=n, r=r)
            assert repr(nf) == "SemiStable{m=%d}" % ((n - r) * r - 1)


def test_gsp_m_matches_golden():
    with open(GOLDEN) as fh:
        golden = json.load(fh)
    for key, m in golden["m_by_n"].items():
        nf = run_case("gsp", n=int(key))
        assert nf.verdict == "SemiStable" and nf.m == m


def test_go_split_normalization_note():
    nf = run_case("go-split", n=3)
    assert nf.verdict == "SemiStable"
    assert nf.m == 2
    assert any("X -> -X" in note for note in nf.notes)


def test_so_split_r1():
    for n in range(2, 6):
        even = run_case("so-even-split-r1", n=n)
        odd = run_case("so-odd-split-r1", n=n)
        assert (even.verdict, even.m) == ("SemiStable", 2 * n - 3)
        assert (odd.verdict, odd.m) == ("SemiStable", 2 * n - 2)


def test_so_nonsplit_not_normal_crossings():
    nf = run_case("so-even-nonsplit-r1", n=3)
    assert nf.verdict == "NotNormalCrossings"
    assert "singular" in nf.witness


def test_exotic_smooth_two_components():
    nf = run_case("so-exotic", n=4)
    assert nf.verdict == "Smooth"
    assert nf.components == 2
    assert repr(nf) == "Smooth{2}"
    assert len(nf.retained) == 4 * 3 // 2


def test_reverse_incidence_is_automatic():
    assert gl_reverse_incidence_is_automatic(4, 1)
    assert gl_reverse_incidence_is_automatic(5, 2)


def test_residuals_certified_by_construction():
    # eliminate() re-substitutes every relation; a surviving residual
    # raises instead of silently passing
    chart = build_chart("gl", n=3, r=1)
    nf = eliminate(chart)
    assert nf.relation
    for name, expr in nf.substitution.items():
        assert name not in nf.retained


def test_bad_params():
    with pytest.raises(BadParams):
        build_chart("gl", n=2, r=2)
    with pytest.raises(BadParams):
        build_chart("go-split", n=2)
    with pytest.raises(BadParams):
        classify_semistable_table(3)


def test_unsupported_case():
    with pytest.raises(UnsupportedCase):
        run_case("gl", n=4, r=2, kappa=2)
    with pytest.raises(UnsupportedCase):
        build_chart("no-such-case", n=3)
