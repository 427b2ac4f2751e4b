from collections import Counter

import pytest

from weylab.admissible import (
    make_ecd,
    max_admissible_element,
    truncated_interval,
    extreme_elements,
)
from weylab.poincare import (
    QPoly,
    poincare_polynomial,
    parabolic_poincare,
    intersection_lower,
    intersection_max,
    NotUnique,
    rspss_screen,
    canonical_form,
    classify_ccp,
)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_spin_fixture(n):
    # (B~n, omega1, {n}) = (1 + q + ... + q^{2(n-1)}) q + q^n + 1
    ecd = make_ecd("B", n, (1,) + (0,) * (n - 1), {n})
    coeffs = [1] * (2 * n)
    coeffs[n] += 1
    assert poincare_polynomial(ecd) == QPoly(coeffs)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_symplectic_intersection_coeffs(n):
    # (C~n, omega1, {0,n}): two components, intersection has
    # n cosets in length n-1 and n+1 cosets in length n
    ecd = make_ecd("C", n, (1,) + (0,) * (n - 1), {0, n})
    W = ecd.group
    ex = extreme_elements(ecd)
    assert len(ex) == 2
    low = intersection_lower(ecd, ex[0], ex[1])
    p = QPoly.from_lengths([W.length(v) for v in low])
    assert p.coeff(n - 1) == n
    assert p.coeff(n) == n + 1


def test_f4_quotient_formula():
    # P_{<=lam,K} * P_{W_{2,3,4}} == P_{W_{2,3,4}} + q * P_{W_{1,2,3,4}}
    ecd = make_ecd("F", 4, (1, 0, 0, 0), {0})
    W = ecd.group
    P = poincare_polynomial(ecd)
    full = parabolic_poincare(W, (1, 2, 3, 4))
    sub = parabolic_poincare(W, (2, 3, 4))
    q = QPoly((0, 1))
    assert P * sub == sub + q * full


# -- witness counts for the singularity analysis ----------------------------


def _length_census(ecd):
    W = ecd.group
    top = W.length(max_admissible_element(ecd))
    return W, top, Counter(W.length(v) for v in truncated_interval(ecd))


def test_g2_witnesses():
    ecd = make_ecd("G", 2, (0, 1), {1})
    W, top, census = _length_census(ecd)
    assert top == 6
    assert census[1] == 1
    assert [v for v in truncated_interval(ecd) if W.length(v) == 1] == [W.simple(1)]
    assert census[5] == 2


def test_f4_witnesses():
    ecd = make_ecd("F", 4, (1, 0, 0, 0), {4})
    W, top, census = _length_census(ecd)
    assert top == 16
    assert census[2] == 1
    only = [v for v in truncated_interval(ecd) if W.length(v) == 2]
    assert only == [W.from_word([3, 4])]
    assert census[top - 2] >= 2


@pytest.mark.parametrize("n,i", [(2, 0), (4, 1)])
def test_symplectic_double_witnesses(n, i):
    ecd = make_ecd("C", n, (0,) * (n - 1) + (2,), {i, i + 1})
    _, top, census = _length_census(ecd)
    assert census[top - 1] >= 3


def test_odd_orthogonal_witnesses():
    ecd = make_ecd("B", 3, (0, 0, 1), {0, 1})
    _, top, census = _length_census(ecd)
    assert census[top - 2] >= 4


def test_a1_intersection_not_unique():
    ecd = make_ecd("A", 2, (2,), {0, 1})
    W = ecd.group
    ex = extreme_elements(ecd)
    assert len(ex) == 2
    res = intersection_max(ecd, ex[0], ex[1])
    assert isinstance(res, NotUnique)
    assert set(res.elements) == {W.simple(0), W.simple(1)}


# -- screen and classification sanity ---------------------------------------


def test_screen_passes_on_known_good_case():
    ecd = make_ecd("C", 3, (1, 0, 0), {0})
    assert rspss_screen(ecd).passes


def test_screen_fails_with_witness_on_asymmetric_case():
    ecd = make_ecd("B", 3, (1, 0, 0), {3})
    verdict = rspss_screen(ecd)
    assert not verdict.passes
    assert verdict.witness


def test_canonical_form_idempotent():
    cases = [
        ("A", 4, (1, 0, 0), (0, 2)),
        ("C", 3, (1, 0, 0), (0, 3)),
        ("D", 4, (0, 0, 0, 1), (0, 4)),
    ]
    for family, rank, lam, k in cases:
        l1, k1 = canonical_form(family, rank, lam, k)
        l2, k2 = canonical_form(family, rank, l1, k1)
        assert (l1, k1) == (l2, k2)


def test_classification_has_no_unmatched_rows():
    rows = classify_ccp(4)
    assert rows
    assert all("?" not in row.pattern for row in rows)
