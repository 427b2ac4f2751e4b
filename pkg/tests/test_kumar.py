import pytest

from weylab.kumar import (
    NotReduced,
    XNotBelowW,
    linear_form,
    e_functional,
    reflections_below,
    smoothness_product,
    kumar_test,
    case_element,
)
from weylab.polynomial import RatFunc
from weylab.rootdata import build_affine_datum
from weylab.weyl import AffineWeyl

C2 = AffineWeyl(build_affine_datum("C", 2))


def inv_root(W, ar):
    return RatFunc.inverse_form(linear_form(W.datum, ar))


def test_simple_reflection_functionals():
    # e_s X(s) = -1/alpha_s and e_1 X(s) = 1/alpha_s
    W = C2
    for i in W.datum.nodes:
        a = W.datum.affine_simple_root(i)
        s = W.simple(i)
        assert e_functional(W, W.identity, s) == inv_root(W, a)
        assert e_functional(W, s, s) == -inv_root(W, a)


def brute_e(W, x, word):
    """e_x X(w) summed directly over all 2^l subexpressions."""
    d = W.datum
    total = RatFunc.zero(d.finite_rank + 1)
    for mask in range(1 << len(word)):
        y = W.identity
        term = RatFunc.one(d.finite_rank + 1)
        for j, i in enumerate(word):
            a = W.act_aroot(y, d.affine_simple_root(i))
            term = term * inv_root(W, a)
            if mask >> j & 1:
                y = W.mul(y, W.simple(i))
                term = -term
        if y == x:
            total = total + term
    return total


def test_rank2_identity():
    # e_1 X(s1 s2 s1) = 2 / (alpha_2 * alpha_1 * s1(alpha_2))
    W = C2
    d = W.datum
    word = [1, 2, 1]
    a1 = d.affine_simple_root(1)
    a2 = d.affine_simple_root(2)
    base = (
        inv_root(W, a2)
        * inv_root(W, a1)
        * inv_root(W, W.act_aroot(W.simple(1), a2))
    )
    expected = base + base
    got = e_functional(W, W.identity, W.from_word(word))
    assert got == expected
    assert got == brute_e(W, W.identity, word)


def test_brute_force_agrees_on_longer_words():
    W = C2
    for word in ([0, 1, 2, 1], [1, 2, 1, 0], [2, 1, 0, 1, 2]):
        w = W.from_word(word)
        assert W.length(w) == len(word)
        for x in W.lower_interval(w):
            assert e_functional(W, x, w) == brute_e(W, x, word)


def test_reflections_below_dihedral():
    W = C2
    w = W.from_word([1, 2, 1])
    ars = reflections_below(W, w)
    assert len(ars) == 3
    assert all(ar.level == 0 for ar in ars)


def test_simple_elements_pass_criterion():
    W = C2
    for i in W.datum.nodes:
        assert kumar_test(W, W.simple(i)) == "CriterionHolds"


def all_reduced_words(W, w):
    if w == W.identity:
        yield []
        return
    for i in W.datum.nodes:
        if W.left_descent(w, i):
            for rest in all_reduced_words(W, W.mul(W.simple(i), w)):
                yield [i] + rest


def test_reduced_word_independence_short():
    # the functional is intrinsic; every reduced word must agree
    W = C2
    seen = {W.identity}
    frontier = [W.identity]
    for _ in range(5):
        nxt = []
        for w in frontier:
            for i in W.datum.nodes:
                v = W.mul(w, W.simple(i))
                if W.length(v) > W.length(w) and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    for w in sorted(seen, key=W.length):
        words = list(all_reduced_words(W, w))
        first = e_functional(W, W.identity, w, words[0])
        for word in words[1:]:
            assert e_functional(W, W.identity, w, word) == first, W.describe(w)


@pytest.mark.parametrize(
    "case,n,expected",
    [("1b", 2, "Singular"), ("2b", 2, "Singular"), ("3b", 3, "Singular")],
)
def test_case_verdicts(case, n, expected):
    W, w, dual = case_element(case, n)
    assert kumar_test(W, w, dual=dual) == expected


def test_twist_matters_for_transposed_case():
    # the same element passes the untwisted test: the dual pairing is
    # what detects the singularity here
    W, w, dual = case_element("2b", 2)
    assert dual
    assert kumar_test(W, w, dual=False) == "CriterionHolds"


def test_error_paths():
    W = C2
    w = W.from_word([1, 2, 1])
    with pytest.raises(NotReduced):
        e_functional(W, W.identity, w, word=[1, 1, 1])
    with pytest.raises(NotReduced):
        kumar_test(W, w, word=[1, 2])
    far = W.from_word([0, 1, 2, 1, 0])
    with pytest.raises(XNotBelowW):
        e_functional(W, far, w)


def test_case_element_rejects_unknown():
    with pytest.raises(ValueError):
        case_element("9z", 2)
