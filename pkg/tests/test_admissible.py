import pytest

from weylab.admissible import (
    make_ecd,
    max_admissible_element,
    truncated_interval,
    count_extreme,
    extreme_elements,
    compositions_with_caps,
    partition_count_check,
)
from helpers import random_ecds, brute_max_admissible

ECDS = random_ecds(50)


@pytest.mark.parametrize("idx", range(len(ECDS)))
def test_max_admissible_is_double_coset_max(idx):
    ecd = ECDS[idx]
    wlk = max_admissible_element(ecd)
    oracle, _ = brute_max_admissible(ecd)
    assert wlk == oracle, ecd


@pytest.mark.parametrize("idx", range(0, len(ECDS), 2))
def test_descent_stability(idx):
    # if v is in the truncated interval and s_i v < v, so is s_i v
    ecd = ECDS[idx]
    W = ecd.group
    ti = truncated_interval(ecd)
    for v in ti:
        for i in W.datum.nodes:
            if W.left_descent(v, i):
                assert W.mul(W.simple(i), v) in ti, (ecd, W.describe(v), i)


def test_extreme_count_matches_elements():
    for ecd in ECDS[:10]:
        assert count_extreme(ecd) == len(extreme_elements(ecd))


def test_truncated_interval_contains_translation_and_identity():
    ecd = make_ecd("C", 2, (1, 0), {0, 2})
    W = ecd.group
    ti = truncated_interval(ecd)
    assert max_admissible_element(ecd) in ti
    assert W.identity in ti


def test_validation_errors():
    with pytest.raises(ValueError):
        make_ecd("C", 2, (-1, 0), {0})
    with pytest.raises(ValueError):
        make_ecd("C", 2, (1, 0), set())
    with pytest.raises(ValueError):
        make_ecd("C", 2, (1, 0), {7})


def test_compositions_with_caps():
    assert set(compositions_with_caps(2, (1, 1, 1))) == {
        (1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert compositions_with_caps(0, (2, 2)) == [(0, 0)]


def test_partition_count_small():
    # exact statement on a small grid; the full sweep runs in acceptance
    for n in range(2, 9):
        for l in range(2, 5):
            for caps in _parts(n, l):
                for r in range(1, n):
                    count, ll, eq, predicted = partition_count_check(r, caps)
                    assert count >= ll
                    assert eq == predicted, (r, caps)


def _parts(n, l):
    if l == 1:
        return [(n,)]
    out = []
    for first in range(1, n - l + 2):
        out += [(first,) + rest for rest in _parts(n - first, l - 1)]
    return out


def test_partition_count_rejects_bad_input():
    with pytest.raises(ValueError):
        partition_count_check(1, ())
    with pytest.raises(ValueError):
        partition_count_check(5, (1, 2))
