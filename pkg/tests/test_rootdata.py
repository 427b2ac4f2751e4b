import pytest

from weylab.rootdata import build_affine_datum, special_vertices


POS_COUNTS = {
    ("A", 3): 3,          # finite A_2
    ("A", 4): 6,
    ("B", 3): 9,
    ("B", 4): 16,
    ("C", 2): 4,
    ("C", 4): 16,
    ("D", 4): 12,
    ("D", 5): 20,
    ("E", 6): 36,
    ("E", 7): 63,
    ("F", 4): 24,
    ("G", 2): 6,
}


@pytest.mark.parametrize("key", sorted(POS_COUNTS))
def test_positive_root_counts(key):
    fam, rank = key
    datum = build_affine_datum(fam, rank)
    assert len(datum.positive_roots) == POS_COUNTS[key]


@pytest.mark.parametrize("key", sorted(POS_COUNTS))
def test_coroot_pairing_is_two(key):
    datum = build_affine_datum(*key)
    for a in datum.positive_roots:
        assert datum.pair(datum.coroot_of(a), a) == 2


@pytest.mark.parametrize("key", sorted(POS_COUNTS))
def test_highest_root_dominant(key):
    datum = build_affine_datum(*key)
    theta = datum.highest_root
    for b in datum.positive_roots:
        # theta + any positive root is not a root
        s = tuple(x + y for x, y in zip(theta, b))
        assert s not in set(datum.positive_roots)


@pytest.mark.parametrize("fam,rank", [("A", 3), ("B", 3), ("B", 4),
                                      ("C", 2), ("C", 3), ("D", 4), ("D", 5)])
def test_eps_roundtrip(fam, rank):
    datum = build_affine_datum(fam, rank)
    for i in range(1, datum.finite_rank + 1):
        lam = datum.fundamental_coweight(i)
        assert datum.coweight_from_eps(datum.coweight_to_eps(lam)) == lam


def test_special_vertices():
    assert set(special_vertices(build_affine_datum("C", 4))) == {0, 4}
    assert set(special_vertices(build_affine_datum("B", 4))) == {0, 1}
    assert set(special_vertices(build_affine_datum("D", 5))) == {0, 1, 4, 5}
    assert set(special_vertices(build_affine_datum("F", 4))) == {0}
    assert set(special_vertices(build_affine_datum("G", 2))) == {0}
    # A~: every vertex is special
    assert set(special_vertices(build_affine_datum("A", 4))) == {0, 1, 2, 3}


def test_marks_start_with_one():
    for fam, rank in POS_COUNTS:
        datum = build_affine_datum(fam, rank)
        marks = datum.marks
        assert marks[0] == 1
        assert len(marks) == datum.finite_rank + 1


def test_simple_coroot_pairings_match_cartan():
    datum = build_affine_datum("G", 2)
    # <alpha_j, alpha_i^vee> entries are Cartan integers with 2 on diagonal
    def simple_root(j):
        coords = [0, 0]
        coords[j - 1] = 1
        return tuple(coords)

    for i in range(1, 3):
        avee = datum.simple_coroot(i)
        row = [datum.pair(avee, simple_root(j)) for j in range(1, 3)]
        assert row[i - 1] == 2
        assert all(x <= 0 for j, x in enumerate(row, 1) if j != i)
