"""Shared oracles and generators for the test suite.

The oracles here are deliberately independent of the library internals:
lengths come from BFS depth over words, Bruhat order from the subword
property, and maximal admissible elements from double-coset maxima.
"""

import random

from weylab.rootdata import build_affine_datum
from weylab.weyl import AffineWeyl
from weylab.admissible import make_ecd
from weylab.poincare import (
    QPoly,
    interval_poincare,
    parabolic_poincare,
    poincare_polynomial,
)

_GROUPS = {}


def group(family, rank):
    key = (family, rank)
    if key not in _GROUPS:
        _GROUPS[key] = AffineWeyl(build_affine_datum(family, rank))
    return _GROUPS[key]


def bfs_ball(W, max_len):
    """{element: BFS depth} over products of simple reflections."""
    depth = {W.identity: 0}
    frontier = [W.identity]
    for d in range(1, max_len + 1):
        nxt = []
        for w in frontier:
            for i in W.datum.nodes:
                v = W.mul(w, W.simple(i))
                if v not in depth:
                    depth[v] = d
                    nxt.append(v)
        frontier = nxt
    return depth


def check_length_is_word_length(family, rank, max_len):
    W = group(family, rank)
    ball = bfs_ball(W, max_len)
    for w, d in ball.items():
        assert W.length(w) == d, (family, rank, W.describe(w))
    return len(ball)


def bruhat_reach(W, word):
    """All subword products of a reduced word: the lower Bruhat interval
    by the subword property."""
    reach = {W.identity}
    for i in word:
        s = W.simple(i)
        reach = reach | {W.mul(x, s) for x in reach}
    return reach


def check_bruhat_vs_subword(family, rank, max_len):
    W = group(family, rank)
    ball = bfs_ball(W, max_len)
    elements = sorted(ball, key=lambda w: (ball[w], repr(w)))
    pairs = 0
    for w in elements:
        tau, word = W.reduced_word_tau(w)
        if tau != W.identity:
            continue
        oracle = bruhat_reach(W, word)
        for v in elements:
            if W.length(v) > W.length(w):
                continue
            tv, _ = W.reduced_word_tau(v)
            if tv != W.identity:
                continue
            assert W.bruhat_leq(v, w) == (v in oracle), (
                family, rank, W.describe(v), W.describe(w))
            pairs += 1
    return pairs


# -- random enhanced data ------------------------------------------------------


_SMALL = [("A", 2), ("A", 3), ("B", 3), ("C", 2), ("C", 3), ("G", 2)]


def random_ecds(count, seed=20260826, max_translation_length=12):
    """Deterministic sample of small enhanced Coxeter data."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        fam, rank = rng.choice(_SMALL)
        datum = build_affine_datum(fam, rank)
        W = group(fam, rank)
        lams = list(datum.translation_data())
        lam = rng.choice(lams)
        if rng.random() < 0.2:
            lam = tuple(a + b for a, b in zip(lam, rng.choice(lams)))
        if W.length(W.translation(lam)) > max_translation_length:
            continue
        nodes = list(datum.nodes)
        k = frozenset(rng.sample(nodes, rng.randint(1, len(nodes))))
        out.append(make_ecd(fam, rank, lam, k))
    return out


def brute_max_admissible(ecd):
    """Oracle for w_{lambda,K}: minimal coset representative of the
    double-coset maximum above the translation."""
    W = ecd.group
    gens = ecd.wk_generators
    vmax = W.double_coset_max(W.translation(ecd.lam), gens)
    return W.min_coset_rep(vmax, gens), vmax


def check_factorization(ecd):
    """Interval below max(W_K t^lambda W_K) factors as
    P_{<=lambda,K}(q) * P_{W_K}(q)."""
    W = ecd.group
    _, vmax = brute_max_admissible(ecd)
    full = interval_poincare(W, W.lower_interval(vmax))
    gens = ecd.wk_generators
    wk = parabolic_poincare(W, gens) if gens else QPoly.one()
    assert full == poincare_polynomial(ecd) * wk, ecd
