"""Enhanced Coxeter data, extreme elements, and truncated intervals.

An enhanced Coxeter datum is (affine datum, coweight class {lambda},
vertex marking K~).  The parahoric Weyl group W_K attached to a marking
K~ is generated by the simple reflections at the *unmarked* nodes, so a
single special vertex gives the full finite Weyl group and K~ = S~ gives
the Iwahori (W_K trivial).  K~ must be non-empty for W_K to be finite.
"""

from dataclasses import dataclass, field
from functools import cached_property

from .rootdata import build_affine_datum
from .weyl import AffineWeyl


class NoDominantRepresentative(RuntimeError):
    pass


_GROUPS = {}


def group_of(datum):
    key = (datum.family, datum.rank)
    if key not in _GROUPS:
        _GROUPS[key] = AffineWeyl(datum)
    return _GROUPS[key]


@dataclass(frozen=True)
class EnhancedCoxeterDatum:
    family: str
    rank: int
    lam: tuple  # dominant representative, coweight pairing coords
    k_tilde: frozenset

    def __post_init__(self):
        datum = build_affine_datum(self.family, self.rank)
        nodes = set(datum.nodes)
        kt = set(self.k_tilde)
        if not kt or not kt <= nodes:
            raise ValueError("k_tilde must be a non-empty subset of the nodes")
        if len(self.lam) != datum.finite_rank:
            raise ValueError("lambda has wrong rank")
        if any(x < 0 for x in self.lam):
            raise ValueError("lambda must be the dominant representative")

    @property
    def datum(self):
        return build_affine_datum(self.family, self.rank)

    @property
    def group(self):
        return group_of(self.datum)

    @property
    def wk_generators(self):
        """Generating nodes of W_K: the complement of the marking."""
        return tuple(sorted(set(self.datum.nodes) - set(self.k_tilde)))


def make_ecd(family, rank, lam, k_tilde):
    return EnhancedCoxeterDatum(family, rank, tuple(lam), frozenset(k_tilde))


# -- orbits ----------------------------------------------------------------


def w0_orbit(ecd_or_datum, lam=None):
    """Full finite Weyl group orbit of lam (BFS on pairing vectors)."""
    if lam is None:
        datum, lam = ecd_or_datum.datum, ecd_or_datum.lam
    else:
        datum = ecd_or_datum
    W = group_of(datum)
    gens = [W.simple(i) for i in range(1, datum.finite_rank + 1)]
    return _orbit(W, gens, lam)


def _orbit(W, gens, lam):
    seen = {tuple(lam)}
    frontier = [tuple(lam)]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                u = W.cow_action(g, v)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen

def wk_orbits(ecd):
    """Partition of the W_0-orbit of lambda into W_K-orbits.

    s_0 (and any affine reflection) acts on coweights through its finite
    reflection part.  Returns a list of frozensets.
    """
    W = ecd.group
    gens = [W.simple(j) for j in ecd.wk_generators]
    rest = set(w0_orbit(ecd))
    out = []
    while rest:
        start = min(rest)
        orb = _orbit(W, gens, start) if gens else {start}
        out.append(frozenset(orb))
        rest -= orb
    return out


def count_extreme(ecd):
    """Number of extreme elements: W_K-orbits on the W_0-orbit of lambda."""
    return len(wk_orbits(ecd))


# -- Lemma "max": dominant representatives and truncated intervals -----------


def max_admissible_element(ecd, orbit=None):
    """t^{lambda'} = min-length representative of max(W_K t^lambda W_K).

    lambda' is the unique member of the W_K-orbit (default: orbit of
    ecd.lam) whose translation is a minimal-length coset representative
    for W_K.  Computed convention-robustly from the length function.
    """
    W = ecd.group
    gens = ecd.wk_generators
    if orbit is None:
        gen_elts = [W.simple(j) for j in gens]
        orbit = _orbit(W, gen_elts, ecd.lam) if gens else {tuple(ecd.lam)}
    found = [mu for mu in orbit if W.is_min_rep(W.translation(mu), gens)]
    if not found:
        raise NoDominantRepresentative(
            "no W_K-dominant representative in orbit of %r" % (ecd.lam,)
        )
    assert len(found) == 1, "dominant representative is not unique"
    return W.translation(found[0])


def truncated_interval(ecd, orbit=None):
    """W_{<=lambda,K}: minimal coset representatives below w_{lambda,K}."""
    W = ecd.group
    gens = ecd.wk_generators
    wlk = max_admissible_element(ecd, orbit=orbit)
    return {v for v in W.lower_interval(wlk) if W.is_min_rep(v, gens)}


def admissible_set(ecd):
    """The K-admissible set, as the set of double-coset maxima <= some
    extreme translation.  Returned as a set of maximal-length coset
    representatives (one canonical element per double coset)."""
    W = ecd.group
    gens = ecd.wk_generators
    cosets = set()
    for orb in wk_orbits(ecd):
        wlk = max_admissible_element(ecd, orbit=orb)
        for v in W.lower_interval(wlk):
            cosets.add(W.double_coset_max(v, gens))
    return cosets


def extreme_elements(ecd):
    """Maximal double cosets of the admissible set, one max-rep each."""
    W = ecd.group
    gens = ecd.wk_generators
    out = []
    for orb in wk_orbits(ecd):
        wlk = max_admissible_element(ecd, orbit=orb)
        out.append(W.double_coset_max(wlk, gens))
    return out


# -- composition counting (the combinatorial core of the CCP analysis) -------


def compositions_with_caps(r, caps):
    """All tuples (j_1..j_l) with sum r and 0 <= j_i <= n_i."""
    if not caps:
        return [()] if r == 0 else []
    out = []
    head, rest = caps[0], caps[1:]
    for j in range(min(head, r) + 1):
        for tail in compositions_with_caps(r - j, rest):
            out.append((j,) + tail)
    return out


def partition_count_check(r, caps):
    """Check #X >= l with equality iff r == 1 or (l == 2 and 1 in caps).

    Returns (count, l, equality_holds, predicted_equality).  caps must be
    positive and r <= sum(caps); degenerate inputs raise ValueError.
    """
    l = len(caps)
    if l == 0 or any(n <= 0 for n in caps):
        raise ValueError("caps must be positive")
    if not (1 <= r <= sum(caps)):
        raise ValueError("need 1 <= r <= sum(caps)")
    count = len(compositions_with_caps(r, tuple(caps)))
    if count < l:
        raise AssertionError("count below lower bound: %r" % ((r, caps),))
    # The source statement assumes r <= n/2 WLOG; the j_i -> n_i - j_i
    # symmetry swaps r and n-r, so the closed form of the equality case is
    # r in {1, n-1} or (l = 2 and some cap = 1).
    predicted = r in (1, sum(caps) - 1) or (
        l == 2 and (caps[0] == 1 or caps[1] == 1)
    )
    return count, l, count == l, predicted
