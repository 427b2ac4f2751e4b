"""Poincare polynomials, symmetry screening, and the CCP classification.

The Poincare polynomial of a truncated interval W_{<=lambda,K} is a
necessary test for rational smoothness of the corresponding Schubert
variety: if the variety is rationally smooth the polynomial is
palindromic.  CCP (component count property) compares the number of
extreme elements of the admissible set with the size of the marking K~.
"""

from dataclasses import dataclass

from .rootdata import build_affine_datum, special_vertices
from .weyl import AffineWeyl
from .admissible import (
    EnhancedCoxeterDatum,
    make_ecd,
    group_of,
    wk_orbits,
    count_extreme,
    max_admissible_element,
    truncated_interval,
)


# -- polynomials in q --------------------------------------------------------


class QPoly:
    """Dense integer polynomial in q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_lengths(cls, lengths):
        lengths = list(lengths)
        c = [0] * (max(lengths) + 1 if lengths else 0)
        for l in lengths:
            c[l] += 1
        return cls(c)

    @classmethod
    def one(cls):
        return cls((1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        m = max(len(self.coeffs), len(other.coeffs))
        return QPoly(
            tuple(self.coeff(i) + other.coeff(i) for i in range(m))
        )

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    def exact_div(self, other):
        """Quotient self/other; raises if the division is not exact."""
        if not other.coeffs:
            raise ZeroDivisionError
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for i in range(len(q) - 1, -1, -1):
            c, r = divmod(rem[i + len(other.coeffs) - 1], lead)
            if r:
                raise ValueError("division is not exact")
            q[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= c * b
        if any(rem):
            raise ValueError("division is not exact")
        return QPoly(q)

    def is_symmetric(self):
        c = self.coeffs
        return all(c[i] == c[len(c) - 1 - i] for i in range(len(c)))

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                q = "q" if i == 1 else "q^%d" % i
                terms.append(q if a == 1 else "%d%s" % (a, q))
        return " + ".join(terms)


def interval_poincare(W, elements):
    return QPoly.from_lengths(W.length(v) for v in elements)


def parabolic_poincare(W, gens):
    """Sum of q^l(x) over the finite parabolic generated by gens."""
    return interval_poincare(W, W.parabolic_elements(gens))


def poincare_polynomial(ecd, orbit=None):
    """P_{<=lambda,K}(q) over the truncated interval W_{<=lambda,K}."""
    return interval_poincare(ecd.group, truncated_interval(ecd, orbit=orbit))


def is_symmetric(p):
    return p.is_symmetric()


# -- CCP ----------------------------------------------------------------------


def ccp_check(ecd):
    k = len(ecd.k_tilde)
    extreme = count_extreme(ecd)
    return {"extreme_count": extreme, "k_size": k, "passes": extreme <= k}


# -- intersections of components ----------------------------------------------


@dataclass
class NotUnique:
    """Antichain of maximal elements when an intersection is reducible."""

    elements: list


def intersection_lower(ecd, w1, w2):
    """Minimal coset representatives below both w1 and w2 (coset maxima)."""
    W = ecd.group
    gens = ecd.wk_generators
    common = W.lower_interval(w1) & W.lower_interval(w2)
    return {v for v in common if W.is_min_rep(v, gens)}


def maximal_elements(W, elts):
    elts = sorted(elts, key=W.length, reverse=True)
    out = []
    for v in elts:
        if not any(W.bruhat_leq(v, m) for m in out):
            out.append(v)
    return out


def intersection_max(ecd, w1, w2):
    """Unique maximal element of the intersection, or NotUnique(list)."""
    if w1 == w2:
        return w1
    W = ecd.group
    tops = maximal_elements(W, intersection_lower(ecd, w1, w2))
    if len(tops) == 1:
        return tops[0]
    return NotUnique(tops)


# -- the pseudo-semistability Poincare screen ----------------------------------


@dataclass
class Verdict:
    passes: bool
    location: str = ""
    witness: str = ""

    def __str__(self):
        if self.passes:
            return "PassesAllPoincareTests"
        return "FailsAt(%s: %s)" % (self.location, self.witness)


def rspss_screen(ecd):
    """Symmetry screen: each component's polynomial, then each pairwise
    intersection.  Reports the first failure with a witness."""
    W = ecd.group
    gens = ecd.wk_generators
    orbits = wk_orbits(ecd)
    comps = []  # (orbit, coset max, truncated interval)
    for orb in orbits:
        wlk = max_admissible_element(ecd, orbit=orb)
        interval = truncated_interval(ecd, orbit=orb)
        p = interval_poincare(W, interval)
        if not p.is_symmetric():
            lam_p = tuple(wlk.lam)
            return Verdict(
                False,
                "component lambda'=%s" % (lam_p,),
                "P = %s is not symmetric" % p,
            )
        comps.append(W.double_coset_max(wlk, gens))
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            inter = intersection_lower(ecd, comps[i], comps[j])
            if not inter:
                continue
            tops = maximal_elements(W, inter)
            if len(tops) > 1:
                return Verdict(
                    False,
                    "intersection (%d,%d)" % (i, j),
                    "not irreducible: %d maximal elements" % len(tops),
                )
            p = interval_poincare(W, inter)
            if not p.is_symmetric():
                return Verdict(
                    False,
                    "intersection (%d,%d)" % (i, j),
                    "P = %s is not symmetric" % p,
                )
    return Verdict(True)


# -- diagram-automorphism action on enhanced data -------------------------------


_AUTO_CACHE = {}


def omega_node_permutations(datum):
    """Node permutation of each length-zero element (tau s_i tau^-1 = s_j)."""
    W = group_of(datum)
    simples = {i: W.simple(i) for i in datum.nodes}
    perms = []
    for tau in W.omega_elements().values():
        itau = W.inv(tau)
        perm = {}
        for i in datum.nodes:
            img = W.mul(tau, simples[i], itau)
            for j, s in simples.items():
                if img == s:
                    perm[i] = j
                    break
            else:
                raise AssertionError("omega conjugation is not a diagram map")
        perms.append(tuple(perm[i] for i in datum.nodes))
    return perms


def automorphism_images(family, rank, lam, k_tilde):
    """All (lambda, K~) images under affine diagram automorphisms.

    An automorphism sigma factors as (rotation by a length-zero element)
    o (finite-diagram automorphism pi); the rotation fixes the coweight
    class, so lambda transforms by pi alone while K~ moves by the full
    sigma.
    """
    datum = build_affine_datum(family, rank)
    key = (family, rank)
    if key not in _AUTO_CACHE:
        _AUTO_CACHE[key] = (
            datum.diagram_automorphisms(),
            omega_node_permutations(datum),
        )
    autos, rotations = _AUTO_CACHE[key]
    images = set()
    for sigma in autos:
        if sigma[0] == 0:
            pi = sigma
        else:
            rho = next(r for r in rotations if r[0] == sigma[0])
            inv_rho = [0] * len(rho)
            for i, x in enumerate(rho):
                inv_rho[x] = i
            pi = tuple(inv_rho[sigma[i]] for i in datum.nodes)
        lam_img = [0] * datum.finite_rank
        for i in range(1, datum.finite_rank + 1):
            lam_img[pi[i] - 1] = lam[i - 1]
        k_img = frozenset(sigma[i] for i in k_tilde)
        images.add((tuple(lam_img), k_img))
    return images


def canonical_form(family, rank, lam, k_tilde):
    """Lexicographically least automorphism image of (lambda, K~)."""
    return min(
        (l, tuple(sorted(k)))
        for l, k in automorphism_images(family, rank, lam, k_tilde)
    )


# -- classification --------------------------------------------------------------


@dataclass
class CCPRow:
    family: str
    rank: int
    lam: tuple  # pairing coords of the canonical representative
    k_tilde: tuple
    extreme_count: int
    pattern: str

    def key(self):
        return (self.family, self.rank, self.lam, self.k_tilde)


_FAMILY_RANKS = {
    "A": lambda m: range(2, m + 2),  # A~_{n-1} has rank parameter n
    "B": lambda m: range(3, m + 1),
    "C": lambda m: range(2, m + 1),
    "D": lambda m: range(4, m + 1),
    "E": lambda m: (6, 7),
    "F": lambda m: (4,),
    "G": lambda m: (2,),
}


def _fund(lam):
    """Node index r if lam = omega^vee_r, else None."""
    if sum(lam) == 1 and all(x in (0, 1) for x in lam):
        return lam.index(1) + 1
    return None


def _match_pattern(datum, lam, k):
    """Theorem row label for one automorphism image, or None."""
    fam, n = datum.family, datum.finite_rank
    kset = set(k)
    r = _fund(lam)
    if len(kset) == 1 and next(iter(kset)) in special_vertices(datum):
        return "1a"
    if fam == "B" and r is not None and 1 <= r <= n - 1 and kset == {n}:
        return "1b"
    if (
        fam == "C"
        and lam[:-1] == (0,) * (n - 1)
        and lam[-1] in (1, 2)
        and len(kset) == 1
        and 1 <= next(iter(kset)) <= n - 1
    ):
        return "1c"
    if fam == "F" and r == 1 and kset == {4}:
        return "1d"
    if fam == "G" and r == 2 and kset == {1}:
        return "1e"
    if fam == "A" and n == 1 and lam == (2,) and kset == {0, 1}:
        return "2a"
    if fam == "A" and r == 1 and len(kset) >= 2:
        return "2b"
    if fam == "A" and n >= 3 and r is not None and 2 <= r <= n - 1 and kset == {0, 1}:
        return "2c"
    if fam == "B" and n >= 3 and r == 1 and kset == {0, n}:
        return "2d"
    if fam == "B" and n >= 3 and r == n and kset == {0, 1}:
        return "2e"
    if fam == "C" and r == 1 and kset == {0, n}:
        return "2f"
    if (
        fam == "C"
        and lam[:-1] == (0,) * (n - 1)
        and lam[-1] in (1, 2)
        and len(kset) == 2
        and max(kset) - min(kset) == 1
    ):
        return "2g"
    if fam == "D" and n >= 4 and r == 1 and kset == {0, n}:
        return "2h"
    if fam == "D" and n >= 5 and r in (n - 1, n) and kset == {0, 1}:
        return "2i"
    return None


_PATTERN_ORDER = ["1a", "1b", "1c", "1d", "1e",
                  "2a", "2b", "2c", "2d", "2e", "2f", "2g", "2h", "2i"]


def match_pattern(family, rank, lam, k_tilde):
    """Best theorem row over all automorphism images (None if unmatched)."""
    datum = build_affine_datum(family, rank)
    hits = set()
    for l, kk in automorphism_images(family, rank, lam, k_tilde):
        m = _match_pattern(datum, l, tuple(sorted(kk)))
        if m:
            hits.add(m)
    if not hits:
        return None
    return min(hits, key=_PATTERN_ORDER.index)


def _subsets(nodes):
    nodes = list(nodes)
    for mask in range(1, 1 << len(nodes)):
        yield frozenset(nodes[i] for i in range(len(nodes)) if mask >> i & 1)


def classify_ccp(max_classical_rank=6):
    """All enhanced Coxeter data passing CCP, up to diagram automorphism.

    Returns rows sorted by (family, rank, lambda, K~); each row carries
    the matched theorem-pattern label ("?" marks an unexpected hit).
    """
    rows = []
    for fam, ranks in _FAMILY_RANKS.items():
        for rank in ranks(max_classical_rank):
            datum = build_affine_datum(fam, rank)
            seen = set()
            for lam in datum.translation_data():
                for kt in _subsets(datum.nodes):
                    canon = canonical_form(fam, rank, lam, kt)
                    if canon in seen:
                        continue
                    seen.add(canon)
                    ecd = make_ecd(fam, rank, canon[0], canon[1])
                    res = ccp_check(ecd)
                    if not res["passes"]:
                        continue
                    rows.append(
                        CCPRow(
                            fam,
                            rank,
                            canon[0],
                            tuple(sorted(canon[1])),
                            res["extreme_count"],
                            match_pattern(fam, rank, canon[0], canon[1]) or "?",
                        )
                    )
    rows.sort(key=CCPRow.key)
    return rows


def classification_report(rows):
    """JSON-ready report grouped by irreducible/reducible special fiber."""
    def row_dict(row):
        datum = build_affine_datum(row.family, row.rank)
        try:
            eps = datum.coweight_to_eps(row.lam)
        except ValueError:  # exceptional families: pairing coords
            eps = row.lam
        return {
            "family": row.family,
            "rank": row.rank,
            "lambda": [str(x) for x in eps],
            "k": list(row.k_tilde),
            "extreme_count": row.extreme_count,
            "pattern": row.pattern,
        }

    return {
        "irreducible": [row_dict(r) for r in rows if r.extreme_count == 1],
        "reducible": [row_dict(r) for r in rows if r.extreme_count > 1],
    }
