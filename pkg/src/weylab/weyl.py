"""Extended affine Weyl group: elements, length, Bruhat order, cosets.

An element is t^lambda * u with lambda a coweight (pairing coords) and u
in the finite Weyl group, multiplied by (t^lam u)(t^mu v) = t^{lam+u(mu)}(uv).
u is stored as its matrix on root coordinates together with the inverse
matrix, so both the root action and the coweight action are integer
matrix-vector products.

Conventions: t^lam acts on affine roots by a + k*delta -> a + (k - <lam,a>)*delta,
s_0 = t^{theta^vee} s_theta, and a + k*delta is positive iff k > 0 or
(k = 0 and a > 0).  Under these conventions the worked reduced-word
identities of the source computations hold verbatim; all descent tests
below are cross-checked against the translation length formula in tests.
"""

import os
from fractions import Fraction
from typing import NamedTuple

from .rootdata import AffineRoot, parabolic_order


class IntervalCapExceeded(RuntimeError):
    pass


class WeylElt(NamedTuple):
    lam: tuple  # translation part, coweight pairing coords
    rmat: tuple  # finite part acting on root coords (rows of images of e_j)
    rinv: tuple  # inverse of rmat


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _interval_cap():
    return int(os.environ.get("WEYLAB_INTERVAL_CAP", "5000000"))


class AffineWeyl:
    """Operations on the extended affine Weyl group of a RootDatum."""

    def __init__(self, datum):
        self.datum = datum
        m = datum.finite_rank
        self.m = m
        ident = tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))
        self.identity = WeylElt((0,) * m, ident, ident)
        self._simple = {}
        self._len_cache = {}
        self._omega = None
        self._q_inv = None  # Fraction inverse of the Cartan matrix, lazily

    # -- basic element operations ------------------------------------------

    def simple(self, i):
        """Simple reflection s_i, i an affine node (0 = affine)."""
        if i in self._simple:
            return self._simple[i]
        d = self.datum
        m = self.m
        if i == 0:
            theta = d.highest_root
            tv = d.theta_covee
            # s_theta(alpha_j) = alpha_j - <alpha_j, theta^vee> theta
            mat = tuple(
                tuple((1 if r == j else 0) - tv[j] * theta[r] for j in range(m))
                for r in range(m)
            )
            elt = WeylElt(tv, mat, mat)
        else:
            row = d.cartan[i - 1]
            mat = tuple(
                tuple(
                    (1 if r == j else 0) - (row[j] if r == i - 1 else 0)
                    for j in range(m)
                )
                for r in range(m)
            )
            elt = WeylElt((0,) * m, mat, mat)
        self._simple[i] = elt
        return elt

    def translation(self, lam):
        e = self.identity
        return WeylElt(tuple(lam), e.rmat, e.rinv)

    def cow_action(self, w, lam):
        """w(lambda) on coweights: (w lam)_i = <lam, w^{-1} alpha_i>."""
        rinv = w.rinv
        m = self.m
        return tuple(
            sum(lam[k] * rinv[k][i] for k in range(m)) for i in range(m)
        )

    def root_action(self, w, coords):
        rmat = w.rmat
        m = self.m
        return tuple(
            sum(rmat[r][j] * coords[j] for j in range(m)) for r in range(m)
        )

    def mul(self, *ws):
        out = None
        for w in ws:
            if out is None:
                out = w
                continue
            lam = tuple(
                a + b for a, b in zip(out.lam, self.cow_action(out, w.lam))
            )
            out = WeylElt(lam, _matmul(out.rmat, w.rmat), _matmul(w.rinv, out.rinv))
        return out

    def inv(self, w):
        m = self.m
        # (t^lam u)^{-1} = t^{-u^{-1} lam} u^{-1}; u^{-1} coweight action uses rmat
        lam = tuple(
            -sum(w.lam[k] * w.rmat[k][i] for k in range(m)) for i in range(m)
        )
        return WeylElt(lam, w.rinv, w.rmat)

    def from_word(self, word, tau=None):
        out = tau if tau is not None else self.identity
        for i in word:
            out = self.mul(out, self.simple(i))
        return out

    # -- affine root action and length ---------------------------------------

    def act_aroot(self, w, ar):
        a = self.root_action(w, ar.coords)
        return AffineRoot(a, ar.level - self.datum.pair(w.lam, a))

    def act_aroot_inv(self, w, ar):
        """w^{-1}(a + k delta) = (u^{-1} a) + (k + <lam, a>) delta."""
        m = self.m
        a = tuple(
            sum(w.rinv[r][j] * ar.coords[j] for j in range(m)) for r in range(m)
        )
        return AffineRoot(a, ar.level + self.datum.pair(w.lam, ar.coords))

    def length(self, w):
        cached = self._len_cache.get(w)
        if cached is not None:
            return cached
        d = self.datum
        total = 0
        for c in d.positive_roots:
            # delta_{u^{-1}}(alpha) = 1 iff u^{-1} alpha < 0
            b = self.root_action(self.inv_finite(w), c)
            neg = 1 if any(x < 0 for x in b) else 0
            total += abs(d.pair(w.lam, c) - neg)
        self._len_cache[w] = total
        return total

    def inv_finite(self, w):
        return WeylElt((0,) * self.m, w.rinv, w.rmat)

    # -- descents -------------------------------------------------------------

    def left_descent(self, w, i):
        """True iff l(s_i w) < l(w), via w^{-1}(alpha_i) < 0."""
        ar = self.act_aroot_inv(w, self.datum.affine_simple_root(i))
        return not self.datum.is_positive(ar)

    def right_descent(self, w, i):
        """True iff l(w s_i) < l(w), via w(alpha_i) < 0."""
        ar = self.act_aroot(w, self.datum.affine_simple_root(i))
        return not self.datum.is_positive(ar)

    def left_descents(self, w):
        return [i for i in self.datum.nodes if self.left_descent(w, i)]

    def right_descents(self, w):
        return [i for i in self.datum.nodes if self.right_descent(w, i)]

    # -- Bruhat order ----------------------------------------------------------

    def bruhat_leq(self, u, w):
        if u == w:
            return True
        lu, lw = self.length(u), self.length(w)
        if lu >= lw:
            return False
        memo = {}

        def rec(u, w, lu, lw):
            if u == w:
                return True
            if lu > lw or (lu == lw):
                return False
            key = (u, w)
            hit = memo.get(key)
            if hit is not None:
                return hit
            i = next(j for j in self.datum.nodes if self.left_descent(w, j))
            si = self.simple(i)
            sw = self.mul(si, w)
            if self.left_descent(u, i):
                res = rec(self.mul(si, u), sw, lu - 1, lw - 1)
            else:
                res = rec(u, sw, lu, lw - 1)
            memo[key] = res
            return res

        # different length-zero components are incomparable
        if not self.same_component(u, w):
            return False
        return rec(u, w, lu, lw)

    def same_component(self, u, w):
        """True iff u and w lie in the same W_a-coset of the extended group.

        The class of t^lam u in W~/W_a = P^vee/Q^vee depends only on lam.
        """
        return self.in_coroot_lattice(
            tuple(a - b for a, b in zip(u.lam, w.lam))
        )

    def in_coroot_lattice(self, lam):
        """lam (pairing coords) lies in the coroot lattice?"""
        if self._q_inv is None:
            self._q_inv = _fraction_inverse(self.datum.cartan)
        m = self.m
        # lam = c . A (c in coroot basis); c = lam . A^{-1}
        for i in range(m):
            v = sum(Fraction(lam[k]) * self._q_inv[k][i] for k in range(m))
            if v.denominator != 1:
                return False
        return True

    def lower_interval(self, w, cap=None):
        """All v <= w in Bruhat order (including w), as a set."""
        if cap is None:
            cap = _interval_cap()
        memo = {}

        def rec(w):
            hit = memo.get(w)
            if hit is not None:
                return hit
            dls = self.left_descents(w)
            if not dls:
                res = frozenset((w,))
            else:
                si = self.simple(dls[0])
                sub = rec(self.mul(si, w))
                res = frozenset(sub | {self.mul(si, v) for v in sub})
                if len(res) > cap:
                    raise IntervalCapExceeded(
                        "interval below element of length %d exceeds cap %d"
                        % (self.length(w), cap)
                    )
            memo[w] = res
            return res

        return set(rec(w))

    # -- cosets -----------------------------------------------------------------

    def min_coset_rep(self, w, gens):
        """Minimal-length representative of w W_J, J = gens (affine nodes)."""
        cur = w
        changed = True
        while changed:
            changed = False
            for j in gens:
                if self.right_descent(cur, j):
                    cur = self.mul(cur, self.simple(j))
                    changed = True
        return cur

    def is_min_rep(self, w, gens):
        return all(not self.right_descent(w, j) for j in gens)

    def parabolic_elements(self, gens):
        """All elements of W_J (J must be finite); BFS closure."""
        gens = list(gens)
        parabolic_order(self.datum, gens)  # raises if infinite
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for j in gens:
                    v = self.mul(w, self.simple(j))
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return seen

    def longest_element(self, gens):
        """Longest element of the finite parabolic W_J, by greedy ascent."""
        gens = list(gens)
        parabolic_order(self.datum, gens)
        cur = self.identity
        changed = True
        while changed:
            changed = False
            for j in gens:
                if not self.right_descent(cur, j):
                    cur = self.mul(cur, self.simple(j))
                    changed = True
        return cur

    def double_coset_max(self, w, gens):
        """Maximal element of W_J w W_J (greedy ascent on both sides)."""
        cur = w
        changed = True
        while changed:
            changed = False
            for j in gens:
                if not self.right_descent(cur, j):
                    cur = self.mul(cur, self.simple(j))
                    changed = True
                if not self.left_descent(cur, j):
                    cur = self.mul(self.simple(j), cur)
                    changed = True
        return cur

    def double_coset_min(self, w, gens):
        cur = w
        changed = True
        while changed:
            changed = False
            for j in gens:
                if self.right_descent(cur, j):
                    cur = self.mul(cur, self.simple(j))
                    changed = True
                if self.left_descent(cur, j):
                    cur = self.mul(self.simple(j), cur)
                    changed = True
        return cur

    # -- length-zero elements ------------------------------------------------

    def omega_elements(self):
        """Length-zero elements, one per coroot-lattice class of coweights.

        Returned as a dict {class key: element}; keys are canonical
        coweight representatives (0 or a minuscule fundamental coweight).
        """
        if self._omega is not None:
            return self._omega
        d = self.datum
        finite_gens = list(range(1, self.m + 1))
        w0 = self.longest_element(finite_gens)
        out = {(0,) * self.m: self.identity}
        for i in d.minuscule_nodes():
            lam = d.fundamental_coweight(i)
            J = [j for j in finite_gens if lam[j - 1] == 0]
            w0J = self.longest_element(J)
            u = self.mul(w0, w0J)
            tau = self.mul(self.translation(lam), u)
            if self.length(tau) != 0:
                tau = self.mul(self.translation(lam), self.inv(u))
            assert self.length(tau) == 0, "no length-zero element for class"
            out[lam] = tau
        self._omega = out
        return out

    def omega_part(self, w):
        """The length-zero element tau with w in tau * W_a."""
        for lam, tau in self.omega_elements().items():
            if self.in_coroot_lattice(
                tuple(a - b for a, b in zip(w.lam, tau.lam))
            ):
                return tau
        raise AssertionError("element matches no length-zero class")

    def reduced_word_tau(self, w):
        """(tau, word) with w = tau * product(s_i for i in word), reduced.

        Deterministic: the smallest right descent is peeled at each step,
        building the word from its right end.
        """
        word = []
        cur = w
        while True:
            ds = self.right_descents(cur)
            if not ds:
                break
            j = ds[0]
            word.append(j)
            cur = self.mul(cur, self.simple(j))
        word.reverse()
        return cur, word

    # -- display ---------------------------------------------------------------

    def describe(self, w):
        tau, word = self.reduced_word_tau(w)
        parts = []
        if tau != self.identity:
            parts.append("tau[%s]" % ",".join(str(x) for x in tau.lam))
        parts.extend("s%d" % i for i in word)
        return " ".join(parts) if parts else "e"


def _fraction_inverse(mat):
    m = len(mat)
    a = [
        [Fraction(mat[i][j]) for j in range(m)]
        + [Fraction(1 if k == i else 0) for k in range(m)]
        for i in range(m)
    ]
    for col in range(m):
        piv = next(r for r in range(col, m) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(m):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[m:] for row in a]
