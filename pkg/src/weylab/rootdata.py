"""Affine root data for the families A~, B~, C~, D~, E6~, E7~, F4~, G2~.

Coordinates
-----------
Finite roots are stored as integer coefficient vectors in the basis of
simple roots (alpha_1 .. alpha_m, m = finite rank).  Coweights are stored
as integer pairing vectors against the simple roots, i.e. in the basis of
fundamental coweights of the adjoint lattice; this keeps every pairing
<lambda, alpha> an exact integer for every family.  Half-integral
epsilon-coordinates (e.g. omega^vee_n in type C) occur only at the I/O
boundary and are handled as exact fractions there.

The affine node is 0 with alpha_0 = delta - theta (theta the highest
root); nodes are 0..m.  Node labels for the classical families follow the
conventions used throughout the admissible-set computations: type A is
the n-cycle, type B forks into {0, 1} at node 2 and has the short root at
node n, type C has 0 and n at the two double-bond ends, type D forks at
both ends.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import NamedTuple

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


class AffineRoot(NamedTuple):
    """A real affine root a + k*delta: finite part coords plus level k."""

    coords: tuple
    level: int

    def __neg__(self):
        return AffineRoot(tuple(-c for c in self.coords), -self.level)


def _finite_cartan(family, m):
    """Cartan matrix A[i][j] = <alpha_j, alpha_i^vee>, 0-indexed i,j < m."""
    A = [[2 if i == j else 0 for j in range(m)] for i in range(m)]

    def bond(i, j, aij, aji):
        A[i][j] = aij
        A[j][i] = aji

    if family == "A":
        for i in range(m - 1):
            bond(i, i + 1, -1, -1)
    elif family == "B":
        # alpha_i = e_i - e_{i+1} (i < n), alpha_n = e_n short
        for i in range(m - 1):
            bond(i, i + 1, -1, -1)
        if m >= 2:
            A[m - 2][m - 1] = -1  # <alpha_n (short), alpha_{n-1}^vee>
            A[m - 1][m - 2] = -2  # <alpha_{n-1}, alpha_n^vee (short coroot)>
    elif family == "C":
        # alpha_i = e_i - e_{i+1} short (i < n), alpha_n = 2 e_n long
        for i in range(m - 1):
            bond(i, i + 1, -1, -1)
        if m >= 2:
            A[m - 2][m - 1] = -2  # <alpha_n (long), alpha_{n-1}^vee>
            A[m - 1][m - 2] = -1
    elif family == "D":
        for i in range(m - 2):
            bond(i, i + 1, -1, -1)
        if m >= 3:
            bond(m - 3, m - 1, -1, -1)  # alpha_n = e_{n-1} + e_n hangs off node n-2
    elif family == "E":
        # Chain 1-3-4-5-6(-7) with 2 attached to 4.
        chain = [1, 3, 4, 5, 6, 7][: m - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a - 1, b - 1, -1, -1)
        bond(2 - 1, 4 - 1, -1, -1)
    elif family == "F":
        # 1-2=>3-4, alpha_1 alpha_2 long, alpha_3 alpha_4 short
        bond(0, 1, -1, -1)
        bond(2, 3, -1, -1)
        A[1][2] = -1  # <alpha_3 (short), alpha_2^vee (long)>
        A[2][1] = -2
    elif family == "G":
        # 2 = long node (adjacent to the affine node), 1 = short node
        A[0][1] = -3  # <alpha_2 (long), alpha_1^vee (short)>
        A[1][0] = -1
    else:
        raise ValueError("unknown family %r" % (family,))
    return tuple(tuple(row) for row in A)


def _root_closure(cartan):
    """All roots as (coords, coroot_coords) pairs, by reflection closure."""
    m = len(cartan)

    def pairing(coords, co_coords):
        # <beta, alpha^vee> for beta = sum b_j alpha_j, alpha^vee = sum d_i alpha_i^vee
        return sum(
            d * b * cartan[i][j]
            for i, d in enumerate(co_coords)
            for j, b in enumerate(coords)
            if d and b
        )

    def reflect(i, coords, co_coords):
        k = sum(b * cartan[i][j] for j, b in enumerate(coords))
        new = list(coords)
        new[i] -= k
        kv = sum(d * cartan[j][i] for j, d in enumerate(co_coords))
        newv = list(co_coords)
        newv[i] -= kv
        return tuple(new), tuple(newv)

    simples = {}
    for i in range(m):
        c = tuple(1 if j == i else 0 for j in range(m))
        simples[c] = c
    roots = dict(simples)
    frontier = list(roots.items())
    while frontier:
        nxt = []
        for coords, co in frontier:
            for i in range(m):
                rc, rco = reflect(i, coords, co)
                if rc not in roots:
                    roots[rc] = rco
                    nxt.append((rc, rco))
        frontier = nxt
    return roots


class RootDatum:
    """Finite root datum plus its untwisted affine extension.

    rank is the visible parameter: family A with rank n is the affine
    (n-1)-cycle (n nodes); the other families with rank n have nodes 0..n.
    """

    def __init__(self, family, rank):
        if family not in FAMILIES:
            raise ValueError("unknown family %r" % (family,))
        min_rank = {"A": 2, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}[family]
        max_rank = {"E": 7, "F": 4, "G": 2}.get(family)
        if rank < min_rank or (max_rank is not None and rank > max_rank):
            raise ValueError("rank %d out of range for family %s" % (rank, family))
        self.family = family
        self.rank = rank
        m = rank - 1 if family == "A" else rank
        self.finite_rank = m
        self.cartan = _finite_cartan(family, m)
        root_map = _root_closure(self.cartan)
        pos = sorted(
            (c for c in root_map if all(x >= 0 for x in c)),
            key=lambda c: (sum(c), c),
        )
        self.positive_roots = tuple(pos)
        self.coroot_coords = {c: root_map[c] for c in pos}
        self.highest_root = pos[-1]
        if len(pos) > 1 and sum(pos[-1]) == sum(pos[-2]):
            raise AssertionError("highest root not unique")
        # marks: delta = alpha_0 + theta
        self.marks = (1,) + self.highest_root
        self.nodes = tuple(range(m + 1))

    # -- pairings ---------------------------------------------------------

    def pair(self, lam, coords):
        """<lambda, beta> for lambda in coweight coords, beta in root coords."""
        return sum(l * c for l, c in zip(lam, coords) if c)

    def coroot_of(self, coords):
        """Coweight coords of beta^vee for the root beta = coords."""
        c = tuple(coords)
        if c in self.coroot_coords:
            co = self.coroot_coords[c]
        else:
            co = tuple(-x for x in self.coroot_coords[tuple(-x for x in c)])
        # beta^vee = sum d_i alpha_i^vee; alpha_i^vee has coweight coords row i of cartan
        m = self.finite_rank
        return tuple(
            sum(d * self.cartan[i][j] for i, d in enumerate(co)) for j in range(m)
        )

    @property
    def theta_covee(self):
        return self.coroot_of(self.highest_root)

    def simple_coroot(self, i):
        """Coweight coords of alpha_i^vee (finite node i, 1-based)."""
        return tuple(self.cartan[i - 1][j] for j in range(self.finite_rank))

    def fundamental_coweight(self, i):
        """omega^vee_i in coweight coords (1-based node i)."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.finite_rank))

    def affine_simple_root(self, i):
        """alpha_i as an AffineRoot; alpha_0 = delta - theta."""
        if i == 0:
            return AffineRoot(tuple(-c for c in self.highest_root), 1)
        return AffineRoot(
            tuple(1 if j == i - 1 else 0 for j in range(self.finite_rank)), 0
        )

    def is_positive(self, aroot):
        """Positivity of a real affine root: level > 0, or level 0 and finite-positive."""
        if aroot.level != 0:
            return aroot.level > 0
        for c in aroot.coords:
            if c:
                return c > 0
        raise ValueError("zero root has no sign")

    # -- Coxeter data -----------------------------------------------------

    def affine_cartan(self):
        """(m+1)x(m+1) matrix <alpha_j, alpha_i^vee> over affine nodes."""
        m = self.finite_rank
        theta = self.highest_root
        theta_v = self.theta_covee
        A = [[0] * (m + 1) for _ in range(m + 1)]
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                A[i][j] = self.cartan[i - 1][j - 1]
        A[0][0] = 2
        for j in range(1, m + 1):
            # <alpha_j, alpha_0^vee> = -<alpha_j, theta^vee>
            A[0][j] = -theta_v[j - 1]
            # <alpha_0, alpha_j^vee> = -<theta, alpha_j^vee>
            A[j][0] = -self.pair(self.simple_coroot(j), theta)
        return tuple(tuple(row) for row in A)

    def coxeter_matrix(self):
        A = self.affine_cartan()
        m = len(A)
        # product 4 is the infinite bond of the A~1 diagram
        order = {0: 2, 1: 3, 2: 4, 3: 6, 4: 0}
        M = [[1 if i == j else order[A[i][j] * A[j][i]] for j in range(m)] for i in range(m)]
        return tuple(tuple(row) for row in M)

    def diagram_automorphisms(self):
        """All node permutations preserving the affine Cartan matrix."""
        A = self.affine_cartan()
        m = len(A)
        # prune with row multisets
        sig = [tuple(sorted((A[i][j], A[j][i]) for j in range(m) if j != i)) for i in range(m)]
        autos = []
        for perm in permutations(range(m)):
            if any(sig[i] != sig[perm[i]] for i in range(m)):
                continue
            if all(
                A[perm[i]][perm[j]] == A[i][j] for i in range(m) for j in range(m)
            ):
                autos.append(perm)
        return autos

    # -- distinguished data -------------------------------------------------

    def minuscule_nodes(self):
        """Nodes i with <omega^vee_i, theta> = 1 (minuscule coweights)."""
        return tuple(
            i + 1 for i, c in enumerate(self.highest_root) if c == 1
        )

    def translation_data(self):
        """Coweight classes lambda enumerated by the classification.

        Classical families: every fundamental coweight (twisted groups
        contribute non-minuscule images, e.g. omega^vee_r in type B),
        plus the doubled cases 2*omega^vee_n in type C and 2*omega^vee_1
        for A~1.  Exceptional families: the minuscule coweights of E,
        omega^vee_1 for F~4 and omega^vee_2 for G~2.
        """
        fam = self.family
        if fam in "ABCD":
            out = [
                self.fundamental_coweight(i)
                for i in range(1, self.finite_rank + 1)
            ]
            if fam == "C":
                out.append(
                    tuple(2 * x for x in self.fundamental_coweight(self.finite_rank))
                )
            if fam == "A" and self.rank == 2:
                out.append(tuple(2 * x for x in self.fundamental_coweight(1)))
            return out
        if fam == "E":
            return [self.fundamental_coweight(i) for i in self.minuscule_nodes()]
        if fam == "F":
            return [self.fundamental_coweight(1)]
        if fam == "G":
            return [self.fundamental_coweight(2)]
        raise ValueError("unknown family %r" % (fam,))

    # -- epsilon coordinates (classical families) ---------------------------

    def simple_root_eps(self, i):
        """epsilon-coordinates of alpha_i (classical families only)."""
        m = self.finite_rank
        fam = self.family
        if fam == "A":
            n = m + 1
            v = [0] * n
            v[i - 1], v[i] = 1, -1
            return tuple(v)
        v = [0] * m
        if fam in ("B", "C", "D") and i < m:
            v[i - 1], v[i] = 1, -1
        elif fam == "B":
            v[m - 1] = 1
        elif fam == "C":
            v[m - 1] = 2
        elif fam == "D":
            v[m - 2], v[m - 1] = 1, 1
        else:
            raise ValueError("epsilon coordinates only for classical families")
        return tuple(v)

    def coweight_from_eps(self, eps):
        """Pairing vector of a coweight given in epsilon-coordinates."""
        eps = [Fraction(x) for x in eps]
        ncoord = self.finite_rank + 1 if self.family == "A" else self.finite_rank
        if len(eps) != ncoord:
            raise ValueError("expected %d epsilon coordinates" % ncoord)
        out = []
        for i in range(1, self.finite_rank + 1):
            a = self.simple_root_eps(i)
            val = sum(e * c for e, c in zip(eps, a))
            if val.denominator != 1:
                raise ValueError("not a coweight of the adjoint lattice: %r" % (eps,))
            out.append(int(val))
        return tuple(out)

    def coweight_to_eps(self, lam):
        """epsilon-coordinates (exact Fractions) of a pairing vector."""
        m = self.finite_rank
        fam = self.family
        lam = list(lam)
        if fam == "A":
            # lambda_i - lambda_{i+1} = lam[i]; normalize min entry to 0
            v = [Fraction(0)] * (m + 1)
            for i in range(m - 1, -1, -1):
                v[i] = v[i + 1] + lam[i]
            low = min(v)
            return tuple(x - low for x in v)
        v = [Fraction(0)] * m
        if fam == "B":
            v[m - 1] = Fraction(lam[m - 1])
        elif fam == "C":
            v[m - 1] = Fraction(lam[m - 1], 2)
        elif fam == "D":
            v[m - 1] = Fraction(lam[m - 1] - lam[m - 2], 2)
            if m >= 2:
                v[m - 2] = Fraction(lam[m - 1] + lam[m - 2], 2)
        else:
            raise ValueError("epsilon coordinates only for classical families")
        start = m - 3 if fam == "D" else m - 2
        for i in range(start, -1, -1):
            v[i] = v[i + 1] + lam[i]
        return tuple(v)


@lru_cache(maxsize=None)
def build_affine_datum(family, rank):
    return RootDatum(family, rank)


# Orders of the finite irreducible Coxeter groups, used to size parabolic
# subgroups without enumerating them (needed e.g. for E7).
def _component_order(kind, size):
    import math

    if kind == "A":
        return math.factorial(size + 1)
    if kind == "BC":
        return 2**size * math.factorial(size)
    if kind == "D":
        return 2 ** (size - 1) * math.factorial(size)
    if kind == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[size]
    if kind == "F":
        return 1152
    if kind == "G":
        return 12
    raise ValueError(kind)


def parabolic_order(datum, nodes):
    """|W_J| for the standard parabolic on the given affine-node subset J.

    J must generate a finite group, i.e. be a proper subset of the nodes.
    The Coxeter diagram of J is classified component by component.
    """
    nodes = sorted(set(nodes))
    if len(nodes) > datum.finite_rank:
        raise ValueError("parabolic on all nodes is infinite")
    M = datum.coxeter_matrix()
    adj = {
        i: [j for j in nodes if j != i and M[i][j] != 2] for i in nodes
    }
    seen = set()
    total = 1
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        total *= _classify_component_order(comp, M, adj)
    return total


def _classify_component_order(comp, M, adj):
    k = len(comp)
    bonds = sorted(
        M[i][j] for a, i in enumerate(comp) for j in comp[a + 1 :] if M[i][j] > 2
    )
    degs = sorted(len(adj[i]) for i in comp)
    if 6 in bonds:
        if k != 2:
            raise ValueError("infinite diagram")
        return _component_order("G", 2)
    if bonds.count(4) > 1:
        raise ValueError("infinite diagram")
    if 4 in bonds:
        if degs and degs[-1] > 2:
            raise ValueError("infinite diagram")
        if k == 4:
            # F4 iff the 4-bond is in the middle of the path
            i, j = [
                (a, b)
                for a in comp
                for b in comp
                if a < b and M[a][b] == 4
            ][0]
            if len(adj[i]) == 2 and len(adj[j]) == 2:
                return _component_order("F", 4)
        else:
            # B/C requires the 4-bond at an end of the path
            pass
        return _component_order("BC", k)
    # simply laced
    if not degs or degs[-1] <= 2:
        return _component_order("A", k)
    if degs.count(3) > 1 or degs[-1] > 3:
        raise ValueError("infinite diagram")
    # fork: legs of the degree-3 node
    center = [i for i in comp if len(adj[i]) == 3][0]
    legs = []
    for nb in adj[center]:
        ln, prev, cur = 1, center, nb
        while True:
            ext = [x for x in adj[cur] if x != prev]
            if not ext:
                break
            prev, cur = cur, ext[0]
            ln += 1
        legs.append(ln)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return _component_order("D", k)
    if legs[0] == 1 and legs[1] == 2 and legs[2] in (2, 3, 4):
        return _component_order("E", k)
    raise ValueError("infinite diagram")


def special_vertices(datum):
    """Affine nodes v with |W_{S~ - v}| = |W_0|."""
    w0_order = parabolic_order(datum, range(1, datum.finite_rank + 1))
    out = []
    for v in datum.nodes:
        nodes = [i for i in datum.nodes if i != v]
        try:
            if parabolic_order(datum, nodes) == w0_order:
                out.append(v)
        except ValueError:
            pass
    return out
