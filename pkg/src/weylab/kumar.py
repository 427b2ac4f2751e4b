"""Kumar-style singularity test for Schubert varieties.

The functional e_x X(w) is the sum over all subexpressions of a reduced
word of w multiplying to x of the products prod_j (s_1...s_j(alpha_j))^{-1}.
If e_1 X(w) differs from prod alpha^{-1} over the reflections below w,
the Schubert variety of w is singular.  Everything is exact: affine
roots become degree-one polynomials in the simple affine roots
(delta = sum of the marks, never a separate variable).

Finite root data are handled through the translation-free elements of
the affine group: lengths, Bruhat order and root actions restrict
correctly, and the reflections below a finite element are automatically
the finite ones.
"""

from fractions import Fraction

from .polynomial import MultiPoly, RatFunc
from .rootdata import AffineRoot
from .weyl import WeylElt


class NotReduced(ValueError):
    pass


class XNotBelowW(ValueError):
    pass


def linear_form(datum, ar):
    """An affine root a + k*delta as a degree-one MultiPoly in alpha_0..alpha_m."""
    m = datum.finite_rank
    coeffs = [ar.level] + [
        c + ar.level * t for c, t in zip(ar.coords, datum.highest_root)
    ]
    return MultiPoly.linear(coeffs)


def _norm2(datum, coords):
    """Squared length of a finite root, normalized so long roots have 2."""
    eps = [0] * (datum.finite_rank + (1 if datum.family == "A" else 0))
    for i, c in enumerate(coords):
        if c:
            a = datum.simple_root_eps(i + 1)
            eps = [e + c * x for e, x in zip(eps, a)]
    return sum(x * x for x in eps)


def _coroot_expansion(datum, coords):
    """Coefficients of a^vee in the simple coroots."""
    c = tuple(coords)
    if c in datum.coroot_coords:
        return datum.coroot_coords[c]
    return tuple(-x for x in datum.coroot_coords[tuple(-x for x in c)])


def dual_linear_form(datum, ar):
    """The affine root on the coroot side: (a + k*delta)^vee.

    The transposed affine Cartan matrix is the one of the relevant
    twisted group here (same Coxeter group, arrows reversed); its
    simple roots are the coroots of the untwisted datum, its null root
    has the dual marks, and (a + k*delta)^vee = a^vee + (2k/|a|^2) *
    delta^vee.  Only classical families are needed.
    """
    m = datum.finite_rank
    dual_marks = (1,) + _coroot_expansion(datum, datum.highest_root)
    mult = ar.level * 2 // _norm2(datum, ar.coords)
    av = _coroot_expansion(datum, ar.coords)
    coeffs = [mult] + [c + mult * t for c, t in zip(av, dual_marks[1:])]
    return MultiPoly.linear(coeffs)


def _check_reduced(W, word, tau, w=None):
    elt = W.from_word(word, tau)
    if W.length(elt) != len(word):
        raise NotReduced("word %r is not reduced" % (word,))
    if w is not None and elt != w:
        raise NotReduced("word %r is not a word for the given element" % (word,))
    return elt


def e_functional(ecd_or_W, x, w, word=None, dual=False):
    """e_x X(w) as an exact RatFunc.

    Subexpression dynamic programming: states are (position, prefix
    product); each letter splits a prefix y into y (factor y(alpha)^{-1})
    and y*s (factor -y(alpha)^{-1}).  A state is pruned when x is no
    longer reachable with the remaining letters.
    """
    W = ecd_or_W.group if hasattr(ecd_or_W, "group") else ecd_or_W
    d = W.datum
    nvars = d.finite_rank + 1
    if word is None:
        tau, word = W.reduced_word_tau(w)
    else:
        tau, _ = W.reduced_word_tau(w)
        _check_reduced(W, word, tau, w)
    # the length-zero part contributes no letters; x lives in the
    # subexpression product, which is translation-untwisted by tau
    if not W.bruhat_leq(x, W.from_word(word)):
        raise XNotBelowW("x is not below w")
    form = dual_linear_form if dual else linear_form
    states = {W.identity: RatFunc.one(nvars)}
    l = len(word)
    for j, i in enumerate(word):
        alpha = d.affine_simple_root(i)
        s = W.simple(i)
        remaining = l - j - 1
        new = {}
        for y, val in states.items():
            inv = RatFunc.inverse_form(form(d, W.act_aroot(y, alpha)))
            for ynew, term in ((y, val * inv), (W.mul(y, s), -(val * inv))):
                if W.length(W.mul(W.inv(ynew), x)) > remaining:
                    continue
                if ynew in new:
                    new[ynew] = new[ynew] + term
                else:
                    new[ynew] = term
        states = new
    return states.get(x, RatFunc.zero(nvars))


def reflection(W, ar):
    """s_{a + k*delta} = t^{-k a^vee} s_a as a group element."""
    d = W.datum
    m = d.finite_rank
    a = ar.coords
    av = d.coroot_of(a)
    rmat = tuple(
        tuple((1 if r == j else 0) - av[j] * a[r] for j in range(m))
        for r in range(m)
    )
    s_fin = WeylElt((0,) * m, rmat, rmat)
    return W.mul(W.translation(tuple(-ar.level * c for c in av)), s_fin)


def reflections_below(W, w):
    """Positive affine roots alpha with s_alpha <= w in Bruhat order."""
    L = W.length(w)
    d = W.datum
    out = []
    roots = [(c, 1) for c in d.positive_roots] + [
        (tuple(-x for x in c), -1) for c in d.positive_roots
    ]
    for coords, sign in roots:
        k = 0 if sign > 0 else 1
        while True:
            ar = AffineRoot(coords, k)
            s = reflection(W, ar)
            if W.length(s) > L:
                if k >= 1:
                    break
            elif W.bruhat_leq(s, w):
                out.append(ar)
            k += 1
    return out


def smoothness_product(W, w, dual=False):
    """prod alpha^{-1} over the reflections below w."""
    d = W.datum
    nvars = d.finite_rank + 1
    form = dual_linear_form if dual else linear_form
    out = RatFunc.one(nvars)
    for ar in reflections_below(W, w):
        out = out * RatFunc.inverse_form(form(d, ar))
    return out


def kumar_test(ecd_or_W, w, word=None, dual=False):
    """'Singular' if e_1 X(w) != prod alpha^{-1}, else 'CriterionHolds'.

    Equality means smoothness in characteristic zero; no claim is made
    in positive characteristic.  A length-zero part of w is dropped for
    the comparison (it translates the variety isomorphically).
    """
    W = ecd_or_W.group if hasattr(ecd_or_W, "group") else ecd_or_W
    if word is None:
        tau, word = W.reduced_word_tau(w)
    else:
        _check_reduced(W, word, W.reduced_word_tau(w)[0], w)
    wa = W.from_word(word)
    e1 = e_functional(W, W.identity, wa, word, dual=dual)
    prod = smoothness_product(W, wa, dual=dual)
    return "Singular" if e1 != prod else "CriterionHolds"


# -- the three worked cases ------------------------------------------------


def _coset_max(ecd, lam_eps):
    """max(W_K t^{lambda'} W_K) for lambda' given in epsilon coordinates."""
    W = ecd.group
    lam = ecd.datum.coweight_from_eps(lam_eps)
    return W.double_coset_max(W.translation(lam), ecd.wk_generators)


def case_element(case, n):
    """(group, w, dual) for the worked singular cases.

    '1b': odd unitary shape, (C~n, marked {n}), the coset max of the
          translation by (1,...,1,0);
    '2b': even unitary shape on the B~n Coxeter diagram with the
          arrow at the double bond reversed (dual=True: the pairings
          are the transposed ones), marked {0,n}, the coset max of
          the translation by (0,...,0,-1);
    '3b': the finite type-B_n signed permutation sending
          1 -> -2, 2 -> -3, ..., n-1 -> -n, n -> -1 (the finite
          reduction of the even-orthogonal maximal case).

    The dual flag matters: for '2b' the same element in the untwisted
    split odd-orthogonal group satisfies the criterion; only the
    arrow-reversed group is singular.
    """
    from .admissible import make_ecd

    if case == "1b":
        ecd = make_ecd("C", n, _pairing("C", n, (1,) * (n - 1) + (0,)), {n})
        return ecd.group, _coset_max(ecd, (1,) * (n - 1) + (0,)), False
    if case == "2b":
        # the dominant representative is omega^vee_1; the relevant
        # W_K-component is the one through (0,...,0,-1)
        ecd = make_ecd("B", n, _pairing("B", n, (1,) + (0,) * (n - 1)), {0, n})
        return ecd.group, _coset_max(ecd, (0,) * (n - 1) + (-1,)), True
    if case == "3b":
        from .admissible import group_of
        from .rootdata import build_affine_datum

        W = group_of(build_affine_datum("B", n))
        images = [-(i + 2) for i in range(n - 1)] + [-1]
        return W, signed_permutation(W, images), False
    raise ValueError("unknown case %r" % (case,))


def _pairing(family, rank, eps):
    from .rootdata import build_affine_datum

    return build_affine_datum(family, rank).coweight_from_eps(eps)


def signed_permutation(W, images):
    """The finite type-B/C element with w(eps_i) = sign * eps_|images[i-1]|."""
    d = W.datum
    m = d.finite_rank
    assert sorted(abs(x) for x in images) == list(range(1, m + 1))
    # matrix in epsilon coordinates, then conjugate into root coordinates
    Meps = [[0] * m for _ in range(m)]
    for i, img in enumerate(images):
        Meps[abs(img) - 1][i] = 1 if img > 0 else -1
    R = [[Fraction(d.simple_root_eps(j + 1)[r]) for j in range(m)] for r in range(m)]
    from .weyl import _fraction_inverse

    Rinv = _fraction_inverse(R)
    def matmul(a, b):
        return [
            [sum(a[i][k] * b[k][j] for k in range(m)) for j in range(m)]
            for i in range(m)
        ]

    prod = matmul(Rinv, matmul(Meps, R))
    rmat = tuple(tuple(int(x) for x in row) for row in prod)
    Minv = [[Meps[j][i] for j in range(m)] for i in range(m)]
    prod = matmul(Rinv, matmul(Minv, R))
    rinv = tuple(tuple(int(x) for x in row) for row in prod)
    return WeylElt((0,) * m, rmat, rinv)
