"""Symbolic reconstruction of the explicit local-model charts.

Each case builds the full equation set from the matrix identities
(incidence in both directions, isotropy/orthogonality, weak spin where
applicable), then eliminates variables exactly as in the source
derivation: a variable is only ever solved from an equation in which it
appears as a lone monomial with coefficient +-1 or +-2 (p != 2), so
every step is an exact polynomial identity.  "Flatness" steps (an
equation known to hold on the flat closure because a unit multiple of
it does) are added explicitly and certified: both stated multiples must
reduce to zero modulo the chart relation.

pi is a formal variable.  The chart relation is always monic and linear
in pi (XY - pi, or X^2 + Xq + pi), so ideal membership is decided
exactly by substituting pi by the solved expression and testing for the
zero polynomial -- no Groebner bases anywhere.
"""

from fractions import Fraction

from .polynomial import MultiPoly


class UnsupportedCase(ValueError):
    pass


class BadParams(ValueError):
    pass


class EliminationFailed(RuntimeError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class Chart:
    """Named variables, equation list, and the formal uniformizer."""

    def __init__(self, case, params, names):
        self.case = case
        self.params = dict(params)
        self.names = list(names)
        if "pi" not in self.names:
            self.names.append("pi")
        self.index = {nm: i for i, nm in enumerate(self.names)}
        self.n = len(self.names)
        self.equations = []
        self.groups = {}

    def var(self, name):
        return MultiPoly.var(self.n, self.index[name])

    @property
    def pi(self):
        return self.var("pi")

    def const(self, c):
        return MultiPoly.const(self.n, c)

    def add(self, poly, group="main"):
        if not poly.is_zero():
            self.equations.append(poly)
            self.groups.setdefault(group, []).append(poly)

    def pretty(self, poly):
        return poly.pretty(self.names)


class NormalForm:
    """verdict: 'SemiStable', 'Smooth' or 'NotNormalCrossings'."""

    def __init__(self, verdict, m, relation, retained, substitution,
                 witness=None, components=None, notes=()):
        self.verdict = verdict
        self.m = m
        self.relation = relation
        self.retained = retained
        self.substitution = substitution
        self.witness = witness
        self.components = components
        self.notes = list(notes)

    def __repr__(self):
        if self.verdict == "SemiStable":
            return "SemiStable{m=%d}" % self.m
        if self.verdict == "Smooth":
            return "Smooth{%d}" % self.components
        return "NotNormalCrossings{%s}" % (self.witness,)


# -- elimination engine ------------------------------------------------------


def _solvable(eq, vi):
    """If eq = c*x_vi + rest with unit c and rest free of vi, return
    (c, rest); else None."""
    lone = None
    c = None
    for e, coeff in eq.terms.items():
        if e[vi]:
            if lone is not None or e[vi] != 1 or sum(e) != 1:
                return None
            lone, c = e, coeff
    if lone is None or c not in (1, -1, 2, -2, Fraction(1), Fraction(-1),
                                 Fraction(2), Fraction(-2)):
        return None
    rest = MultiPoly(eq.nvars, {e: x for e, x in eq.terms.items() if e != lone})
    return c, rest


def greedy_eliminate(chart, keep, equations=None, subs=None):
    """Repeatedly solve variables not in `keep` from equations where
    they occur as a lone unit-coefficient monomial; substitute
    everywhere.  Returns (subs, residuals)."""
    keep_idx = {chart.index[nm] for nm in keep}
    keep_idx.add(chart.index["pi"])
    eqs = list(equations if equations is not None else chart.equations)
    subs = dict(subs or {})
    progress = True
    while progress:
        progress = False
        for eq in eqs:
            if eq.is_zero():
                continue
            for vi in range(chart.n):
                if vi in keep_idx or vi in subs:
                    continue
                got = _solvable(eq, vi)
                if got is None:
                    continue
                c, rest = got
                expr = rest * Fraction(-1, 1) * Fraction(1, c) if c not in (1, -1) \
                    else rest * (-c)
                assignment = {vi: expr}
                subs = {k: v.substitute(assignment) for k, v in subs.items()}
                subs[vi] = expr
                eqs = [e.substitute(assignment) for e in eqs]
                progress = True
                break
            if progress:
                break
    residuals = [e for e in eqs if not e.is_zero()]
    return subs, residuals


def apply_subs(chart, poly, subs):
    return poly.substitute({k: v for k, v in subs.items()})


def reduce_mod(chart, poly, pi_expr):
    """Reduce modulo a relation that is monic linear in pi: pi = pi_expr."""
    return poly.substitute({chart.index["pi"]: pi_expr})


def certify(chart, subs, pi_expr, extra=()):
    """Back-substitution check: every original equation (and every
    extra certified equation) must vanish identically modulo the
    relation."""
    for eq in list(chart.equations) + list(extra):
        res = reduce_mod(chart, apply_subs(chart, eq, subs), pi_expr)
        if not res.is_zero():
            raise EliminationFailed(
                "back-substitution residual %s" % chart.pretty(res), res
            )


def _retained(chart, subs, exclude=()):
    used = set()
    for eq in chart.equations:
        for e in eq.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
    out = []
    for i in sorted(used):
        nm = chart.names[i]
        if i in subs or nm == "pi" or nm in exclude:
            continue
        out.append(nm)
    return out


# -- GL_n --------------------------------------------------------------------


def build_gl(n, r, kappa=1, include_reverse=True):
    """(GL_n, mu_r, I={0, kappa}): incidence in both directions through
    unknown transition matrices N0, Nk."""
    if not (n >= 2 and 1 <= r < n and 1 <= kappa <= r):
        raise BadParams("need n >= 2, 1 <= r < n, kappa <= r")
    names = []
    for i in range(1, n - r + 1):
        for j in range(1, r + 1):
            names.append("a0_%d_%d" % (i, j))
            names.append("ak_%d_%d" % (i, j))
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            names.append("N0_%d_%d" % (i, j))
            names.append("Nk_%d_%d" % (i, j))
    ch = Chart("gl", {"n": n, "r": r, "kappa": kappa}, names)
    zero = ch.const(0)
    one = ch.const(1)

    # F0: identity on top, a0 block below
    F0 = [[one if i == j else zero for j in range(r)] for i in range(r)]
    F0 += [[ch.var("a0_%d_%d" % (i, j)) for j in range(1, r + 1)]
           for i in range(1, n - r + 1)]
    # Fk: kappa trailing a-rows wrap to the top
    ak = [[ch.var("ak_%d_%d" % (i, j)) for j in range(1, r + 1)]
          for i in range(1, n - r + 1)]
    Fk = ak[n - r - kappa:] \
        + [[one if i == j else zero for j in range(r)] for i in range(r)] \
        + ak[:n - r - kappa]
    phi_0k = [ch.pi if i < kappa else one for i in range(n)]
    phi_k0 = [one if i < kappa else ch.pi for i in range(n)]
    N0 = [[ch.var("N0_%d_%d" % (i, j)) for j in range(1, r + 1)]
          for i in range(1, r + 1)]
    Nk = [[ch.var("Nk_%d_%d" % (i, j)) for j in range(1, r + 1)]
          for i in range(1, r + 1)]

    def incidence(phi, F_src, F_dst, N, group):
        for i in range(n):
            for j in range(r):
                lhs = phi[i] * F_src[i][j]
                rhs = zero
                for k in range(r):
                    rhs = rhs + F_dst[i][k] * N[k][j]
                ch.add(lhs - rhs, group)

    incidence(phi_0k, F0, Fk, N0, "forward")
    if include_reverse:
        incidence(phi_k0, Fk, F0, Nk, "reverse")
    return ch


def _staged_eliminate(chart, keep, transition_prefixes):
    """Solve the transition-matrix unknowns first (they are always
    determined linearly by the identity rows), then everything else."""
    stage1_keep = {nm for nm in chart.names
                   if not nm.startswith(transition_prefixes)}
    subs, eqs = greedy_eliminate(chart, keep=stage1_keep)
    return greedy_eliminate(chart, keep=keep, equations=eqs, subs=subs)


def eliminate_gl(chart):
    n, r, kappa = (chart.params[k] for k in ("n", "r", "kappa"))
    if kappa != 1:
        raise UnsupportedCase("only the two-adjacent-lattice chart (kappa=1)")
    X, Y = "a0_1_1", "ak_%d_%d" % (n - r, r)
    subs, residuals = _staged_eliminate(chart, {X, Y}, ("N0_", "Nk_"))
    return _finish_xy(chart, subs, residuals, X, Y, sign=1,
                      expected_m=(n - r) * r - 1)


def _finish_xy(chart, subs, residuals, X, Y, sign, expected_m, notes=()):
    """Common tail: the only surviving relation must be XY - sign*pi."""
    rel = chart.var(X) * chart.var(Y) - chart.pi * sign
    pi_expr = chart.var(X) * chart.var(Y) * sign
    got_rel = False
    for res in residuals:
        if any(res == rel * c for c in (1, -1, 2, -2,
                                        Fraction(1, 2), Fraction(-1, 2))):
            got_rel = True
            continue
        red = reduce_mod(chart, res, pi_expr)
        if not red.is_zero():
            raise EliminationFailed(
                "unexpected residual %s" % chart.pretty(red), red)
    if not got_rel:
        raise EliminationFailed("relation %s not derived" % chart.pretty(rel))
    certify(chart, subs, pi_expr)
    retained = _retained(chart, {k for k in subs}, exclude=(X, Y))
    m = len(retained)
    if expected_m is not None and m != expected_m:
        raise EliminationFailed("free rank %d, expected %d" % (m, expected_m))
    notes = list(notes)
    if sign == -1:
        notes.append(
            "derived relation is XY = -pi; normalized to XY = pi by X -> -X")
    return NormalForm("SemiStable", m, "X*Y - pi", [X, Y] + retained,
                      {chart.names[k]: chart.pretty(v) for k, v in subs.items()},
                      notes=notes)


def gl_reverse_incidence_is_automatic(n, r):
    """Remark-style check: imposing only the 0->1 incidence already
    forces the 1->0 incidence modulo the chart relation."""
    ch = build_gl(n, r, 1, include_reverse=True)
    X, Y = "a0_1_1", "ak_%d_%d" % (n - r, r)
    keep1 = {nm for nm in ch.names if not nm.startswith("N0_")}
    subs, eqs = greedy_eliminate(ch, keep=keep1, equations=ch.groups["forward"])
    subs, residuals = greedy_eliminate(ch, keep={X, Y}, equations=eqs, subs=subs)
    # solve the reverse transition matrix, then everything must die
    rev = [apply_subs(ch, e, subs) for e in ch.groups["reverse"]]
    keep = {nm for nm in ch.names if not nm.startswith("Nk_")}
    subs2, residuals2 = greedy_eliminate(ch, keep=keep, equations=rev, subs=subs)
    pi_expr = ch.var(X) * ch.var(Y)
    for res in residuals + residuals2:
        red = reduce_mod(ch, res, pi_expr)
        rel = ch.var(X) * ch.var(Y) - ch.pi
        if not red.is_zero() and res != rel and res != -rel:
            return False
    return True


# -- GSp_{2n} ----------------------------------------------------------------


def build_gsp(n):
    """(GSp_{2n}, mu_n, {0,1}): Lagrangian F0 (c-matrix, symmetric
    constraint), F1 (a-matrix), one incidence through unknown N."""
    if n < 2:
        raise BadParams("n >= 2")
    names = ["a_%d_%d" % (i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    names += ["c_%d_%d" % (i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    names += ["N_%d_%d" % (i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    ch = Chart("gsp", {"n": n}, names)
    zero, one = ch.const(0), ch.const(1)
    a = lambda i, j: ch.var("a_%d_%d" % (i, j))
    c = lambda i, j: ch.var("c_%d_%d" % (i, j))
    # isotropy of F0
    for mu in range(1, n + 1):
        for nu in range(1, n + 1):
            ch.add(c(mu, nu) - c(n - nu + 1, n - mu + 1), "symmetry")
    F0 = [[one if i == j else zero for j in range(n)] for i in range(n)]
    F0 += [[c(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    F1 = [[a(n, j) for j in range(1, n + 1)]]
    F1 += [[one if i == j else zero for j in range(n)] for i in range(n)]
    F1 += [[a(i, j) for j in range(1, n + 1)] for i in range(1, n - 1 + 1)][:n - 1]
    phi = [ch.pi] + [one] * (2 * n - 1)
    N = [[ch.var("N_%d_%d" % (i, j)) for j in range(1, n + 1)]
         for i in range(1, n + 1)]
    for i in range(2 * n):
        for j in range(n):
            lhs = phi[i] * F0[i][j]
            rhs = zero
            for k in range(n):
                rhs = rhs + F1[i][k] * N[k][j]
            ch.add(lhs - rhs, "incidence")
    return ch


def eliminate_gsp(chart):
    n = chart.params["n"]
    X, Y = "a_%d_%d" % (n, n), "c_1_1"
    subs, residuals = _staged_eliminate(chart, {X, Y}, ("N_",))
    return _finish_xy(chart, subs, residuals, X, Y, sign=1, expected_m=None)


# -- split GO_{2n}, r = n ----------------------------------------------------


def _det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    out = None
    for j in range(n):
        if mat[0][j].is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in mat[1:]]
        term = mat[0][j] * _det(minor)
        if j % 2:
            term = -term
        out = term if out is None else out + term
    return out if out is not None else mat[0][0] * 0


def build_go_split(n):
    """(split GO_{2n}, mu_n, {1}): orthogonality folded in via
    b_{mu nu} = -a_{n-nu+1, n-mu+1}, weak spin as the two n x n minors,
    one incidence through unknown N."""
    if n < 3:
        raise BadParams("n >= 3")
    names = ["a_%d_%d" % (i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    names += ["N_%d_%d" % (i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    ch = Chart("go_split", {"n": n}, names)
    zero, one = ch.const(0), ch.const(1)
    a = lambda i, j: ch.var("a_%d_%d" % (i, j))
    b = lambda i, j: -a(n - j + 1, n - i + 1)
    # F1, rows: a_n; identity; a_1 .. a_{n-1}
    F1 = [[a(n, j) for j in range(1, n + 1)]]
    F1 += [[one if i == j else zero for j in range(n)] for i in range(n)]
    F1 += [[a(i, j) for j in range(1, n + 1)] for i in range(1, n)]
    # weak spin: minors on rows {1..n} and {2..n-1, n+1, 2n}
    ch.add(_det([F1[i] for i in range(n)]), "weakspin")
    rows = list(range(1, n - 1)) + [n, 2 * n - 1]
    ch.add(_det([F1[i] for i in rows]), "weakspin")
    # F_{2n-1}, rows: shifted identity; b-block; e_1
    F2 = [[one if j == i + 1 else zero for j in range(n)] for i in range(n - 1)]
    F2 += [[b(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    F2 += [[one] + [zero] * (n - 1)]
    phi = [ch.pi] + [one] * (2 * n - 2) + [ch.pi]
    N = [[ch.var("N_%d_%d" % (i, j)) for j in range(1, n + 1)]
         for i in range(1, n + 1)]
    for i in range(2 * n):
        for j in range(n):
            lhs = phi[i] * F2[i][j]
            rhs = zero
            for k in range(n):
                rhs = rhs + F1[i][k] * N[k][j]
            ch.add(lhs - rhs, "incidence")
    return ch


def eliminate_go_split(chart):
    n = chart.params["n"]
    X, Y = "a_%d_%d" % (n - 1, n), "a_%d_%d" % (n, n - 1)
    subs, residuals = _staged_eliminate(chart, {X, Y}, ("N_",))
    return _finish_xy(chart, subs, residuals, X, Y, sign=-1,
                      expected_m=n * (n - 1) // 2 - 1)


# -- split SO_{2n} and SO_{2n+1}, r = 1 --------------------------------------


def build_so_even_split(n):
    """(split SO_{2n}, mu_1, {0,n}): lines F_0, F_n; incidence both
    directions, isotropy both."""
    if n < 2:
        raise BadParams("n >= 2")
    names = ["a%d" % i for i in range(1, 2 * n)] + ["b%d" % i for i in range(1, 2 * n)]
    ch = Chart("so_even_split_r1", {"n": n}, names)
    one = ch.const(1)
    a = lambda i: ch.var("a%d" % i)
    b = lambda i: ch.var("b%d" % i)
    lhs1 = [ch.pi] + [ch.pi * a(i) for i in range(1, n)] + \
        [a(i) for i in range(n, 2 * n)]
    rhs1 = [b(i) for i in range(n, 2 * n)] + [one] + [b(i) for i in range(1, n)]
    for l, r in zip(lhs1, rhs1):
        ch.add(l - r * a(n), "incidence0n")
    lhs2 = [b(i) for i in range(n, 2 * n)] + [ch.pi] + \
        [ch.pi * b(i) for i in range(1, n)]
    rhs2 = [one] + [a(i) for i in range(1, 2 * n)]
    for l, r in zip(lhs2, rhs2):
        ch.add(l - r * b(n), "incidencen0")
    iso_a = a(2 * n - 1)
    iso_b = b(2 * n - 1)
    for i in range(1, n):
        iso_a = iso_a + a(i) * a(2 * n - 1 - i)
        iso_b = iso_b + b(i) * b(2 * n - 1 - i)
    ch.add(iso_a, "isotropy")
    ch.add(iso_b, "isotropy")
    return ch


def eliminate_so_even_split(chart):
    n = chart.params["n"]
    return _eliminate_so_common(
        chart, X="a%d" % n, Y="b%d" % n, expected_m=2 * n - 3)


def build_so_odd_split(n):
    """(split SO_{2n+1}, mu_1, {0,n})."""
    if n < 2:
        raise BadParams("n >= 2")
    names = ["a%d" % i for i in range(1, 2 * n + 1)] + \
        ["b%d" % i for i in range(1, 2 * n + 1)]
    ch = Chart("so_odd_split_r1", {"n": n}, names)
    one = ch.const(1)
    a = lambda i: ch.var("a%d" % i)
    b = lambda i: ch.var("b%d" % i)
    lhs1 = [ch.pi] + [ch.pi * a(i) for i in range(1, n)] + \
        [a(i) for i in range(n, 2 * n + 1)]
    rhs1 = [b(i) for i in range(1, n + 1)] + [one] + \
        [b(i) for i in range(n + 1, 2 * n + 1)]
    for l, r in zip(lhs1, rhs1):
        ch.add(l - r * a(n), "incidence0n")
    lhs2 = [b(i) for i in range(1, n + 1)] + [ch.pi] + \
        [ch.pi * b(i) for i in range(n + 1, 2 * n + 1)]
    rhs2 = [one] + [a(i) for i in range(1, 2 * n + 1)]
    for l, r in zip(lhs2, rhs2):
        ch.add(l - r * b(1), "incidencen0")
    # (v, v) with the middle basis vector paired to itself
    iso_a = a(n) * a(n)
    for i in range(0, n):
        ai = one if i == 0 else a(i)
        iso_a = iso_a + (ai * a(2 * n - i)) * 2
    iso_b = ch.pi
    for i in range(1, n + 1):
        iso_b = iso_b + (b(i) * b(2 * n + 1 - i)) * 2
    ch.add(iso_a, "isotropy")
    ch.add(iso_b, "isotropy")
    return ch


def eliminate_so_odd_split(chart):
    n = chart.params["n"]
    return _eliminate_so_common(
        chart, X="a%d" % n, Y="b1", expected_m=2 * n - 2)


def _eliminate_so_common(chart, X, Y, expected_m):
    """Shared tail for the r=1 orthogonal charts: greedy elimination,
    then the flatness step — both isotropy residuals must factor as
    X*(f) and Y*(f) with the same f modulo the relation, f is added as
    a certified equation, and elimination resumes."""
    subs, residuals = greedy_eliminate(chart, keep={X, Y})
    pi_expr = chart.var(X) * chart.var(Y)
    rel = chart.var(X) * chart.var(Y) - chart.pi
    hard = []
    for res in residuals:
        red = reduce_mod(chart, res, pi_expr)
        if not red.is_zero():
            hard.append(red)
    # flatness: each survivor must be a unit-variable multiple of one f
    fs = []
    for res in hard:
        for u in (X, Y):
            q = res.divexact_linear(chart.var(u))
            if q is not None:
                fs.append((u, q))
                break
        else:
            raise EliminationFailed(
                "residual is not a unit multiple: %s" % chart.pretty(res), res)
    if len(fs) != 2 or fs[0][0] == fs[1][0]:
        raise EliminationFailed("expected one X-multiple and one Y-multiple")
    f = fs[0][1]
    if not reduce_mod(chart, f - fs[1][1], pi_expr).is_zero():
        raise EliminationFailed("flatness cofactors disagree")
    # certificate for the derived equation: both multiples vanish mod rel
    for u, q in fs:
        if not reduce_mod(chart, chart.var(u) * f - chart.var(u) * q,
                          pi_expr).is_zero():
            raise EliminationFailed("flatness certificate failed")
    subs2, residuals2 = greedy_eliminate(
        chart, keep={X, Y}, equations=[f] + residuals, subs=subs)
    out = _finish_xy(chart, subs2, residuals2, X, Y, sign=1,
                     expected_m=expected_m)
    certify(chart, subs2, pi_expr, extra=[f])
    return out


# -- nonsplit SO_{2n}, r = 1 -------------------------------------------------


def build_so_even_nonsplit(n):
    """(nonsplit SO_{2n}, mu_1, {0,n}) in the affine chart x_n = 1,
    y_{n+1} = 1, with linkage scalars lam, mu."""
    if n < 2:
        raise BadParams("n >= 2")
    names = ["x%d" % i for i in range(1, 2 * n + 1) if i != n]
    names += ["y%d" % i for i in range(1, 2 * n + 1) if i != n + 1]
    names += ["lam", "mu"]
    ch = Chart("so_even_nonsplit_r1", {"n": n}, names)
    one = ch.const(1)
    x = lambda i: one if i == n else ch.var("x%d" % i)
    y = lambda i: one if i == n + 1 else ch.var("y%d" % i)
    lam, mu = ch.var("lam"), ch.var("mu")
    for i in range(1, n + 1):
        ch.add(ch.pi * x(i) - lam * y(i), "linkage")
        ch.add(y(i) - mu * x(i), "linkage")
    for i in range(n + 1, 2 * n + 1):
        ch.add(x(i) - lam * y(i), "linkage")
        ch.add(ch.pi * y(i) - mu * x(i), "linkage")
    iso_x = ch.pi * (x(n) * x(n)) + x(n + 1) * x(n + 1)
    iso_y = y(n) * y(n) + ch.pi * (y(n + 1) * y(n + 1))
    for i in range(1, n):
        iso_x = iso_x + x(i) * x(2 * n + 1 - i)
        iso_y = iso_y + y(i) * y(2 * n + 1 - i)
    ch.add(iso_x, "isotropy")
    ch.add(iso_y, "isotropy")
    return ch


def eliminate_so_even_nonsplit(chart):
    n = chart.params["n"]
    X = "x%d" % (n + 1)
    keep = {X, "y%d" % n} | {"x%d" % i for i in range(1, n)} \
        | {"y%d" % i for i in range(n + 2, 2 * n + 1)}
    subs, residuals = greedy_eliminate(chart, keep=keep)
    Xv = chart.var(X)
    yn = chart.var("y%d" % n)
    pi_expr = Xv * yn  # lam*mu = pi with lam = x_{n+1}, mu = y_n
    # flatness equation g = sum x_i y_{2n+1-i}; certified via the two
    # isotropy residuals (lam*g and mu*g modulo the relation)
    g = yn + Xv
    for i in range(1, n):
        g = g + chart.var("x%d" % i) * chart.var("y%d" % (2 * n + 1 - i))
    hard = [reduce_mod(chart, r, pi_expr) for r in residuals]
    hard = [r for r in hard if not r.is_zero()]
    for res, u in zip(hard, (Xv, yn)):
        if not reduce_mod(chart, res - u * g, pi_expr).is_zero():
            raise EliminationFailed(
                "flatness certificate failed: %s" % chart.pretty(res), res)
    # solve y_n from g; the relation becomes X^2 + X*q + pi = 0
    subs2, residuals2 = greedy_eliminate(
        chart, keep=keep - {"y%d" % n}, equations=[g] + residuals, subs=subs)
    q = chart.const(0)
    for i in range(1, n):
        q = q + chart.var("x%d" % i) * chart.var("y%d" % (2 * n + 1 - i))
    relation = Xv * Xv + Xv * q + chart.pi
    pi_final = -(Xv * Xv) - Xv * q
    for res in residuals2:
        if not reduce_mod(chart, res, pi_final).is_zero():
            raise EliminationFailed(
                "unexpected residual %s" % chart.pretty(res), res)
    certify(chart, subs2, pi_final, extra=[g])
    retained = _retained(chart, set(subs2), exclude=(X,))
    return NormalForm(
        "NotNormalCrossings",
        len(retained),
        chart.pretty(relation),
        [X] + retained,
        {chart.names[k]: chart.pretty(v) for k, v in subs2.items()},
        witness="component intersection %s = 0 is a singular quadric"
        % chart.pretty(q),
        notes=["special fiber components X = 0 and X + (%s) = 0 meet in a "
               "quadric cone, singular at the origin" % chart.pretty(q)],
    )


# -- exotic nonsplit SO_{2n}, r = n ------------------------------------------


def build_so_exotic(n):
    """(nonsplit SO_{2n}, mu_n, {0}) over O_E = O[w]/(w^2 - pi):
    a_{1n}^2 = pi and a_{n+1-i,j} + a_{n+1-j,i} + a_{1i}a_{1j} = 0."""
    if n < 2:
        raise BadParams("n >= 2")
    names = ["a_%d_%d" % (i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    names.append("w")
    ch = Chart("so_exotic", {"n": n}, names)
    a = lambda i, j: ch.var("a_%d_%d" % (i, j))
    w = ch.var("w")
    ch.add(a(1, n) * a(1, n) - ch.pi, "square")
    ch.add(w * w - ch.pi, "square")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == n and j == n:
                continue
            ch.add(a(n + 1 - i, j) + a(n + 1 - j, i) + a(1, i) * a(1, j),
                   "orthogonality")
    return ch


def eliminate_so_exotic(chart):
    n = chart.params["n"]
    keep = {"a_%d_%d" % (i, j) for i in range(1, n + 1)
            for j in range(1, n + 1) if i + j <= n}
    keep.add("w")
    comps = []
    for sign in (1, -1):
        a1n = chart.index["a_1_%d" % n]
        seed = {a1n: chart.var("w") * sign}
        eqs = [e.substitute({a1n: seed[a1n]}) for e in chart.equations]
        # pi = w^2 throughout
        eqs = [e.substitute({chart.index["pi"]: chart.var("w") * chart.var("w")})
               for e in eqs]
        subs, residuals = greedy_eliminate(chart, keep=keep, equations=eqs,
                                           subs=seed)
        if residuals:
            raise EliminationFailed(
                "exotic chart not affine: %s" % chart.pretty(residuals[0]),
                residuals[0])
        comps.append(subs)
    # the two components differ exactly by w -> -w
    flip = {chart.index["w"]: -chart.var("w")}
    for k, v in comps[0].items():
        other = comps[1].get(k)
        if other is None or other != v.substitute(flip):
            raise EliminationFailed("components are not w -> -w mirrors")
    retained = sorted(keep - {"w"})
    if len(retained) != n * (n - 1) // 2:
        raise EliminationFailed("unexpected free rank %d" % len(retained))
    return NormalForm(
        "Smooth", len(retained), "w^2 - pi", retained,
        {chart.names[k]: chart.pretty(v) for k, v in comps[0].items()},
        components=2,
        notes=["each component is affine space over O_E in the a_{ij} "
               "with i + j <= n; the components are swapped by w -> -w"],
    )


# -- dispatcher and the semi-stability table ---------------------------------


_CASES = {
    "gl": (build_gl, eliminate_gl),
    "gsp": (build_gsp, eliminate_gsp),
    "go-split": (build_go_split, eliminate_go_split),
    "so-even-split-r1": (build_so_even_split, eliminate_so_even_split),
    "so-odd-split-r1": (build_so_odd_split, eliminate_so_odd_split),
    "so-even-nonsplit-r1": (build_so_even_nonsplit, eliminate_so_even_nonsplit),
    "so-exotic": (build_so_exotic, eliminate_so_exotic),
}


def build_chart(case, **params):
    if case not in _CASES:
        raise UnsupportedCase("unknown case %r" % (case,))
    return _CASES[case][0](**params)


def eliminate(chart):
    return _CASES[chart.case if chart.case in _CASES else
                  chart.case.replace("_", "-")][1](chart)


def run_case(case, **params):
    builder, elim = _CASES[case]
    return elim(builder(**params))


def classify_semistable_table(max_n):
    """Run every table row at each admissible n <= max_n, plus the
    negative/positive controls (nonsplit r=1; exotic)."""
    if max_n < 4:
        raise BadParams("max_n >= 4")
    report = []

    def row(case, expect, **params):
        nf = run_case(case, **params)
        ok = nf.verdict == expect
        report.append({"case": case, "params": params,
                       "verdict": nf.verdict, "m": nf.m, "ok": ok,
                       "relation": nf.relation})
        if not ok:
            raise EliminationFailed(
                "%s %r: got %s, expected %s" % (case, params, nf.verdict, expect))
        return nf

    for n in range(2, max_n + 1):
        for r in range(1, n):
            nf = row("gl", "SemiStable", n=n, r=r)
            assert nf.m == (n - r) * r - 1
    for n in range(2, max_n + 1):
        row("gsp", "SemiStable", n=n)
    for n in range(3, max_n + 1):
        nf = row("go-split", "SemiStable", n=n)
        assert nf.m == n * (n - 1) // 2 - 1
    for n in range(2, max_n + 1):
        nf = row("so-even-split-r1", "SemiStable", n=n)
        assert nf.m == 2 * n - 3
    for n in range(2, max_n + 1):
        nf = row("so-odd-split-r1", "SemiStable", n=n)
        assert nf.m == 2 * n - 2
    for n in range(2, max_n + 1):
        row("so-even-nonsplit-r1", "NotNormalCrossings", n=n)
    for n in range(2, max_n + 1):
        nf = row("so-exotic", "Smooth", n=n)
        assert nf.components == 2
    return report
