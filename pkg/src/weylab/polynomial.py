"""Exact sparse multivariate polynomials and factored rational functions.

MultiPoly is a dict {exponent tuple: coefficient} with integer or
Fraction coefficients.  RatFunc keeps its denominator factored into
degree-one forms (the shape produced by the nil-Hecke style functionals),
which makes products and the final cross-multiplied equality test cheap.
"""

from fractions import Fraction


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c} if c else None)

    @classmethod
    def var(cls, nvars, i, c=1):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): c})

    @classmethod
    def linear(cls, coeffs, const=0):
        """Degree-one form sum(coeffs[i] * x_i) + const."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        if const:
            terms[(0,) * n] = const
        return cls(n, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.nvars, out)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly(self.nvars)
            return MultiPoly(
                self.nvars, {e: c * other for e, c in self.terms.items()}
            )
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def key(self):
        """Canonical hashable form."""
        return tuple(sorted(self.terms.items()))

    def substitute(self, assignment):
        """Replace variable i by the MultiPoly assignment[i] (None keeps
        the variable).  Exact; used for chart eliminations."""
        n = self.nvars
        out = MultiPoly.const(n, 0)
        base = [
            assignment.get(i) if isinstance(assignment, dict) else assignment[i]
            for i in range(n)
        ]
        for e, c in self.terms.items():
            term = MultiPoly.const(n, c)
            for i, k in enumerate(e):
                if not k:
                    continue
                f = base[i] if base[i] is not None else MultiPoly.var(n, i)
                for _ in range(k):
                    term = term * f
            out = out + term
        return out

    def divexact_linear(self, form):
        """Exact division by a degree-one form; None if not divisible.

        Eliminates the lead variable of the form by long division along
        its exponent; works for the inverse-root cancellations.
        """
        lead = max(form.terms)  # graded position order on exponents
        lc = form.terms[lead]
        rest = MultiPoly(form.nvars, {e: c for e, c in form.terms.items() if e != lead})
        rem = MultiPoly(self.nvars, dict(self.terms))
        q = {}
        while rem.terms:
            e = max(rem.terms)
            if any(a < b for a, b in zip(e, lead)):
                return None
            new_e = tuple(a - b for a, b in zip(e, lead))
            c = rem.terms[e]
            if isinstance(c, int) and isinstance(lc, int):
                if c % lc:
                    return None
                c //= lc
            else:
                c = Fraction(c, lc) if not isinstance(c, Fraction) else c / lc
            q[new_e] = c
            rem = rem - MultiPoly(self.nvars, {new_e: c}) * form
        return MultiPoly(self.nvars, q)

    def pretty(self, names):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append("%s^%d" % (names[i], k))
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (c, body))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return self.pretty(["x%d" % i for i in range(self.nvars)])


def _normalize_linear(form):
    """(sign, canonical form) with the leading coefficient positive."""
    lead = max(form.terms)
    if form.terms[lead] < 0:
        return -1, -form
    return 1, form


class RatFunc:
    """num / prod(forms[k]^e) with degree-one denominator factors."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        # den: dict {canonical linear form key: (MultiPoly, exponent)}
        self.num = num
        self.den = dict(den) if den else {}
        self._cancel()

    @classmethod
    def zero(cls, nvars):
        return cls(MultiPoly.const(nvars, 0))

    @classmethod
    def one(cls, nvars):
        return cls(MultiPoly.const(nvars, 1))

    @classmethod
    def inverse_form(cls, form):
        """1/form for a degree-one form."""
        sign, canon = _normalize_linear(form)
        num = MultiPoly.const(form.nvars, sign)
        return cls(num, {canon.key(): (canon, 1)})

    def _cancel(self):
        if self.num.is_zero():
            self.den = {}
            return
        for k in list(self.den):
            form, e = self.den[k]
            while e > 0:
                q = self.num.divexact_linear(form)
                if q is None:
                    break
                self.num = q
                e -= 1
            if e:
                self.den[k] = (form, e)
            else:
                del self.den[k]

    def __mul__(self, other):
        den = dict(self.den)
        for k, (f, e) in other.den.items():
            if k in den:
                den[k] = (f, den[k][1] + e)
            else:
                den[k] = (f, e)
        return RatFunc(self.num * other.num, den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        den = {}
        for k, (f, e) in self.den.items():
            den[k] = (f, e)
        for k, (f, e) in other.den.items():
            den[k] = (f, max(e, den[k][1] if k in den else 0))
        a = self.num
        for k, (f, e) in den.items():
            need = e - (self.den[k][1] if k in self.den else 0)
            for _ in range(need):
                a = a * f
        b = other.num
        for k, (f, e) in den.items():
            need = e - (other.den[k][1] if k in other.den else 0)
            for _ in range(need):
                b = b * f
        return RatFunc(a + b, den)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        # cross multiplication
        a = self.num
        for k, (f, e) in other.den.items():
            for _ in range(e):
                a = a * f
        b = other.num
        for k, (f, e) in self.den.items():
            for _ in range(e):
                b = b * f
        return a == b

    def __hash__(self):
        raise TypeError("RatFunc is unhashable")

    def pretty(self, names):
        if not self.den:
            return self.num.pretty(names)
        dens = []
        for f, e in sorted(self.den.values(), key=lambda t: t[0].key()):
            s = "(%s)" % f.pretty(names)
            dens.append(s if e == 1 else "%s^%d" % (s, e))
        return "(%s) / (%s)" % (self.num.pretty(names), "".join(dens))

    def __repr__(self):
        return self.pretty(["x%d" % i for i in range(self.num.nvars)])
