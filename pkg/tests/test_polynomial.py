from fractions import Fraction

from hypothesis import given, settings, strategies as st

from weylab.polynomial import MultiPoly, RatFunc

NVARS = 3

exponents = st.tuples(*(st.integers(0, 3) for _ in range(NVARS)))
coeffs = st.integers(-9, 9)
polys = st.dictionaries(exponents, coeffs, max_size=5).map(
    lambda d: MultiPoly(NVARS, d))
linear_forms = st.tuples(
    st.lists(st.integers(-4, 4), min_size=NVARS, max_size=NVARS),
    st.integers(-4, 4),
).filter(lambda t: any(t[0])).map(lambda t: MultiPoly.linear(t[0], t[1]))
points = st.tuples(*(st.integers(-3, 3) for _ in range(NVARS)))


def evaluate(p, point):
    total = 0
    for e, c in p.terms.items():
        v = c
        for x, k in zip(point, e):
            v *= x ** k
        total += v
    return total


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert a + MultiPoly.const(NVARS, 0) == a
    assert a * MultiPoly.const(NVARS, 1) == a


@given(polys, polys, points)
def test_arithmetic_matches_evaluation(a, b, point):
    assert evaluate(a * b, point) == evaluate(a, point) * evaluate(b, point)
    assert evaluate(a + b, point) == evaluate(a, point) + evaluate(b, point)


@given(polys, polys, points)
def test_substitute_is_evaluation_homomorphism(a, b, point):
    # replace x0 by b, then evaluate: same as evaluating a at (b(pt), ...)
    image = a.substitute({0: b})
    shifted = (evaluate(b, point),) + point[1:]
    assert evaluate(image, point) == evaluate(a, shifted)


@given(polys, linear_forms)
def test_divexact_linear_roundtrip(a, form):
    prod = a * form
    q = prod.divexact_linear(form)
    assert q is not None
    assert q == a


@given(linear_forms)
def test_inverse_form(form):
    one = RatFunc.one(NVARS)
    inv = RatFunc.inverse_form(form)
    assert inv * RatFunc(form) == one


@settings(max_examples=50)
@given(polys, linear_forms, linear_forms)
def test_ratfunc_field_identities(a, f, g):
    x = RatFunc(a) * RatFunc.inverse_form(f)
    y = RatFunc(MultiPoly.const(NVARS, 2)) * RatFunc.inverse_form(g)
    assert (x + y) - y == x
    assert x + y == y + x
    assert -(-x) == x
    assert (x * y) * RatFunc(f) == (y * RatFunc(f)) * x


def test_divexact_rejects_nondivisible():
    x0 = MultiPoly.var(NVARS, 0)
    x1 = MultiPoly.var(NVARS, 1)
    assert (x0 + MultiPoly.const(NVARS, 1)).divexact_linear(x1) is None


def test_fraction_coefficients():
    half = MultiPoly.const(NVARS, Fraction(1, 2))
    x = MultiPoly.var(NVARS, 0)
    assert (half * x) * 2 == x
    assert (x * Fraction(3, 2)).substitute({0: MultiPoly.const(NVARS, 2)}) \
        == MultiPoly.const(NVARS, 3)


def test_pretty():
    p = MultiPoly(2, {(1, 1): 2, (0, 0): -1})
    assert p.pretty(["x", "y"]) == "2*x*y - 1"
