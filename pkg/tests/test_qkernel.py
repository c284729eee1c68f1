from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qmoments.qkernel import (
    ONE,
    ZERO,
    MPoly,
    RatFunc,
    eval_partial,
    limit_q1,
    parse,
    poly_arith,
    poly_gcd,
    ratfunc_arith,
)

q = MPoly.var("q")
SQ, SZ, SX = sympy.symbols("q z x")


def to_sympy(p: MPoly):
    expr = sympy.Integer(0)
    for (eq, ex, ez, es, eu), c in p.terms().items():
        assert es == 0 and eu == 0
        expr += sympy.Rational(c.numerator, c.denominator) * SQ ** eq * SX ** ex * SZ ** ez
    return sympy.expand(expr)


def sympy_rat(f: RatFunc):
    return to_sympy(f.num) / to_sympy(f.den)


# --- arithmetic examples ----------------------------------------------------

def test_poly_arith_examples():
    assert poly_arith(1 + q, 1 - q, "add") == MPoly.const(2)
    assert poly_arith(1 + q, 1 + q ** 2, "mul") == 1 + q + q ** 2 + q ** 3
    assert poly_arith(q ** -1, q, "mul") == MPoly.const(1)
    assert poly_arith(1 + q, 1 + q, "sub").is_zero()


def test_poly_gcd_examples_against_sympy():
    g = poly_gcd(1 - q ** 2, 1 - q ** 3)
    oracle = sympy.gcd(1 - SQ ** 2, 1 - SQ ** 3)
    assert sympy.simplify(to_sympy(g) / oracle).is_constant()
    assert g.degree("q") == 1
    assert poly_gcd(1 + q, 1 + q ** 2) == MPoly.const(1)
    assert sympy.resultant(1 + SQ, 1 + SQ ** 2) != 0


def test_poly_gcd_with_zero_and_error():
    p = 3 * q + 3
    g = poly_gcd(p, MPoly())
    assert sympy.simplify(to_sympy(g) / (SQ + 1)).is_constant()
    with pytest.raises(ValueError):
        poly_gcd(MPoly(), MPoly())


def test_ratfunc_arith_examples():
    assert ratfunc_arith(parse("q/(1+q)"), parse("1/(1+q)"), "add") == ONE
    assert ratfunc_arith(parse("1/(1-q)"), parse("1-q"), "mul") == ONE
    r = parse("1/((1+q)*(1+q^2))")
    assert str(r) == "1/((1+q)(1+q^2))"
    with pytest.raises(ZeroDivisionError):
        ratfunc_arith(ONE, ZERO, "div")


def test_eval_partial_examples():
    assert eval_partial(parse("(1+q)^2"), {"q": 2}) == RatFunc.coerce(9)
    assert eval_partial(parse("q/((1-z)*(1-q*z))"), {"z": 0}) == parse("q")
    assert eval_partial(parse("1+q+q^2"), {"q": 1}) == RatFunc.coerce(3)
    assert eval_partial(parse("q^-3+z"), {"q": Fraction(1, 2)}) == parse("8+z")
    with pytest.raises(ZeroDivisionError):
        eval_partial(parse("1/(1-z)"), {"z": 1})


def test_limit_q1_examples():
    assert limit_q1(parse("(1-q^3)/(1-q)")) == RatFunc.coerce(3)
    # (1-q^2)(1-q^4)/((1-q)(1-q^2)) reduces to [4], whose value at q=1 is 4
    assert limit_q1(parse("(1-q^2)*(1-q^4)/((1-q)*(1-q^2))")) == RatFunc.coerce(4)
    n = 3
    lam = parse(f"q^{n - 1}/((1+q^{n - 1})*(1+q^{n}))")
    assert limit_q1(lam) == RatFunc.coerce(Fraction(1, 4))
    with pytest.raises(ValueError):
        limit_q1(parse("1/(1-q)"))


def test_limit_q1_keeps_other_variables():
    f = parse("(1-q^2)*z/((1-q)*(1-z))")
    assert limit_q1(f) == parse("2*z/(1-z)")


def test_canonical_rendering_is_stable():
    assert str(parse("x^2 - q/((1+q)*(1+q^2))")) == str(parse("-q/((1+q^2)*(1+q)) + x^2"))
    assert str(MPoly.from_terms({(-3, 0, 0, 0, 0): 1})) == "q^-3"
    assert str(MPoly.from_terms({(1, 2, 0, 0, 0): Fraction(1, 2)})) == "(1/2)qx^2"


def test_parse_roundtrip():
    for text in ["1+2q+q^2+q^3", "q^-2+z", "(1+q)/(1-z)", "-q/((1+q)(1+q^2))"]:
        f = parse(text)
        assert parse(str(f)) == f


def test_denominator_normalization():
    f = parse("q^2/(q^3*(1+q))")
    assert f.den.low_degree_q() == 0
    assert f == parse("q^-1/(1+q)")
    g = parse("1/(-1-q)")
    assert str(g) == "-1/(1+q)"


# --- property-based ---------------------------------------------------------

exponents = st.tuples(st.integers(-3, 4), st.integers(0, 2), st.integers(0, 2))
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def mpolys(draw, max_terms=4):
    terms = draw(st.dictionaries(exponents, coeffs, max_size=max_terms))
    return MPoly.from_terms({(a, b, c, 0, 0): v for (a, b, c), v in terms.items()})


@st.composite
def nonzero_mpolys(draw):
    p = draw(mpolys())
    return p if not p.is_zero() else MPoly.const(1) + q


@settings(max_examples=60, deadline=None)
@given(mpolys(), mpolys(), mpolys())
def test_mpoly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert (a - a).is_zero()


@settings(max_examples=40, deadline=None)
@given(mpolys(), nonzero_mpolys(), mpolys(), nonzero_mpolys())
def test_ratfunc_field_axioms(a, b, c, d):
    x, y = RatFunc.coerce(a) / RatFunc.coerce(b), RatFunc.coerce(c) / RatFunc.coerce(d)
    assert x + y == y + x
    assert x * (y + ONE) == x * y + x
    if not y.is_zero():
        assert (x / y) * y == x


@settings(max_examples=40, deadline=None)
@given(mpolys(), nonzero_mpolys(), nonzero_mpolys())
def test_canonical_form_unique(a, b, c):
    lhs = RatFunc.coerce(a) / RatFunc.coerce(b)
    rhs = RatFunc.coerce(c * a) / RatFunc.coerce(c * b)
    assert lhs == rhs
    assert str(lhs) == str(rhs)


@settings(max_examples=30, deadline=None)
@given(nonzero_mpolys(), nonzero_mpolys())
def test_reduction_matches_sympy(a, b):
    f = RatFunc.coerce(a) / RatFunc.coerce(b)
    assert sympy.simplify(sympy_rat(f) - to_sympy(a) / to_sympy(b)) == 0
    g = sympy.gcd(to_sympy(f.num) * SQ ** 8, to_sympy(f.den))
    assert sympy.Poly(g, SQ, SX, SZ).total_degree() == 0


def strip_q(expr):
    """Remove the q-power content: powers of q are units of the Laurent ring."""
    expr = sympy.expand(expr * SQ ** 16)
    low = min(m[0] for m in sympy.Poly(expr, SQ, SX, SZ).monoms())
    return sympy.expand(expr / SQ ** low)


@settings(max_examples=30, deadline=None)
@given(nonzero_mpolys(), nonzero_mpolys())
def test_gcd_matches_sympy_up_to_units(a, b):
    g = strip_q(to_sympy(poly_gcd(a, b)))
    oracle = sympy.gcd(strip_q(to_sympy(a)), strip_q(to_sympy(b)))
    ratio = sympy.cancel(g / oracle)
    assert ratio.is_number and ratio != 0


def test_laurent_closure():
    p = 1 + q + MPoly.var("x") * q ** 2
    for k in range(65):
        assert (p * q ** -k) * q ** k == p


@settings(max_examples=40, deadline=None)
@given(mpolys(), nonzero_mpolys())
def test_limit_agrees_with_evaluation(a, b):
    f = RatFunc.coerce(a) / RatFunc.coerce(b)
    den_at_1 = f.den.subs({"q": 1})
    if den_at_1.is_zero():
        return
    assert limit_q1(f) == eval_partial(f, {"q": 1})
