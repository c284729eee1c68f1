import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qmoments.moments import catalan
from qmoments.qkernel import ONE, ZERO, MPoly, RatFunc, parse, q_pow
from qmoments.qseries import (
    TruncSeries,
    binom2,
    geometric,
    pochhammer,
    q_binomial,
    q_binomial_base,
    q_int,
    qbin,
    qq_poch,
    series_E,
    series_F,
    series_G,
    series_h_g,
)

q = MPoly.var("q")
SQ = sympy.Symbol("q")


def ratio_oracle(n, k):
    """Gaussian binomial as (q;q)_n / ((q;q)_k (q;q)_(n-k)), cancelled by sympy."""
    def poch(j):
        return sympy.Mul(sympy.Integer(1), *[1 - SQ ** i for i in range(1, j + 1)])

    return sympy.expand(sympy.cancel(poch(n) / (poch(k) * poch(n - k))))


def as_sympy(p: MPoly):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * SQ ** e[0] for e, c in p.terms().items()))


def series(values):
    return TruncSeries([RatFunc.coerce(v) for v in values])


def test_q_int():
    assert q_int(0).is_zero()
    assert q_int(1) == MPoly.const(1)
    assert q_int(3) == 1 + q + q ** 2
    assert RatFunc.coerce(q_int(3)) == parse("(1-q^3)/(1-q)")


def test_q_binomial_examples():
    for n in range(21):
        assert q_binomial(n, 0) == MPoly.const(1)
    assert q_binomial(2, 1) == 1 + q
    assert q_binomial(4, 2) == 1 + q + 2 * q ** 2 + q ** 3 + q ** 4
    assert q_binomial(3, -1).is_zero() and q_binomial(3, 4).is_zero()


@pytest.mark.parametrize("n", range(0, 9))
def test_q_binomial_against_ratio_oracle(n):
    for k in range(n + 1):
        assert as_sympy(q_binomial(n, k)) == ratio_oracle(n, k)


def test_q_binomial_symmetry_and_pascal():
    for n in range(17):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)
            if n:
                rhs = q_binomial(n - 1, k) + MPoly.var("q", n - k) * q_binomial(n - 1, k - 1)
                assert q_binomial(n, k) == rhs


def test_q_binomial_base():
    assert q_binomial_base(2, 1, 2) == 1 + q ** 2
    assert q_binomial_base(2, 1, -1) == 1 + q ** -1
    for base in (2, -1):
        for n in range(6):
            assert q_binomial_base(n, n, base) == MPoly.const(1)


def test_pochhammer():
    x = MPoly.var("x")
    assert pochhammer(x, 0) == MPoly.const(1)
    assert pochhammer(-q, 2) == (1 + q) * (1 + q ** 2)
    z = MPoly.var("z")
    assert pochhammer(z, 2).subs({}) == (1 - z) * (1 - q * z)
    assert pochhammer(z, 2).compose({"z": q}) == (1 - q) * (1 - q ** 2)


def test_finite_q_binomial_theorem():
    x = MPoly.var("x")
    for n in range(11):
        lhs = MPoly()
        for k in range(n + 1):
            lhs = lhs + q_binomial(n, k) * MPoly.var("q", binom2(k)) * x ** k * (-1) ** k
        assert lhs == pochhammer(x, n)


def test_series_arith_examples():
    order = 8
    geo = geometric(order)
    assert (series([1, -1] + [0] * (order - 1)) * geo) == TruncSeries.constant(ONE, order)
    assert all(c.is_zero() for c in geo * series([0] * (order + 1)))
    cat = series([catalan(n) for n in range(order + 1)])
    brute = [sum(catalan(i) * catalan(n - i) for i in range(n + 1)) for n in range(order + 1)]
    assert list(cat * cat) == [RatFunc.coerce(v) for v in brute]
    assert (cat * cat)[3] == RatFunc.coerce(14)


def test_order_is_min_of_operands():
    a = series([1, 2, 3, 4])
    b = series([1, 1])
    assert (a + b).order == 1 and (a * b).order == 1


def test_series_inverse_examples():
    order = 8
    assert series([1, -1] + [0] * (order - 1)).inverse() == geometric(order)
    assert series([1] + [0] * order).inverse() == TruncSeries.constant(ONE, order)
    poch2 = series([1, -1] + [0] * (order - 1)) * series([ONE, -q_pow(1)] + [0] * (order - 1))
    inv = poch2.inverse()
    for k in range(order + 1):
        assert inv[k] == qbin(k + 1, k)
    with pytest.raises(ZeroDivisionError):
        series([0, 1]).inverse()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=1, max_size=6))
def test_inverse_times_series_is_one(tail):
    s = series([1] + tail)
    assert s * s.inverse() == TruncSeries.constant(ONE, s.order)


def test_scale_u():
    order = 6
    geo = geometric(order)
    assert list(geo.scale_u(1)) == [q_pow(n) for n in range(order + 1)]
    assert geo.scale_u(0) == geo
    assert geo.scale_u(-1).scale_u(1) == geo


def test_series_E():
    e = series_E(2, 8)
    assert e[0] == ONE
    assert e[1] == parse("1/(1-q)")
    for m in range(1, 5):
        e = series_E(m, 8)
        residual = e - e.scale_u(1) - e.scale_u(m).shift(1)
        assert all(c.is_zero() for c in residual), m


def test_series_E_m_independent_exponent_fails_for_m2():
    e = series_E(2, 8, corrected=False)
    residual = e - e.scale_u(1) - e.scale_u(2).shift(1)
    assert any(not c.is_zero() for c in residual)
    e1 = series_E(1, 8, corrected=False)
    assert all(c.is_zero() for c in e1 - e1.scale_u(1) - e1.scale_u(1).shift(1))


def test_series_G_F():
    g = series_G(6)
    assert g[0] == ONE
    assert g[1] == parse("1/((1-z)*(1-q))")
    assert series_F(6)[1] == parse("1/((1-z)*(1-q))")
    minus_q = -q_pow(1)
    f = series_F(8, z=minus_q)
    g = series_G(8, z=minus_q, scale=-ONE)
    assert f * g == TruncSeries.constant(ONE, 8)


def test_series_G_F_sampled_z():
    z0 = RatFunc.coerce(Fraction(3, 7))
    g_sym = series_G(5)
    g_num = series_G(5, z=z0)
    for a, b in zip(g_sym, g_num):
        assert a.subs({"z": Fraction(3, 7)}) == b


def test_series_h_g():
    h, g = series_h_g(10)
    assert h[0] == ONE
    assert (h * h.scale_u(1)) == series([1, -1] + [0] * 9)
    gq = g.scale_u(1)
    for n in range(11):
        assert gq[n] == qbin(2 * n, n) * q_pow(n) / RatFunc.coerce(pochhammer(-q, n)) ** 2


def test_qq_poch_values():
    assert qq_poch(0) == ONE
    assert qq_poch(2) == parse("(1-q)*(1-q^2)")


def test_random_series_associativity():
    rng = random.Random(7)
    vals = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(6)] for _ in range(3)]
    a, b, c = (series(v) for v in vals)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert ZERO == (a - a)[0]
