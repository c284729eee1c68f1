"""Special q-Chebyshev families and the Andrews q-Catalan numbers."""
from __future__ import annotations

from ..families import FamilyId, XPoly, family_closed, family_recur
from ..moments import andrews_catalan, family_triangle
from ..qkernel import ONE, ZERO, MPoly, RatFunc, q_pow
from ..qseries import (
    TruncSeries,
    binom2,
    infinite_product,
    pochhammer,
    qbin,
    qint,
    series_G4,
    series_h_g,
)
from .registry import register, series_pairs

U = FamilyId("u")
T = FamilyId("t")
ORTHO_CAP = 6


def _mq(k: int) -> RatFunc:
    """``(-q; q)_k``."""
    return RatFunc.coerce(pochhammer(-MPoly.var("q"), k))


def _mq2(k: int) -> RatFunc:
    """``(-q^2; q)_k``."""
    return RatFunc.coerce(pochhammer(-MPoly.var("q", 2), k))


def _tri_functional(fid, p: XPoly, tri) -> RatFunc:
    acc = ZERO
    for k, c in p.items():
        acc = acc + c * tri(k, 0)
    return acc


def _ortho(fid, bound, norm):
    top = min(bound, ORTHO_CAP)
    tri = family_triangle(fid, 2 * top)
    polys = [family_closed(fid, n) for n in range(top + 1)]
    for n in range(top + 1):
        for m in range(top + 1):
            want = norm(n) if n == m else 0
            yield (f"n={n},m={m}", _tri_functional(fid, polys[n] * polys[m], tri), want)


def _moment_series(fid, order: int) -> TruncSeries:
    return TruncSeries(family_triangle(fid, 2 * order).moments())


@register("eq-4.1", "poly-identity", "s4", cap=10)
def _eq_4_1(bound):
    """Closed form of u_n(x,q) against u_n = x u_(n-1) - lambda_(n-2) u_(n-2)."""
    for n in range(bound + 1):
        yield (f"n={n}", family_closed(U, n), family_recur(U, n))


@register("eq-4.2", "poly-identity", "s4", cap=10)
def _eq_4_2(bound):
    """lambda_n(q) = q^(n+1) / ((1+q^(n+1))(1+q^(n+2))), read off the closed forms."""
    for n in range(2, bound + 1):
        lam = q_pow(n - 1) / ((1 + q_pow(n - 1)) * (1 + q_pow(n)))
        rhs = family_closed(U, n - 1).mul_x(1) - family_closed(U, n - 2) * lam
        yield (f"n={n}", family_closed(U, n), rhs)


@register("eq-4.3", "moment-equality", "s4", cap=10)
def _eq_4_3(bound):
    """Lambda_u(u_n) = [n=0], with moments from the lattice-path triangle."""
    tri = family_triangle(U, bound)
    for n in range(bound + 1):
        yield (f"n={n}", _tri_functional(U, family_closed(U, n), tri), 1 if n == 0 else 0)


@register("eq-4.4", "moment-equality", "s4", cap=ORTHO_CAP)
def _eq_4_4(bound):
    """Lambda_u(u_n u_m) = q^binom(n+1,2) / ((-q;q)_n (-q^2;q)_n) [n=m]."""
    yield from _ortho(U, bound, lambda n: q_pow(binom2(n + 1)) / (_mq(n) * _mq2(n)))


@register("eq-4.5", "poly-identity", "s4", cap=10)
def _eq_4_5(bound):
    """x^n = sum ([n,k] - [n,k-1]) / ((-q;q)_k (-q^(n+2-2k);q)_k) u_(n-2k)."""
    for n in range(bound + 1):
        rhs = XPoly()
        for k in range(n // 2 + 1):
            den = _mq(k) * RatFunc.coerce(pochhammer(-MPoly.var("q", n + 2 - 2 * k), k))
            rhs = rhs + family_closed(U, n - 2 * k) * ((qbin(n, k) - qbin(n, k - 1)) / den)
        yield (f"n={n}", XPoly.monomial(n), rhs)


def _half_binomial_q2(k: int) -> RatFunc:
    """``[1/2, k]_(q^2) = prod_(j<k) (1 - q^(1-2j)) / (q^2;q^2)_k``."""
    num = ONE
    for j in range(k):
        num = num * (1 - q_pow(1 - 2 * j))
    return num / RatFunc.coerce(pochhammer(MPoly.var("q", 2), k, 2))


@register("eq-4.6", "moment-equality", "s4", cap=10)
def _eq_4_6(bound):
    """Lambda_u(x^2n) in the product form and the half-integer q^2-binomial form.

    The half-binomial form needs the factor q^(n^2+n); with q^(n^2) alone the two
    sides differ by q^n from n = 1 on.
    """
    mom = _moment_series(U, bound)
    for n in range(bound + 1):
        prod_form = qbin(2 * n, n) / qint(n + 1) * q_pow(n) / (_mq(n) * _mq2(n))
        half = q_pow(n * n + n) * (1 + q_pow(1)) * _half_binomial_q2(n + 1) * (-1) ** n
        yield (f"n={n}", mom[n], prod_form)
        yield (f"n={n} half-binomial", mom[n], half)


def _andrews_series(order: int) -> TruncSeries:
    return TruncSeries.from_function(order, andrews_catalan)


@register("eq-4.7", "series-identity", "s4")
def _eq_4_7(bound):
    """(C(u) + q C(qu)) / (1+q) = 1 + q u / (1+q)^2 C(u) C(qu)."""
    c = _moment_series(U, bound)
    cq = c.scale_u(1)
    one_q = 1 + q_pow(1)
    lhs = (c + cq * q_pow(1)) / one_q
    rhs = (c * cq).shift(1) * (q_pow(1) / one_q ** 2) + 1
    yield from series_pairs("", lhs, rhs)


@register("eq-4.8", "series-identity", "s4")
def _eq_4_8(bound):
    """u C(u) = (1+q)(1 - h(u)), and h(u) h(qu) = 1 - u."""
    h, _ = series_h_g(bound + 1)
    c = _andrews_series(bound)
    lhs = c.shift(1)
    rhs = ((1 - h) * (1 + q_pow(1))).truncate(bound)
    yield from series_pairs("C", lhs, rhs)
    one_minus_u = TruncSeries([ONE, -ONE] + [ZERO] * (bound - 1))
    yield from series_pairs("h", (h * h.scale_u(1)).truncate(bound), one_minus_u)


@register("eq-4.11", "poly-identity", "s4", cap=10)
def _eq_4_11(bound):
    """t_n = u_n - q^(2n-1) / ((1+q^(n-1))(1+q^n)) u_(n-2) for n >= 2."""
    for n in range(2, bound + 1):
        c = q_pow(2 * n - 1) / ((1 + q_pow(n - 1)) * (1 + q_pow(n)))
        yield (f"n={n}", family_closed(T, n), family_closed(U, n) - family_closed(U, n - 2) * c)


@register("eq-4.10", "poly-identity", "s4", cap=10)
def _eq_4_10(bound):
    """Closed form of t_n(x,q) against t_n = x t_(n-1) - lambda_(n-2) t_(n-2), lambda_0 = q/(1+q)."""
    for n in range(bound + 1):
        yield (f"n={n}", family_closed(T, n), family_recur(T, n))
    for n in range(2, bound + 1):
        k = n - 2
        lam = q_pow(1) / (1 + q_pow(1)) if k == 0 else q_pow(k + 1) / ((1 + q_pow(k)) * (1 + q_pow(k + 1)))
        rhs = family_closed(T, n - 1).mul_x(1) - family_closed(T, n - 2) * lam
        yield (f"n={n} explicit", family_closed(T, n), rhs)


@register("eq-4.12", "moment-equality", "s4", cap=10)
def _eq_4_12(bound):
    """Lambda_t(t_n) = [n=0], with moments from the lattice-path triangle."""
    tri = family_triangle(T, bound)
    for n in range(bound + 1):
        yield (f"n={n}", _tri_functional(T, family_closed(T, n), tri), 1 if n == 0 else 0)


@register("eq-4.13", "moment-equality", "s4", cap=ORTHO_CAP)
def _eq_4_13(bound):
    """Lambda_t(t_n t_m) = q^binom(n+1,2) / ((-q;q)_(n-1) (-q;q)_n) [n=m] for n > 0, 1 at n = 0."""

    def norm(n):
        if n == 0:
            return ONE
        return q_pow(binom2(n + 1)) / (_mq(n - 1) * _mq(n))

    yield from _ortho(T, bound, norm)


@register("eq-4.14", "poly-identity", "s4", cap=10)
def _eq_4_14(bound):
    """x^n = sum [n,k] q^k / ((-q;q)_k (-q^(n-2k+1);q)_k) t_(n-2k)."""
    for n in range(bound + 1):
        rhs = XPoly()
        for k in range(n // 2 + 1):
            den = _mq(k) * RatFunc.coerce(pochhammer(-MPoly.var("q", n - 2 * k + 1), k))
            rhs = rhs + family_closed(T, n - 2 * k) * (qbin(n, k) * q_pow(k) / den)
        yield (f"n={n}", XPoly.monomial(n), rhs)


@register("eq-4.15", "moment-equality", "s4", cap=10)
def _eq_4_15(bound):
    """Lambda_t(x^2n) = [2n,n] q^n / (-q;q)_n^2."""
    mom = _moment_series(T, bound)
    for n in range(bound + 1):
        yield (f"n={n}", mom[n], qbin(2 * n, n) * q_pow(n) / _mq(n) ** 2)


@register("eq-4.16", "series-identity", "s4")
def _eq_4_16(bound):
    """G(u) = (u; q^2)_inf: the sum against the product recursion and G(u) = (1-u) G(q^2 u)."""
    g = series_G4(bound)
    yield from series_pairs("product", g, infinite_product(ONE, 2, bound))
    one_minus_u = TruncSeries([ONE, -ONE] + [ZERO] * (bound - 1))
    yield from series_pairs("functional", g, one_minus_u * g.scale_u(2))


@register("eq-4.17", "series-identity", "s4")
def _eq_4_17(bound):
    """g(u) = G(qu)/G(u) = sum [2n,n] u^n / (-q;q)_n^2, and g(u) g(qu) = 1/(1-u)."""
    _, g = series_h_g(bound)
    closed = TruncSeries.from_function(bound, lambda n: qbin(2 * n, n) / _mq(n) ** 2)
    yield from series_pairs("g", g, closed)
    geo = TruncSeries([ONE] * (bound + 1))
    yield from series_pairs("g(u)g(qu)", g * g.scale_u(1), geo)


@register("eq-4.18", "series-identity", "s4")
def _eq_4_18(bound):
    """sum Lambda_t(x^2n) u^n = g(qu) = G(q^2 u)/G(qu)."""
    _, g = series_h_g(bound)
    g4 = series_G4(bound)
    mom = _moment_series(T, bound)
    yield from series_pairs("g(qu)", mom, g.scale_u(1))
    yield from series_pairs("G quotient", mom, g4.scale_u(2) / g4.scale_u(1))


@register("eq-4.19", "poly-identity", "s4", cap=10)
def _eq_4_19(bound):
    """t_n = T_n(x,-1,q) / (-q;q)_(n-1) for n > 0."""
    big = FamilyId("T", s=-1)
    for n in range(1, bound + 1):
        yield (f"n={n}", family_closed(T, n), family_closed(big, n) / _mq(n - 1))


@register("eq-4.20", "poly-identity", "s4", cap=10)
def _eq_4_20(bound):
    """u_n = U_n(x,-1,q) / (-q;q)_n."""
    big = FamilyId("U", s=-1)
    for n in range(bound + 1):
        yield (f"n={n}", family_closed(U, n), family_closed(big, n) / _mq(n))


@register("eq-4.21", "poly-identity", "s4", cap=20)
def _eq_4_21(bound):
    """sum q^(j^2) [n,j]^2 = [2n,n]."""
    for n in range(bound + 1):
        acc = ZERO
        for j in range(n + 1):
            acc = acc + q_pow(j * j) * qbin(n, j) ** 2
        yield (f"n={n}", acc, qbin(2 * n, n))


@register("eq-4.21-reciprocal", "series-identity", "s4")
def _eq_4_21_reciprocal(bound):
    """1/G(u) = sum u^k / (q^2;q^2)_k, the other factor in the coefficient comparison."""
    g4 = series_G4(bound)
    inv = TruncSeries.from_function(
        bound, lambda k: ONE / RatFunc.coerce(pochhammer(MPoly.var("q", 2), k, 2))
    )
    yield from series_pairs("1/G", g4.inverse(), inv)
