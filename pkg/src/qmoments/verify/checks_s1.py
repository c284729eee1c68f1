"""Classical families, q-notation, and the lattice-path triangle."""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from math import comb

from ..families import FamilyId, XPoly, dq, family_closed, family_recur, rogers_szego, sigma
from ..moments import (
    LambdaSeq,
    catalan,
    expand_monomial,
    family_triangle,
    functional_on_poly,
    fuss_catalan,
    moment,
    triangle,
)
from ..qkernel import ONE, MPoly, RatFunc, limit_q1, q_pow, to_ratfunc
from ..qseries import (
    TruncSeries,
    binom2,
    frac_series,
    infinite_product,
    pochhammer,
    q_binomial,
    qbin,
    qint,
    qq_poch,
)
from .registry import register, series_pairs

ORTHO_CAP = 6


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _moment_series(fid, order: int) -> TruncSeries:
    return TruncSeries(family_triangle(fid, fid.m * order).moments())


def _one(order: int) -> TruncSeries:
    return frac_series([1] + [0] * order)


def _expansion(basis_id, n: int, coeff) -> XPoly:
    m = basis_id.m
    acc = XPoly()
    for k in range(n // m + 1):
        acc = acc + family_closed(basis_id, n - m * k) * to_ratfunc(coeff(n, k))
    return acc


def _orthogonality(fid, bound, norm):
    top = min(bound, ORTHO_CAP)
    polys = [family_closed(fid, n) for n in range(top + 1)]
    for n in range(top + 1):
        for m in range(top + 1):
            expected = norm(n) if n == m else 0
            yield (f"n={n},m={m}", functional_on_poly(fid, polys[n] * polys[m]), expected)


F = FamilyId("f")
L = FamilyId("l")


@register("eq-1.3", "moment-equality", "s1", classical=True)
def _eq_1_3(bound):
    """Orthogonality of f with unit norms."""
    yield from _orthogonality(F, bound, lambda n: 1)


@register("eq-1.4", "poly-identity", "s1", classical=True)
def _eq_1_4(bound):
    """x^n in the f basis with ballot-number coefficients."""
    for n in range(bound + 1):
        rhs = _expansion(F, n, lambda n, k: _binom(n, k) - _binom(n, k - 1))
        yield (f"n={n}", XPoly.monomial(n), rhs)


@register("eq-1.5", "moment-equality", "s1", classical=True)
def _eq_1_5(bound):
    """Even moments of f are Catalan numbers, odd moments vanish."""
    tri = family_triangle(F, 2 * bound + 1)
    for n in range(bound + 1):
        yield (f"x^{2 * n}", tri(2 * n, 0), catalan(n))
        yield (f"x^{2 * n + 1}", tri(2 * n + 1, 0), 0)


@register("eq-1.6", "series-identity", "s1", classical=True)
def _eq_1_6(bound):
    """(1 - 2u C(u))^2 = 1 - 4u, the squared form of the radical expression."""
    c = _moment_series(F, bound)
    w = _one(bound) - c.shift(1) * 2
    yield from series_pairs("", w * w, frac_series([1, -4] + [0] * (bound - 1)).truncate(bound))


@register("eq-1.7", "series-identity", "s1", classical=True)
def _eq_1_7(bound):
    """C(u) = 1 + u C(u)^2."""
    c = _moment_series(F, bound)
    yield from series_pairs("", c, _one(bound) + (c * c).shift(1))


@register("eq-1.8", "series-identity", "s1", classical=True)
def _eq_1_8(bound):
    """C(u/(1+u)^2) / (1+u) = 1."""
    c = _moment_series(F, bound)
    inv = frac_series([1, 1] + [0] * (bound - 1)).truncate(bound).inverse()
    inner = (inv * inv).shift(1)
    yield from series_pairs("", c.compose(inner) * inv, _one(bound))


@register("eq-1.13", "moment-equality", "s1", classical=True)
def _eq_1_13(bound):
    """Orthogonality of l: norm 2 for n > 0 and 1 for n = 0."""
    yield from _orthogonality(L, bound, lambda n: 2 if n else 1)


@register("eq-1.14", "poly-identity", "s1", classical=True)
def _eq_1_14(bound):
    """x^n in the l basis with binomial coefficients."""
    for n in range(bound + 1):
        yield (f"n={n}", XPoly.monomial(n), _expansion(L, n, lambda n, k: _binom(n, k)))


@register("eq-1.15", "moment-equality", "s1", classical=True)
def _eq_1_15(bound):
    """Even moments of l are central binomial coefficients."""
    tri = family_triangle(L, 2 * bound)
    for n in range(bound + 1):
        yield (f"x^{2 * n}", tri(2 * n, 0), comb(2 * n, n))


@register("eq-1.16", "series-identity", "s1", classical=True)
def _eq_1_16(bound):
    """B(u)^2 (1 - 4u) = 1."""
    b = _moment_series(L, bound)
    yield from series_pairs("", b * b * frac_series([1, -4] + [0] * (bound - 1)).truncate(bound), _one(bound))


@register("eq-1.17", "series-identity", "s1", classical=True)
def _eq_1_17(bound):
    """sum B_n u^n / (1+u)^(2n+1) = 1/(1-u)."""
    inv = frac_series([1, 1] + [0] * (bound - 1)).truncate(bound).inverse()
    acc = frac_series([0] * (bound + 1))
    for n in range(bound + 1):
        acc = acc + (inv ** (2 * n + 1)).shift(n) * comb(2 * n, n)
    yield from series_pairs("", acc, frac_series([1] * (bound + 1)))


@register("eq-1.20", "poly-identity", "s1", cap=10, classical=True)
def _eq_1_20(bound):
    """x^n in the f^(m) basis, m = 1..4."""
    for m in range(1, 5):
        fid = FamilyId("fm", m)
        top = bound if m <= 2 else min(bound, 8)
        for n in range(top + 1):
            rhs = _expansion(fid, n, lambda n, k: _binom(n, k) - (m - 1) * _binom(n, k - 1))
            yield (f"m={m},n={n}", XPoly.monomial(n), rhs)


@register("eq-1.21", "moment-equality", "s1", cap=6, classical=True)
def _eq_1_21(bound):
    """Fuss-Catalan moments of f^(m), m = 1..4."""
    for m in range(1, 5):
        tri = family_triangle(FamilyId("fm", m), m * bound)
        for n in range(bound + 1):
            direct = _binom(m * n, n) - (m - 1) * _binom(m * n, n - 1)
            yield (f"m={m},n={n}", tri(m * n, 0), direct)
            yield (f"m={m},n={n} closed", direct, fuss_catalan(m, n))


@register("eq-1.23", "poly-identity", "s1", cap=10, classical=True)
def _eq_1_23(bound):
    """l^(m)_n = f^(m)_n - (m-1) f^(m)_(n-m) for n > 0."""
    for m in range(1, 5):
        top = bound if m <= 2 else min(bound, 8)
        for n in range(1, top + 1):
            rhs = family_closed(FamilyId("fm", m), n)
            if n >= m:
                rhs = rhs - family_closed(FamilyId("fm", m), n - m) * (m - 1)
            yield (f"m={m},n={n}", family_closed(FamilyId("lm", m), n), rhs)


@register("eq-1.24", "poly-identity", "s1", cap=10, classical=True)
def _eq_1_24(bound):
    """x^n = sum binom(n,k) l^(m)_(n-mk) with lambda_0 = m."""
    for m in range(1, 5):
        top = bound if m <= 2 else min(bound, 8)
        fid = FamilyId("lm", m)
        for n in range(top + 1):
            yield (f"m={m},n={n}", XPoly.monomial(n), _expansion(fid, n, lambda n, k: _binom(n, k)))


@register("eq-1.25", "moment-equality", "s1", cap=6, classical=True)
def _eq_1_25(bound):
    """Moments binom(mn, n) for lambda_0 = m."""
    for m in range(1, 5):
        tri = family_triangle(FamilyId("lm", m), m * bound)
        for n in range(bound + 1):
            yield (f"m={m},n={n}", tri(m * n, 0), comb(m * n, n))


@register("phi-m", "series-identity", "s1", classical=True)
def _phi_m(bound):
    """Phi_m = 1 + u Phi_m^m with Phi_m from the triangle, m = 1..4."""
    for m in range(1, 5):
        phi = _moment_series(FamilyId("fm", m), bound)
        yield from series_pairs(f"m={m}", phi, _one(bound) + (phi ** m).shift(1))


@register("psi-m", "series-identity", "s1", classical=True)
def _psi_m(bound):
    """Psi_m = 1 / (1 - m u Phi_m^(m-1)), both from triangles, m = 1..4."""
    for m in range(1, 5):
        phi = _moment_series(FamilyId("fm", m), bound)
        psi = _moment_series(FamilyId("lm", m), bound)
        rhs = (_one(bound) - (phi ** (m - 1)).shift(1) * m).inverse()
        yield from series_pairs(f"m={m}", psi, rhs)


@register("eq-1.27", "poly-identity", "s1", cap=10, classical=True)
def _eq_1_27(bound):
    """L^(m)_n = f^(m)_n - f^(m)_(n-m) for n > 0."""
    for m in range(1, 5):
        top = bound if m <= 2 else min(bound, 8)
        for n in range(1, top + 1):
            rhs = family_closed(FamilyId("fm", m), n)
            if n >= m:
                rhs = rhs - family_closed(FamilyId("fm", m), n - m)
            yield (f"m={m},n={n}", family_closed(FamilyId("Lm", m), n), rhs)


@register("eq-1.28", "poly-identity", "s1", cap=10, classical=True)
def _eq_1_28(bound):
    """x^n in the L^(m) basis."""
    for m in range(1, 5):
        top = bound if m <= 2 else min(bound, 8)
        fid = FamilyId("Lm", m)

        def coeff(n, k, m=m):
            return _binom(n, k) - (m - 2) * sum(_binom(n, j) for j in range(k))

        for n in range(top + 1):
            yield (f"m={m},n={n}", XPoly.monomial(n), _expansion(fid, n, coeff))


@register("eq-1.29", "moment-equality", "s1", cap=6, classical=True)
def _eq_1_29(bound):
    """Moments of L^(m) from the triangle against the binomial-sum formula."""
    for m in range(1, 5):
        tri = family_triangle(FamilyId("Lm", m), m * bound)
        for n in range(bound + 1):
            direct = comb(m * n, n) - (m - 2) * sum(comb(m * n, j) for j in range(n))
            yield (f"m={m},n={n}", tri(m * n, 0), direct)


# q-notation ---------------------------------------------------------------

@register("eq-1.30", "poly-identity", "s1")
def _eq_1_30(bound):
    """Rogers-Szego recursion, D_q r_n = [n] r_(n-1), and r_n = (x + s*eps)^n 1."""
    s = RatFunc.var("s")
    r = [rogers_szego(n) for n in range(bound + 2)]
    for n in range(1, bound + 1):
        rhs = r[n].mul_x(1) + r[n] * s + r[n - 1].mul_x(1) * ((q_pow(n) - 1) * s)
        yield (f"recursion n={n}", r[n + 1], rhs)
    for n in range(1, bound + 1):
        yield (f"D_q n={n}", dq(r[n]), r[n - 1] * qint(n))
    p = XPoly.const(ONE)
    for n in range(bound + 1):
        yield (f"operator n={n}", r[n], p)
        p = p.mul_x(1) + sigma(p) * s


def _z_poch_series(a: RatFunc, order: int) -> TruncSeries:
    return TruncSeries.from_function(order, lambda k: pochhammer(a, k) / qq_poch(k))


@register("eq-1.31", "series-identity", "s1")
def _eq_1_31(bound):
    """q-binomial theorem with a symbolic parameter a (taken as z)."""
    a = RatFunc.var("z")
    lhs = _z_poch_series(a, bound)
    rhs = infinite_product(a, 1, bound) / infinite_product(ONE, 1, bound)
    yield from series_pairs("", lhs, rhs)


@register("eq-1.32", "series-identity", "s1")
def _eq_1_32(bound):
    """sum u^n/(q;q)_n = 1/(u;q)_inf."""
    lhs = TruncSeries.from_function(bound, lambda n: ONE / qq_poch(n))
    yield from series_pairs("", lhs, infinite_product(ONE, 1, bound).inverse())


@register("eq-1.33", "series-identity", "s1")
def _eq_1_33(bound):
    """sum q^binom(n,2) (-u)^n/(q;q)_n = (u;q)_inf."""
    lhs = TruncSeries.from_function(bound, lambda n: q_pow(binom2(n)) * (-1) ** n / qq_poch(n))
    yield from series_pairs("", lhs, infinite_product(ONE, 1, bound))


@register("eq-1.34", "poly-identity", "s1")
def _eq_1_34(bound):
    """Finite q-binomial theorem as a polynomial identity in x and q."""
    x = MPoly.var("x")
    for n in range(bound + 1):
        lhs = MPoly()
        for k in range(n + 1):
            lhs = lhs + q_binomial(n, k) * MPoly.var("q", binom2(k)) * x ** k * (-1) ** k
        yield (f"n={n}", lhs, pochhammer(x, n))


@register("eq-1.35", "series-identity", "s1", cap=6)
def _eq_1_35(bound):
    """1/(u;q)_n = sum [n+k-1,k] u^k."""
    order = max(bound, 8)
    for n in range(1, bound + 1):
        poly = TruncSeries([ONE] + [ONE - ONE] * order)
        for j in range(n):
            poly = poly * TruncSeries([ONE, -q_pow(j)] + [ONE - ONE] * (order - 1))
        rhs = TruncSeries.from_function(order, lambda k: qbin(n + k - 1, k))
        yield from series_pairs(f"n={n}", poly.inverse(), rhs)


def _chebyshev(first: int, n: int) -> XPoly:
    """Integer Chebyshev polynomials: ``P_k = 2x P_(k-1) - P_(k-2)``, ``P_0 = 1``, ``P_1 = first * x``."""
    two_x = XPoly.monomial(1) * to_ratfunc(2)
    prev, cur = XPoly.const(ONE), XPoly.monomial(1) * to_ratfunc(first)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


TC = FamilyId("tc")
UC = FamilyId("uc")


@register("eq-1.36", "poly-identity", "s1", cap=10, classical=True)
def _eq_1_36(bound):
    """t_n = T_n / 2^(n-1) for n > 0, the recurrence with lambda = (1/2, 1/4, ...), and the q -> 1 lambdas of t_n(x,q)."""
    for n in range(bound + 1):
        scale = Fraction(1, 2 ** (n - 1)) if n else Fraction(1)
        yield (f"n={n}", family_closed(TC, n), _chebyshev(1, n) * to_ratfunc(scale))
        yield (f"n={n} recur", family_closed(TC, n), family_recur(TC, n))
    qt = FamilyId("t")
    for k in range(bound + 1):
        yield (f"lambda_{k}", limit_q1(qt.spec.lam(qt, k)), to_ratfunc(Fraction(1, 2) if k == 0 else Fraction(1, 4)))


@register("eq-1.37", "poly-identity", "s1", cap=10, classical=True)
def _eq_1_37(bound):
    """u_n = U_n / 2^n, u_n = x u_(n-1) - u_(n-2)/4, and the q -> 1 lambdas of u_n(x,q)."""
    for n in range(bound + 1):
        yield (f"n={n}", family_closed(UC, n), _chebyshev(2, n) * to_ratfunc(Fraction(1, 2 ** n)))
        yield (f"n={n} recur", family_closed(UC, n), family_recur(UC, n))
    qu = FamilyId("u")
    for k in range(bound + 1):
        yield (f"lambda_{k}", limit_q1(qu.spec.lam(qu, k)), to_ratfunc(Fraction(1, 4)))


@register("eq-1.36-moments", "moment-equality", "s1", cap=8, classical=True)
def _eq_1_36_moments(bound):
    """Lambda_t(x^2n) = binom(2n,n)/4^n and Lambda_u(x^2n) = C_n/4^n."""
    for n in range(bound + 1):
        yield (f"t n={n}", moment(TC, 2 * n), to_ratfunc(Fraction(comb(2 * n, n), 4 ** n)))
        yield (f"u n={n}", moment(UC, 2 * n), to_ratfunc(Fraction(catalan(n), 4 ** n)))


@register("qbinom-symmetry", "poly-identity", "s1", cap=16, fixed=True)
def _qbinom_symmetry(bound):
    """[n,k] = [n,n-k]."""
    for n in range(bound + 1):
        for k in range(n + 1):
            yield (f"n={n},k={k}", q_binomial(n, k), q_binomial(n, n - k))


@register("qbinom-pascal", "poly-identity", "s1", cap=16, fixed=True)
def _qbinom_pascal(bound):
    """Both Pascal rules and the product definition of [n,k]."""
    q = MPoly.var("q")
    for n in range(1, bound + 1):
        for k in range(n + 1):
            first = MPoly.var("q", k) * q_binomial(n - 1, k) + q_binomial(n - 1, k - 1)
            second = q_binomial(n - 1, k) + MPoly.var("q", n - k) * q_binomial(n - 1, k - 1)
            yield (f"first n={n},k={k}", q_binomial(n, k), first)
            yield (f"second n={n},k={k}", q_binomial(n, k), second)
            prod = pochhammer(q, n).divexact(pochhammer(q, k) * pochhammer(q, n - k))
            yield (f"ratio n={n},k={k}", q_binomial(n, k), prod)


# triangle -------------------------------------------------------------------

def _path_weight(lam: LambdaSeq, n: int, k: int):
    """Sum of weights over all up/down step sequences from height 0 to height k."""
    m = lam.m
    total = RatFunc.coerce(0)
    for steps in cartesian((0, 1), repeat=n):
        h = 0
        w = ONE
        ok = True
        for down in steps:
            if down:
                h -= m - 1
                if h < 0:
                    ok = False
                    break
                w = w * lam.weight(h)
            else:
                h += 1
        if ok and h == k:
            total = total + w
    return total


@register("eq-1.40", "moment-equality", "s1", cap=10)
def _eq_1_40(bound):
    """Triangle recurrence against brute-force weighted lattice-path enumeration."""
    for fid in (FamilyId("t"), FamilyId("fq", 3)):
        lam = LambdaSeq.of_family(fid)
        tri = triangle(lam, bound)
        for n in range(bound + 1):
            for k in range(n + 1):
                yield (f"{fid.label()} n={n},k={k}", tri(n, k), _path_weight(lam, n, k))


_TRIANGLE_FAMILIES = (
    FamilyId("f"), FamilyId("l"), FamilyId("fm", 3), FamilyId("lm", 3), FamilyId("Lm", 3),
    FamilyId("tc"), FamilyId("uc"), FamilyId("fq"), FamilyId("fq", 3), FamilyId("u"), FamilyId("t"),
)


@register("eq-1.39", "poly-identity", "s1", cap=10)
def _eq_1_39(bound):
    """Basis expansion coefficients of x^n equal the triangle entries c(n,k)."""
    for fid in _TRIANGLE_FAMILIES:
        tri = family_triangle(fid, bound)
        for n in range(bound + 1):
            exp = expand_monomial(fid, n)
            for k in range(n + 1):
                yield (f"{fid.label()} n={n},k={k}", exp.get(k, 0), tri(n, k))


@register("eq-1.41", "moment-equality", "s1", cap=10)
def _eq_1_41(bound):
    """Lambda(x^n) = c(n,0)."""
    for fid in _TRIANGLE_FAMILIES:
        tri = family_triangle(fid, bound)
        for n in range(bound + 1):
            yield (f"{fid.label()} n={n}", expand_monomial(fid, n).get(0, 0), tri(n, 0))


@register("eq-1.42", "annihilation", "s1", cap=10)
def _eq_1_42(bound):
    """c(mn+k+i, k) = 0 for 0 < i < m."""
    for fid in _TRIANGLE_FAMILIES:
        tri = family_triangle(fid, bound)
        m = fid.m
        for n in range(bound + 1):
            for k in range(n + 1):
                if (n - k) % m:
                    yield (f"{fid.label()} n={n},k={k}", tri(n, k), 0)


def _shifted(lam: LambdaSeq, i: int) -> LambdaSeq:
    return LambdaSeq(lam.m, lambda k: lam.weight(k + i))


def _triangle_series(lam: LambdaSeq, order: int) -> TruncSeries:
    return TruncSeries(triangle(lam, lam.m * order).moments())


@register("eq-1.43", "series-identity", "s1")
def _eq_1_43(bound):
    """Phi = 1 + lambda_0 u Phi Phi_1 ... Phi_(m-1) from shifted weight sequences."""
    for fid in (FamilyId("fq", 3), FamilyId("Lm", 3), FamilyId("lm", 4), FamilyId("t")):
        lam = LambdaSeq.of_family(fid)
        phi = _triangle_series(lam, bound)
        prod = phi
        for i in range(1, fid.m):
            prod = prod * _triangle_series(_shifted(lam, i), bound)
        rhs = (prod * lam.weight(0)).shift(1) + 1
        yield from series_pairs(fid.label(), phi, rhs)


@register("eq-1.44", "moment-equality", "s1")
def _eq_1_44(bound):
    """c(2n,0) = lambda_0 sum b(2k,0) c(2n-2-2k,0)."""
    for fid in (FamilyId("l"), FamilyId("u"), FamilyId("t"), FamilyId("fq")):
        lam = LambdaSeq.of_family(fid)
        c = triangle(lam, 2 * bound)
        b = triangle(_shifted(lam, 1), 2 * bound)
        for n in range(1, bound + 1):
            rhs = sum((b(2 * k, 0) * c(2 * n - 2 - 2 * k, 0) for k in range(n)), RatFunc.coerce(0))
            yield (f"{fid.label()} n={n}", c(2 * n, 0), rhs * lam.weight(0))


@register("eq-1.45", "series-identity", "s1")
def _eq_1_45(bound):
    """Phi = 1 + lambda_0 u Phi Psi."""
    for fid in (FamilyId("l"), FamilyId("u"), FamilyId("t"), FamilyId("tc")):
        lam = LambdaSeq.of_family(fid)
        phi = _triangle_series(lam, bound)
        psi = _triangle_series(_shifted(lam, 1), bound)
        yield from series_pairs(fid.label(), phi, (phi * psi * lam.weight(0)).shift(1) + 1)
