"""Operator q-Fibonacci and q-Lucas families (not orthogonal)."""
from __future__ import annotations

from ..families import FamilyId, XPoly, dq, family_closed, operator_A_apply, phi_substitute
from ..moments import expand_monomial, functional_on_poly, moment
from ..qkernel import ONE, ZERO, q_pow, to_ratfunc
from ..qseries import TruncSeries, binom2, pochhammer, qbin, qint
from .registry import register, series_pairs

FQ = FamilyId("F")
LQ = FamilyId("lq")


def _inv_neg_poch(n: int, length: int, order: int) -> TruncSeries:
    """Series of ``1 / (-q^(-n) u; q)_length``."""
    acc = TruncSeries([ONE] + [ZERO] * order)
    for j in range(length):
        acc = acc * TruncSeries([ONE, q_pow(j - n)] + [ZERO] * (order - 1)).truncate(order)
    return acc.inverse()


def _catalan_q(n: int):
    """``[2n,n] / [n+1]``."""
    return qbin(2 * n, n) / qint(n + 1)


@register("eq-3.1-witness", "moment-equality", "s3", cap=3, fixed=True)
def _eq_3_1_witness(bound):
    """Lambda_F(x F_3) = (q-1) q^3, so F is not orthogonal."""
    value = functional_on_poly(FQ, family_closed(FQ, 3).mul_x(1))
    yield ("x*F_3", value, to_ratfunc("(q-1)*q^3"))
    return str(value)


@register("eq-3.2", "poly-identity", "s3", cap=10)
def _eq_3_2(bound):
    """F_n = f_n(x + (1-q) D_q) 1."""
    for n in range(bound + 1):
        yield (f"n={n}", phi_substitute("f", n), family_closed(FQ, n))


@register("eq-3.4", "poly-identity", "s3", cap=10)
def _eq_3_4(bound):
    """F_n = x F_(n-1) - q^(n-1) x F_(n-3) + q^(n-1) F_(n-4) for n >= 4."""
    F = [family_closed(FQ, n) for n in range(bound + 1)]
    for n in range(4, bound + 1):
        rhs = F[n - 1].mul_x(1) - F[n - 3].mul_x(1) * q_pow(n - 1) + F[n - 4] * q_pow(n - 1)
        yield (f"n={n}", F[n], rhs)


@register("eq-3.5", "poly-identity", "s3", cap=10)
def _eq_3_5(bound):
    """x^n = sum ([n,k] - [n,k-1]) F_(n-2k)."""
    for n in range(bound + 1):
        rhs = XPoly()
        for k in range(n // 2 + 1):
            rhs = rhs + family_closed(FQ, n - 2 * k) * (qbin(n, k) - qbin(n, k - 1))
        yield (f"n={n}", XPoly.monomial(n), rhs)


@register("eq-3.6", "moment-equality", "s3", cap=10)
def _eq_3_6(bound):
    """Lambda_F(x^2n) = [2n,n] - [2n,n-1] = q^n [2n,n]/[n+1]; odd moments vanish."""
    for n in range(bound + 1):
        mom = moment(FQ, 2 * n)
        yield (f"n={n}", mom, qbin(2 * n, n) - qbin(2 * n, n - 1))
        yield (f"n={n} closed", mom, q_pow(n) * _catalan_q(n))
        yield (f"x^{2 * n + 1}", moment(FQ, 2 * n + 1), 0)


@register("eq-3.7", "series-identity", "s3", cap=8)
def _eq_3_7(bound):
    """sum c_n(q) q^(-binom(n,2)) u^n / (-q^(-n) u; q)_(2n+1) = 1."""
    acc = TruncSeries([ZERO] * (bound + 1))
    for n in range(bound + 1):
        acc = acc + _inv_neg_poch(n, 2 * n + 1, bound).shift(n) * (_catalan_q(n) * q_pow(-binom2(n)))
    yield from series_pairs("", acc, TruncSeries.constant(ONE, bound))


@register("eq-3.8", "poly-identity", "s3", cap=10)
def _eq_3_8(bound):
    """l_n(x,q) = F_n - F_(n-2) for n >= 2."""
    for n in range(2, bound + 1):
        yield (f"n={n}", family_closed(LQ, n), family_closed(FQ, n) - family_closed(FQ, n - 2))


@register("eq-3.11", "poly-identity", "s3", cap=10)
def _eq_3_11(bound):
    """l_n(x,q) = l_n(x + (1-q) D_q) 1."""
    for n in range(bound + 1):
        yield (f"n={n}", phi_substitute("l", n), family_closed(LQ, n))


@register("eq-3.12", "poly-identity", "s3", cap=10)
def _eq_3_12(bound):
    """x^n = sum [n,k] l_(n-2k)(x,q)."""
    for n in range(bound + 1):
        rhs = XPoly()
        for k in range(n // 2 + 1):
            rhs = rhs + family_closed(LQ, n - 2 * k) * qbin(n, k)
        yield (f"n={n}", XPoly.monomial(n), rhs)


@register("eq-3.13", "moment-equality", "s3", cap=10)
def _eq_3_13(bound):
    """Lambda_l(x^2n) = [2n,n]."""
    for n in range(bound + 1):
        yield (f"n={n}", moment(LQ, 2 * n), qbin(2 * n, n))


@register("eq-3.14", "series-identity", "s3", cap=8)
def _eq_3_14(bound):
    """sum [2n,n] q^(-binom(n+1,2)) u^n / (-q^(-n) u; q)_(2n+1) = sum q^(-binom(n+1,2)) u^n."""
    acc = TruncSeries([ZERO] * (bound + 1))
    for n in range(bound + 1):
        acc = acc + _inv_neg_poch(n, 2 * n + 1, bound).shift(n) * (qbin(2 * n, n) * q_pow(-binom2(n + 1)))
    rhs = TruncSeries.from_function(bound, lambda n: q_pow(-binom2(n + 1)))
    yield from series_pairs("", acc, rhs)


@register("eq-3.14-lemma", "moment-equality", "s3", cap=10)
def _eq_3_14_lemma(bound):
    """F^(m)_n = sum_k L^(m)_(n-mk), so Lambda_L(F^(m)_n) is 1 when m divides n and 0 otherwise."""
    for m in range(1, 4):
        Fm, Lm = FamilyId("Fm", m), FamilyId("Lmq", m)
        top = bound if m <= 2 else min(bound, 8)
        for n in range(top + 1):
            total = XPoly()
            for k in range(n // m + 1):
                total = total + family_closed(Lm, n - m * k)
            fn = family_closed(Fm, n)
            yield (f"m={m},n={n} sum", fn, total)
            yield (f"m={m},n={n} functional", functional_on_poly(Lm, fn), 0 if n % m else 1)
    for n in range(bound // 2 + 1):
        yield (f"lq F_{2 * n}", functional_on_poly(LQ, family_closed(FQ, 2 * n)), 1)


@register("eq-3.16-m1", "poly-identity", "s3", cap=10)
def _eq_3_16_m1(bound):
    """F^(1)_n = (x-q)(x-q^2)...(x-q^n)."""
    fid = FamilyId("Fm", 1)
    prod = XPoly.const(ONE)
    for n in range(bound + 1):
        if n:
            prod = prod * (XPoly.monomial(1) - q_pow(n))
        yield (f"n={n}", family_closed(fid, n), prod)


@register("eq-3.17", "moment-equality", "s3", cap=8)
def _eq_3_17(bound):
    """c^(2)_n(q) = q^n c_n(q)."""
    for n in range(bound + 1):
        yield (f"n={n}", moment(FamilyId("Fm", 2), 2 * n), q_pow(n) * _catalan_q(n))


def _fm_moments(m: int, bound: int):
    fid = FamilyId("Fm", m)
    return [moment(fid, m * n) for n in range(bound + 1)]


def _lm_moments(m: int, bound: int):
    fid = FamilyId("Lmq", m)
    return [moment(fid, m * n) for n in range(bound + 1)]


def _mcap(m: int, bound: int) -> int:
    return bound if m <= 2 else min(bound, 5)


@register("eq-3.18", "annihilation", "s3", cap=8)
def _eq_3_18(bound):
    """sum (-1)^k q^binom(k+1,2) [mn-(m-1)k,k] c^(m)_(n-k) = 0 for n >= 1, m = 1..3."""
    for m in range(1, 4):
        top = _mcap(m, bound)
        c = _fm_moments(m, top)
        for n in range(1, top + 1):
            acc = ZERO
            for k in range(n + 1):
                acc = acc + q_pow(binom2(k + 1)) * qbin(m * n - (m - 1) * k, k) * c[n - k] * (-1) ** k
            yield (f"m={m},n={n}", acc, 0)


def _inverse_series(values, m: int, bound: int) -> TruncSeries:
    acc = TruncSeries([ZERO] * (bound + 1))
    for n in range(bound + 1):
        acc = acc + _inv_neg_poch(n, m * n + 1, bound).shift(n) * (values[n] * q_pow(-binom2(n + 1)))
    return acc


@register("eq-3.19", "series-identity", "s3", cap=8)
def _eq_3_19(bound):
    """sum c^(m)_n q^(-binom(n+1,2)) u^n / (-q^(-n) u; q)_(mn+1) = 1, m = 1..3."""
    for m in range(1, 4):
        top = _mcap(m, bound)
        lhs = _inverse_series(_fm_moments(m, top), m, top)
        yield from series_pairs(f"m={m}", lhs, TruncSeries.constant(ONE, top))


@register("eq-3.20-m1", "poly-identity", "s3", cap=10)
def _eq_3_20_m1(bound):
    """L^(1)_n = (x-1-q^n) (x-q)...(x-q^(n-1)) for n >= 1."""
    fid = FamilyId("Lmq", 1)
    x = XPoly.monomial(1)
    for n in range(1, bound + 1):
        prod = x - 1 - q_pow(n)
        for j in range(1, n):
            prod = prod * (x - q_pow(j))
        yield (f"n={n}", family_closed(fid, n), prod)


@register("eq-3.21", "poly-identity", "s3", cap=10)
def _eq_3_21(bound):
    """L^(m)_n = F^(m)_n - F^(m)_(n-m) for n >= 1, m = 1..4."""
    for m in range(1, 5):
        top = bound if m <= 2 else min(bound, 8)
        for n in range(1, top + 1):
            rhs = family_closed(FamilyId("Fm", m), n)
            if n >= m:
                rhs = rhs - family_closed(FamilyId("Fm", m), n - m)
            yield (f"m={m},n={n}", family_closed(FamilyId("Lmq", m), n), rhs)


@register("eq-3.22", "moment-equality", "s3", cap=8)
def _eq_3_22(bound):
    """b^(2)_n = [2n,n]; b^(m)_n agree between expansion and the m=2 operator family."""
    b = _lm_moments(2, bound)
    for n in range(bound + 1):
        yield (f"m=2,n={n}", b[n], qbin(2 * n, n))
        yield (f"m=2,n={n} lq", b[n], moment(LQ, 2 * n))


@register("eq-3.23", "annihilation", "s3", cap=8)
def _eq_3_23(bound):
    """sum (-1)^k q^binom(k,2) [N,k] [mn-(m-2)k]/[N] b_(n-k) = 0, N = mn-(m-1)k, n >= 1."""
    for m in range(1, 4):
        top = _mcap(m, bound)
        b = _lm_moments(m, top)
        for n in range(1, top + 1):
            acc = ZERO
            for k in range(n + 1):
                big = m * n - (m - 1) * k
                acc = acc + q_pow(binom2(k)) * qbin(big, k) * qint(m * n - (m - 2) * k) / qint(big) * b[n - k] * (-1) ** k
            yield (f"m={m},n={n}", acc, 0)


@register("eq-3.24", "series-identity", "s3", cap=8)
def _eq_3_24(bound):
    """sum b^(m)_n q^(-binom(n+1,2)) u^n / (-q^(-n) u; q)_(mn+1) = sum q^(-binom(n+1,2)) u^n."""
    for m in range(1, 4):
        top = _mcap(m, bound)
        lhs = _inverse_series(_lm_moments(m, top), m, top)
        rhs = TruncSeries.from_function(top, lambda n: q_pow(-binom2(n + 1)))
        yield from series_pairs(f"m={m}", lhs, rhs)


@register("eq-3.3", "poly-identity", "s3", cap=10)
def _eq_3_3(bound):
    """F_n = (x + (1-q) D_q) F_(n-1) - F_(n-2), applied to the closed forms."""
    for n in range(2, bound + 1):
        rhs = operator_A_apply(family_closed(FQ, n - 1)) - family_closed(FQ, n - 2)
        yield (f"n={n}", family_closed(FQ, n), rhs)


@register("eq-3.10", "poly-identity", "s3", cap=10)
def _eq_3_10(bound):
    """l_n = (x + (1-q) D_q) l_(n-1) - lambda_(n-2) l_(n-2), lambda_0 = 2, applied to the closed forms."""
    for n in range(2, bound + 1):
        lam = 2 if n == 2 else 1
        rhs = operator_A_apply(family_closed(LQ, n - 1)) - family_closed(LQ, n - 2) * to_ratfunc(lam)
        yield (f"n={n}", family_closed(LQ, n), rhs)


def _operator_step(fid, n: int, lam) -> XPoly:
    m = fid.m
    x_prev = family_closed(fid, n - 1).mul_x(1)
    return x_prev + dq(family_closed(fid, n - m + 1)) * (1 - q_pow(1)) - family_closed(fid, n - m) * to_ratfunc(lam)


@register("eq-3.16", "poly-identity", "s3", cap=10)
def _eq_3_16(bound):
    """The closed form of F^(m)_n satisfies x p_(n-1) + (1-q) D_q p_(n-m+1) - p_(n-m), m = 1..4."""
    for m in range(1, 5):
        fid = FamilyId("Fm", m)
        top = bound if m <= 2 else min(bound, 8)
        for n in range(max(m, 1), top + 1):
            yield (f"m={m},n={n}", family_closed(fid, n), _operator_step(fid, n, 1))


@register("eq-3.20", "poly-identity", "s3", cap=10)
def _eq_3_20(bound):
    """The closed form of L^(m)_n satisfies the same operator recurrence with lambda_0 = 2, m = 1..4."""
    for m in range(1, 5):
        fid = FamilyId("Lmq", m)
        top = bound if m <= 2 else min(bound, 8)
        for n in range(max(m, 1), top + 1):
            yield (f"m={m},n={n}", family_closed(fid, n), _operator_step(fid, n, 2 if n == m else 1))


@register("eq-3.9", "poly-identity", "s3", cap=10)
def _eq_3_9(bound):
    """Closed form of l_n(x,q) against its operator recurrence."""
    from ..families import family_recur

    for n in range(bound + 1):
        yield (f"n={n}", family_closed(LQ, n), family_recur(LQ, n))
