"""Carlitz-type q-Fibonacci family and its q-Catalan moments."""
from __future__ import annotations

from ..families import FamilyId, family_closed, family_recur
from ..moments import family_triangle, moment, qcatalan_carlitz, qcatalan_convolution, qcatalan_series
from ..qkernel import ONE, ZERO, q_pow
from ..qseries import TruncSeries, binom2, qbin, series_E
from .registry import register, series_pairs


def _triangle_series(m: int, order: int) -> TruncSeries:
    return TruncSeries(family_triangle(FamilyId("fq", m), m * order).moments())


def _inv_neg_poch_qinv(length: int, order: int, scale=ONE) -> TruncSeries:
    """Series of ``1 / (-scale*u; q^-1)_length``."""
    zero = ZERO
    acc = TruncSeries([ONE] + [zero] * order)
    for j in range(length):
        acc = acc * TruncSeries([ONE, scale * q_pow(-j)] + [zero] * (order - 1)).truncate(order)
    return acc.inverse()


@register("eq-2.1", "poly-identity", "s2", cap=10)
def _eq_2_1(bound):
    """Closed coefficient sum (exponent m*binom(k,2)) against the recurrence, m = 1..4."""
    for m in range(1, 5):
        fid = FamilyId("fq", m)
        top = bound if m <= 2 else min(bound, 8)
        for n in range(top + 1):
            yield (f"m={m},n={n}", family_closed(fid, n), family_recur(fid, n))


@register("eq-2.2", "poly-identity", "s2", cap=10)
def _eq_2_2(bound):
    """f_n = x f_(n-1) - q^(n-m) f_(n-m), applied to the closed forms, m = 1..4."""
    for m in range(1, 5):
        fid = FamilyId("fq", m)
        top = bound if m <= 2 else min(bound, 8)
        for n in range(m, top + 1):
            rhs = family_closed(fid, n - 1).mul_x(1) - family_closed(fid, n - m) * q_pow(n - m)
            yield (f"m={m},n={n}", family_closed(fid, n), rhs)


@register("eq-2.3", "series-identity", "s2")
def _eq_2_3(bound):
    """C(u) = 1 + u C(u) C(qu) ... C(q^(m-1) u) with C from the triangle, m = 1..3."""
    for m in range(1, 4):
        c = _triangle_series(m, bound)
        prod = c
        for j in range(1, m):
            prod = prod * c.scale_u(j)
        yield from series_pairs(f"m={m}", c, prod.shift(1) + 1)


@register("eq-2.4", "series-identity", "s2")
def _eq_2_4(bound):
    """Moment series equals E(-qu)/E(-u), m = 1..3."""
    for m in range(1, 4):
        yield from series_pairs(f"m={m}", _triangle_series(m, bound), qcatalan_series(bound, m))


@register("eq-2.5", "series-identity", "s2")
def _eq_2_5(bound):
    """E(u) - E(qu) = u E(q^m u), m = 1..4."""
    for m in range(1, 5):
        e = series_E(m, bound)
        yield from series_pairs(f"m={m}", e - e.scale_u(1), e.scale_u(m).shift(1))


@register("eq-2.6", "moment-equality", "s2")
def _eq_2_6(bound):
    """C_n(q) = sum q^k C_k C_(n-1-k) against the orthogonality moments."""
    conv = qcatalan_convolution(bound, 2)
    tri = family_triangle(FamilyId("fq", 2), 2 * bound)
    for n in range(bound + 1):
        yield (f"n={n}", conv[n], tri(2 * n, 0))
    carlitz = qcatalan_carlitz(bound, 2)
    for n in range(bound + 1):
        yield (f"series n={n}", carlitz[n], moment(FamilyId("fq", 2), 2 * n))


@register("eq-2.7", "annihilation", "s2", cap=8)
def _eq_2_7(bound):
    """sum (-1)^k q^(2 binom(k,2)) [n+1-k,k] C_(n-k)(q) = 0 for n >= 1."""
    c = qcatalan_convolution(bound, 2)
    for n in range(1, bound + 1):
        acc = ZERO
        for k in range(n + 1):
            acc = acc + q_pow(2 * binom2(k)) * qbin(n + 1 - k, k) * c[n - k] * (-1) ** k
        yield (f"n={n}", acc, 0)


@register("eq-2.8", "annihilation", "s2", cap=8)
def _eq_2_8(bound):
    """sum (-1)^k q^(m binom(k,2)) [1+(m-1)(n-k),k] C^(m)_(n-k)(q) = 0 for n >= 1, m = 1..3."""
    for m in range(1, 4):
        c = qcatalan_convolution(bound, m)
        for n in range(1, bound + 1):
            acc = ZERO
            for k in range(n + 1):
                acc = acc + q_pow(m * binom2(k)) * qbin(1 + (m - 1) * (n - k), k) * c[n - k] * (-1) ** k
            yield (f"m={m},n={n}", acc, 0)


def _inverse_series_identity(m: int, bound: int):
    c = qcatalan_convolution(bound, m)
    acc = TruncSeries([ZERO] * (bound + 1))
    for n in range(bound + 1):
        term = _inv_neg_poch_qinv(m * n + 1, bound).shift(n) * (q_pow(-m * binom2(n)) * c[n])
        acc = acc + term
    return acc


@register("eq-2.9", "series-identity", "s2", cap=8)
def _eq_2_9(bound):
    """sum q^(-2 binom(n,2)) u^n C_n(q) / (-u; q^-1)_(2n+1) = 1."""
    yield from series_pairs("", _inverse_series_identity(2, bound), TruncSeries.constant(ONE, bound))


@register("eq-2.10", "series-identity", "s2", cap=8)
def _eq_2_10(bound):
    """sum q^(-m binom(n,2)) u^n C^(m)_n(q) / (-u; q^-1)_(mn+1) = 1, m = 1..3."""
    for m in range(1, 4):
        yield from series_pairs(f"m={m}", _inverse_series_identity(m, bound), TruncSeries.constant(ONE, bound))
