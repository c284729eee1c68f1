"""Families with an extra parameter z and their G/F series quotients.

Checks flagged ``zgeneric`` take the z value as an argument.  They only use
``+ - * /`` on it, so the runner can pass the symbol ``z``, a degree tracker,
or a rational sample point.
"""
from __future__ import annotations

from ..families import FamilyId, family_closed, family_recur
from ..moments import LambdaSeq, andrews_catalan, cantero_iserles, cantero_iserles_limit, triangle
from ..qkernel import ONE, ZERO, MPoly, RatFunc, limit_q1, q_pow
from ..qseries import TruncSeries, binom2, pochhammer, q_binomial_base, qbin, qq_poch, series_F, series_G
from .registry import register, series_pairs

Q1, Q2, Q3 = q_pow(1), q_pow(2), q_pow(3)


def _zpoch(z, n: int):
    """``(z; q)_n`` for any z-domain value."""
    acc = ONE
    for j in range(n):
        acc = acc * (1 - q_pow(j) * z)
    return acc


def _G(order, z, scale=ONE):
    return series_G(order, z=z, scale=scale)


def _F(order, z, scale=ONE):
    return series_F(order, z=z, scale=scale)


def _lam_f(z):
    """``lambda_k = q^(k+1) / ((1-q^k z)(1-q^(k+1) z))``."""
    return lambda k: q_pow(k + 1) / ((1 - q_pow(k) * z) * (1 - q_pow(k + 1) * z))


def _lam_l(z):
    def weight(k):
        if k == 0:
            return Q1 / (1 - z)
        return q_pow(k + 1) / ((1 - q_pow(k - 1) * z) * (1 - q_pow(k) * z))

    return weight


def _phi(weight, order: int) -> TruncSeries:
    """Moment generating series ``sum c(2n,0) u^n`` of the lattice-path triangle."""
    return TruncSeries(triangle(LambdaSeq(2, weight), 2 * order).moments())


def _psi(weight, order: int) -> TruncSeries:
    """The same series for the shifted weights ``lambda_(k+1)``."""
    return _phi(lambda k: weight(k + 1), order)


def _phi_f(order, z):
    return _phi(_lam_f(z), order)


def _psi_quot(order, z, scale=ONE):
    """``psi(scale*u, z) = G(q scale u, qz) / G(scale u, z)``."""
    return _G(order, Q1 * z, Q1 * scale) / _G(order, z, scale)


def _one(order):
    return TruncSeries.constant(ONE, order)


@register("eq-5.1", "poly-identity", "s5", cap=10)
def _eq_5_1(bound):
    """Closed coefficients of f_n(x,z,q) against the three-term recurrence."""
    fid = FamilyId("fz")
    for n in range(bound + 1):
        yield (f"n={n}", family_closed(fid, n), family_recur(fid, n))


@register("eq-5.1-spec", "poly-identity", "s5", cap=10)
def _eq_5_1_spec(bound):
    """f_n(x,-q,q) = u_n(x,q) and f_n(x,0,q) = f^(2)_n(x,q,q)."""
    for n in range(bound + 1):
        yield (f"z=-q n={n}", family_closed(FamilyId("fz", z=-Q1), n), family_closed(FamilyId("u"), n))
        yield (f"z=0 n={n}", family_closed(FamilyId("fz", z=0), n), family_closed(FamilyId("fs", 2, s=Q1), n))


@register("eq-5.2", "series-identity", "s5", zgeneric=True)
def _eq_5_2(bound, z):
    """Phi_f(u,z) = 1 + q u/((1-z)(1-qz)) Phi_f(u,z) Phi_f(qu,qz), with Psi_f(u,z) = Phi_f(qu,qz)."""
    phi = _phi_f(bound, z)
    shifted = _phi_f(bound, Q1 * z).scale_u(1)
    yield from series_pairs("Psi", _psi(_lam_f(z), bound), shifted)
    c = Q1 / ((1 - z) * (1 - Q1 * z))
    yield from series_pairs("Phi", phi, (phi * shifted).shift(1) * c + 1)


@register("eq-5.3", "limit", "s5", cap=8)
def _eq_5_3(bound):
    """At q = 1 the coefficients of Phi_f(u,z) become C_n / (1-z)^(2n)."""
    from ..moments import catalan

    z = RatFunc.var("z")
    phi = _phi_f(bound, z)
    for n in range(bound + 1):
        yield (f"u^{n}", limit_q1(phi[n]), RatFunc.coerce(catalan(n)) / (1 - z) ** (2 * n))


@register("eq-5.6", "series-identity", "s5", zgeneric=True)
def _eq_5_6(bound, z):
    """psi = 1 - u/((1-z)(1-qz)) psi(u,z) psi(qu,qz), via the G difference identity."""
    c = ONE / ((1 - z) * (1 - Q1 * z))
    diff = _G(bound, Q1 * z, Q1) - _G(bound, z)
    yield from series_pairs("G difference", diff, -(_G(bound, Q2 * z, Q2).shift(1) * c))
    psi = _psi_quot(bound, z)
    psi_q = _psi_quot(bound, Q1 * z, Q1)
    yield from series_pairs("psi", psi, 1 - (psi * psi_q).shift(1) * c)


@register("eq-5.7", "series-identity", "s5", zgeneric=True)
def _eq_5_7(bound, z):
    """Phi_f(u,z) = psi(-qu,z) = G(-q^2 u, qz) / G(-qu, z)."""
    yield from series_pairs("", _phi_f(bound, z), _G(bound, Q1 * z, -Q2) / _G(bound, z, -Q1))


def _psi_tilde_quot(order, z):
    """``psi(uz, z) = G(quz, qz) / G(uz, z)``."""
    return _G(order, Q1 * z, Q1 * z) / _G(order, z, z)


@register("eq-5.8", "series-identity", "s5", zgeneric=True)
def _eq_5_8(bound, z):
    """psi~(u,z) = psi(uz,z) satisfies psi~ = 1 - uz/((1-z)(1-qz)) psi~(u,z) psi~(u,qz)."""
    pt = _psi_tilde_quot(bound, z)
    yield from series_pairs("scaled psi", pt, _psi_quot(bound, z).scale(z))
    c = z / ((1 - z) * (1 - Q1 * z))
    yield from series_pairs("functional", pt, 1 - (pt * _psi_tilde_quot(bound, Q1 * z)).shift(1) * c)


def _solve_psi_tilde(order: int, z) -> list:
    """Coefficients of the solution of the psi~ functional equation, built without G.

    ``a(n, k)`` is the n-th coefficient at ``q^k z``.
    """
    memo = {}

    def a(n, k):
        key = (n, k)
        if key not in memo:
            if n == 0:
                memo[key] = ONE
            else:
                w = q_pow(k) * z
                acc = ZERO
                for i in range(n):
                    acc = acc + a(i, k) * a(n - 1 - i, k + 1)
                memo[key] = -(w / ((1 - w) * (1 - Q1 * w))) * acc
        return memo[key]

    return [a(n, 0) for n in range(order + 1)]


@register("eq-5.9", "series-identity", "s5", zgeneric=True)
def _eq_5_9(bound, z):
    """The unique solution of the psi~ functional equation is G(quz,qz)/G(uz,z)."""
    yield from series_pairs("", TruncSeries(_solve_psi_tilde(bound, z)), _psi_tilde_quot(bound, z))


@register("eq-5.11", "poly-identity", "s5", cap=10)
def _eq_5_11(bound):
    """Closed coefficients of l_n(x,z,q) against the three-term recurrence."""
    fid = FamilyId("lz")
    for n in range(bound + 1):
        yield (f"n={n}", family_closed(fid, n), family_recur(fid, n))


@register("eq-5.10", "poly-identity", "s5", cap=10)
def _eq_5_10(bound):
    """lambda_0 = q/(1-z), lambda_n = q^(n+1)/((1-q^(n-1) z)(1-q^n z)), read off the closed forms of l_n(x,z,q)."""
    fid = FamilyId("lz")
    lam = _lam_l(RatFunc.var("z"))
    for n in range(2, bound + 1):
        rhs = family_closed(fid, n - 1).mul_x(1) - family_closed(fid, n - 2) * lam(n - 2)
        yield (f"n={n}", family_closed(fid, n), rhs)


@register("eq-5.11-spec", "poly-identity", "s5", cap=10)
def _eq_5_11_spec(bound):
    """l_n(x,-q,q) = t_n(x,q)."""
    for n in range(bound + 1):
        yield (f"n={n}", family_closed(FamilyId("lz", z=-Q1), n), family_closed(FamilyId("t"), n))


@register("eq-5.12", "series-identity", "s5", zgeneric=True)
def _eq_5_12(bound, z):
    """Phi_l = 1 + q u/(1-z) Phi_l Psi_l."""
    phi = _phi(_lam_l(z), bound)
    psi = _psi(_lam_l(z), bound)
    yield from series_pairs("", phi, (phi * psi).shift(1) * (Q1 / (1 - z)) + 1)


@register("eq-5.13", "series-identity", "s5", zgeneric=True)
def _eq_5_13(bound, z):
    """Psi_l(u,z) = 1 + q^2 u/((1-z)(1-qz)) Psi_l(u,z) Psi_l(qu,qz)."""
    psi = _psi(_lam_l(z), bound)
    psi_q = _psi(_lam_l(Q1 * z), bound).scale_u(1)
    c = Q2 / ((1 - z) * (1 - Q1 * z))
    yield from series_pairs("", psi, (psi * psi_q).shift(1) * c + 1)


@register("eq-5.14", "series-identity", "s5", zgeneric=True)
def _eq_5_14(bound, z):
    """Psi_l(u,z) = Phi_f(qu,z) = G(-q^3 u, qz) / G(-q^2 u, z)."""
    psi = _psi(_lam_l(z), bound)
    yield from series_pairs("Phi_f(qu)", psi, _phi_f(bound, z).scale_u(1))
    yield from series_pairs("G quotient", psi, _G(bound, Q1 * z, -Q3) / _G(bound, z, -Q2))


@register("eq-5.15", "series-identity", "s5", zgeneric=True)
def _eq_5_15(bound, z):
    """Phi_l(u,z) = G(-q^2 u, z) / G(-qu, z), via G(qu,z) - G(u,z) = -u/(1-z) G(q^2 u, qz)."""
    diff = _G(bound, z, Q1) - _G(bound, z)
    yield from series_pairs("G difference", diff, -(_G(bound, Q1 * z, Q2).shift(1) / (1 - z)))
    yield from series_pairs("Phi_l", _phi(_lam_l(z), bound), _G(bound, z, -Q2) / _G(bound, z, -Q1))
    t_mom = TruncSeries(triangle(LambdaSeq.of_family(FamilyId("t")), 2 * bound).moments())
    yield from series_pairs("z=-q", _G(bound, -Q1, -Q2) / _G(bound, -Q1, -Q1), t_mom)


def _varphi(order, z):
    """``F(u, qz) / F(u, z)``."""
    return _F(order, Q1 * z) / _F(order, z)


@register("eq-5.18", "series-identity", "s5", zgeneric=True)
def _eq_5_18(bound, z):
    """phi(u,z) = 1 - uz/((1-z)(1-qz)) phi(u,z) phi(u,qz), via the F difference in z."""
    c = z / ((1 - z) * (1 - Q1 * z))
    yield from series_pairs("F difference", _F(bound, Q1 * z) - _F(bound, z), -(_F(bound, Q2 * z).shift(1) * c))
    vp = _varphi(bound, z)
    yield from series_pairs("phi", vp, 1 - (vp * _varphi(bound, Q1 * z)).shift(1) * c)


@register("eq-5.19", "series-identity", "s5", zgeneric=True)
def _eq_5_19(bound, z):
    """F(u,qz)/F(u,z) = G(quz,qz)/G(uz,z)."""
    yield from series_pairs("", _varphi(bound, z), _psi_tilde_quot(bound, z))


def _z2_poch(n: int, z):
    """``(q^n z^2; q)_n``."""
    acc = ONE
    for j in range(n):
        acc = acc * (1 - q_pow(n + j) * z * z)
    return acc


@register("eq-5.20", "series-identity", "s5", zgeneric=True)
def _eq_5_20(bound, z):
    """F(u,qz) G(uz,z) = F(u,z) G(quz,qz) = sum (q^n z^2;q)_n u^n / ((z;q)_n (qz;q)_n (q;q)_n)."""
    a = _F(bound, Q1 * z) * _G(bound, z, z)
    b = _F(bound, z) * _G(bound, Q1 * z, Q1 * z)
    closed = TruncSeries(
        [_z2_poch(n, z) / (_zpoch(z, n) * _zpoch(Q1 * z, n) * qq_poch(n)) for n in range(bound + 1)]
    )
    yield from series_pairs("first", a, closed)
    yield from series_pairs("second", b, closed)
    for n in range(bound + 1):
        zn, zqn = _zpoch(z, n), _zpoch(Q1 * z, n)
        s1 = ZERO
        s2 = ZERO
        for k in range(n + 1):
            zk = z ** k if k else ONE
            s1 = s1 + qbin(n, k) * q_pow(k * k) * zk * zn * zqn / (_zpoch(z, n - k) * _zpoch(Q1 * z, k))
            s2 = s2 + qbin(n, k) * q_pow(k * k - k) * zk * zn * zqn / (_zpoch(Q1 * z, n - k) * _zpoch(z, k))
        yield (f"sum one n={n}", s1, _z2_poch(n, z))
        yield (f"sum two n={n}", s2, _z2_poch(n, z))


@register("eq-5.21", "series-identity", "s5", zgeneric=True)
def _eq_5_21(bound, z):
    """Phi_f(u,z) = F(-qu/z, qz) / F(-qu/z, z)."""
    scale = -(Q1 / z)
    yield from series_pairs("", _phi_f(bound, z), _F(bound, Q1 * z, scale) / _F(bound, z, scale))


def _andrews(order):
    return TruncSeries.from_function(order, andrews_catalan)


def _mq2_poch(n: int) -> RatFunc:
    """``(-q^2; q)_n``."""
    return RatFunc.coerce(pochhammer(-MPoly.var("q", 2), n))


def _q2q2(n: int) -> RatFunc:
    """``(q^2; q^2)_n``."""
    return RatFunc.coerce(pochhammer(MPoly.var("q", 2), n, 2))


@register("eq-5.22", "series-identity", "s5")
def _eq_5_22(bound):
    """Andrews C(u) = Phi_f(u,-q) = F(u,-q^2)/F(u,-q) = G(-q^2 u,-q^2)/G(-qu,-q), with F(u,-q) G(-u,-q) = 1."""
    c = _andrews(bound)
    yield from series_pairs("Phi_f(u,-q)", _phi_f(bound, -Q1), c)
    yield from series_pairs("F quotient", _F(bound, -Q2) / _F(bound, -Q1), c)
    yield from series_pairs("G quotient", _G(bound, -Q2, -Q2) / _G(bound, -Q1, -Q1), c)
    yield from series_pairs("F G", _F(bound, -Q1) * _G(bound, -Q1, -ONE), _one(bound))
    p1 = TruncSeries([ONE / (_mq2_poch(n) * qq_poch(n)) for n in range(bound + 1)])
    p2 = TruncSeries([q_pow(n * n - n) * (-1) ** n / _q2q2(n) for n in range(bound + 1)])
    yield from series_pairs("first product", p1 * p2, c)
    # F(qu,-q) = 1/G(-qu,-q) has denominators (q^2;q^2)_n
    p3 = TruncSeries([q_pow(n) / _q2q2(n) for n in range(bound + 1)])
    p4 = TruncSeries([q_pow(n * n + n) * (-1) ** n / (_mq2_poch(n) * qq_poch(n)) for n in range(bound + 1)])
    yield from series_pairs("second product", p3 * p4, c)


def _qbin_q2(n: int, k: int) -> RatFunc:
    return RatFunc.coerce(q_binomial_base(n, k, 2))


@register("eq-5.23", "moment-equality", "s5", cap=8)
def _eq_5_23(bound):
    """Two finite q^2-binomial sums for the Andrews q-Catalan numbers."""
    for n in range(bound + 1):
        pre = (1 + Q1) / _q2q2(n)
        a = ZERO
        b = ZERO
        for k in range(n + 1):
            w = _qbin_q2(n, k) / (1 + q_pow(k + 1))
            a = a + w * q_pow(2 * binom2(n - k)) * (-1) ** (n - k)
            b = b + w * q_pow(k * k) * (-1) ** k
        target = andrews_catalan(n)
        yield (f"first n={n}", pre * a, target)
        yield (f"second n={n}", pre * q_pow(n) * b, target)


@register("eq-5.24", "series-identity", "s5", cap=8)
def _eq_5_24(bound):
    """a_n by forward substitution equal the coefficients of F(qu,z)/F(u,z)."""
    z = RatFunc.var("z")
    a = cantero_iserles(bound, z)
    ser = _F(bound, z, Q1) / _F(bound, z)
    for n in range(bound + 1):
        yield (f"n={n}", a[n], ser[n])


@register("eq-5.25", "limit", "s5", cap=6)
def _eq_5_25(bound):
    """lim_(q->1) a_n(z,q) = (-1)^n C_(n-1) z^(n-1) / (1-z)^(2n-1)."""
    a = cantero_iserles(bound)
    for n in range(1, bound + 1):
        yield (f"n={n}", limit_q1(a[n]), cantero_iserles_limit(n))


@register("eq-5.26", "series-identity", "s5", cap=8, zgeneric=True)
def _eq_5_26(bound, z):
    """(sum a_k u^k) F(u,z) = F(qu,z), with a_k from the forward substitution."""
    w = [ONE / (qq_poch(j) * _zpoch(z, j)) for j in range(bound + 1)]
    a = [ONE]
    for n in range(1, bound + 1):
        acc = q_pow(n) * w[n]
        for j in range(1, n + 1):
            acc = acc - a[n - j] * w[j]
        a.append(acc)
    a = TruncSeries(a)
    yield from series_pairs("", (a * _F(bound, z)).truncate(bound), _F(bound, z, Q1))


@register("eq-5.27", "series-identity", "s5", zgeneric=True)
def _eq_5_27(bound, z):
    """F(qu,z)/F(u,z) = 1 - u/(1-z) phi(u,z), via F(qu,z) - F(u,z) = -u/(1-z) F(u,qz)."""
    diff = _F(bound, z, Q1) - _F(bound, z)
    yield from series_pairs("F difference", diff, -(_F(bound, Q1 * z).shift(1) / (1 - z)))
    lhs = _F(bound, z, Q1) / _F(bound, z)
    yield from series_pairs("quotient", lhs, 1 - _varphi(bound, z).shift(1) / (1 - z))
