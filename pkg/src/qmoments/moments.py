"""Moment functionals by three independent routes.

* ``triangle``: the weighted lattice-path table ``c(n,k)`` of a three-term
  family; the moment is ``c(n,0)``.
* ``expand_monomial``: back-substitution of ``x^n`` against the family's
  closed-form polynomials; works for non-orthogonal families as well.
* ``gf_moments``: a generating-function quotient of q-series.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Dict, List, Optional

from .families import FamilyId, XPoly, _coerce_id, family_closed, is_three_term, lambda_weight
from .qkernel import ONE, ZERO, MPoly, RatFunc, q_pow, to_ratfunc
from .qseries import (
    TruncSeries,
    classical_phi,
    classical_psi,
    frac_series,
    pochhammer,
    qbin,
    qint,
    qq_poch,
    series_E,
    series_F,
    series_G,
    series_G4,
)


@dataclass(frozen=True)
class LambdaSeq:
    """Step width ``m`` and down-step weights ``k -> lambda_k``."""

    m: int
    weight: Callable[[int], object]

    @classmethod
    def of_family(cls, fid) -> "LambdaSeq":
        fid = _coerce_id(fid)
        if not is_three_term(fid):
            raise ValueError(f"family {fid.name!r} has no three-term recurrence")
        return cls(fid.m, lambda k: lambda_weight(fid, k))

    @classmethod
    def constant(cls, m: int, first, rest) -> "LambdaSeq":
        return cls(m, lambda k: first if k == 0 else rest)


class CoeffTriangle:
    """Table ``c(n,k)`` for ``0 <= k <= n <= N``."""

    def __init__(self, m: int, rows: List[list]):
        self.m = m
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows) - 1

    def __call__(self, n: int, k: int):
        if k < 0 or k > n:
            return self.rows[0][0] * 0
        return self.rows[n][k]

    def moments(self) -> list:
        """``c(m*n, 0)`` for every ``m*n <= N``."""
        return [self.rows[j][0] for j in range(0, self.size + 1, self.m)]

    def congruence_holds(self) -> bool:
        """``c(n,k) = 0`` unless ``n - k`` is a multiple of ``m``."""
        return all(
            not self.rows[n][k]
            for n in range(self.size + 1)
            for k in range(n + 1)
            if (n - k) % self.m
        )


def triangle(lam: LambdaSeq, N: int, one=ONE) -> CoeffTriangle:
    """``c(n,k) = c(n-1,k-1) + lambda_k c(n-1,k+m-1)``, ``c(0,k) = [k=0]``."""
    zero = one - one
    m = lam.m
    weights = [lam.weight(k) for k in range(N + 1)]
    rows = [[one]]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            v = prev[k - 1] if k >= 1 else zero
            j = k + m - 1
            if j <= n - 1 and prev[j]:
                v = v + weights[k] * prev[j]
            row.append(v)
        rows.append(row)
    return CoeffTriangle(m, rows)


def family_triangle(fid, N: int) -> CoeffTriangle:
    return triangle(LambdaSeq.of_family(fid), N)


@lru_cache(maxsize=None)
def _basis(fid: FamilyId, n: int) -> tuple:
    return tuple(family_closed(fid, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def expand_monomial(fid, n: int) -> Dict[int, RatFunc]:
    """Coefficients ``a_k`` with ``x^n = sum a_k p_k`` by triangular back-substitution."""
    fid = _coerce_id(fid)
    basis = _basis(fid, n)
    rest = XPoly.monomial(n)
    out: Dict[int, RatFunc] = {}
    for k in range(n, -1, -1):
        c = rest.coeff(k)
        if not c:
            continue
        p = basis[k]
        if p.degree() != k:
            raise ValueError(f"{fid.label()} p_{k} has degree {p.degree()}")
        a = c / p.leading()
        out[k] = a
        rest = rest - p * a
    if rest:
        raise ArithmeticError("back-substitution left a remainder")
    return dict(sorted(out.items()))


def moment(fid, n: int) -> RatFunc:
    """``Lambda(x^n)``: the ``p_0`` coefficient of the expansion of ``x^n``."""
    fid = _coerce_id(fid)
    value = expand_monomial(fid, n).get(0, ZERO)
    if is_three_term(fid) and n % fid.m:
        if value:
            raise ArithmeticError(f"moment of x^{n} should vanish for step width {fid.m}")
    return value


def functional_on_poly(fid, p: XPoly) -> RatFunc:
    """Linear extension of ``moment`` to an arbitrary polynomial in x."""
    fid = _coerce_id(fid)
    acc = ZERO
    for k, c in p.items():
        mk = moment(fid, k)
        if mk:
            acc = acc + c * mk
    return acc


def moments_by_route(fid, N: int, route: str) -> list:
    """``Lambda(x^(m n))`` for ``n = 0..N`` via ``triangle``, ``expand`` or ``series``."""
    fid = _coerce_id(fid)
    m = fid.m
    if route == "triangle":
        return family_triangle(fid, m * N).moments()
    if route == "expand":
        return [moment(fid, m * n) for n in range(N + 1)]
    if route == "series":
        return list(gf_moments(fid, N).coeffs)
    raise ValueError(f"unknown route {route!r}")


# q-Catalan numbers ------------------------------------------------------

def qcatalan_convolution(N: int, m: int) -> List[RatFunc]:
    """``C(u) = 1 + u C(u) C(qu) ... C(q^(m-1) u)`` solved coefficient by coefficient."""
    if m < 1:
        raise ValueError("m must be at least 1")
    c: List[RatFunc] = [ONE]
    for n in range(1, N + 1):
        # coefficient of u^(n-1) in the product of the scaled series
        prod = [ONE] + [ZERO] * (n - 1)
        for j in range(m):
            factor = [c[i] * q_pow(j * i) for i in range(n)]
            new = []
            for t in range(n):
                acc = ZERO
                for i in range(t + 1):
                    if prod[i] and factor[t - i]:
                        acc = acc + prod[i] * factor[t - i]
                new.append(acc)
            prod = new
        c.append(prod[n - 1])
    return c


def qcatalan_series(N: int, m: int) -> TruncSeries:
    """``E(-qu)/E(-u)`` with the ``m``-dependent exponential series."""
    E = series_E(m, N)
    return E.scale(-q_pow(1)) / E.scale(-ONE)


def qcatalan_carlitz(N: int, m: int = 2) -> List[RatFunc]:
    """``C_n^(m)(q)`` for ``n = 0..N``; the convolution and the series quotient must agree."""
    conv = qcatalan_convolution(N, m)
    ser = list(qcatalan_series(N, m).coeffs)
    for n, (a, b) in enumerate(zip(conv, ser)):
        if a != b:
            raise RuntimeError(f"q-Catalan routes disagree at n={n}: {a} vs {b}")
    return conv


def andrews_catalan(n: int) -> RatFunc:
    """``[2n,n]/[n+1] * q^n / ((-q;q)_n (-q^2;q)_n)``."""
    return qbin(2 * n, n) / qint(n + 1) * q_pow(n) / (
        pochhammer(-q_pow(1), n) * pochhammer(-q_pow(2), n)
    )


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def fuss_catalan(m: int, n: int) -> int:
    return comb(m * n, n) // ((m - 1) * n + 1)


# generating functions ---------------------------------------------------

def _classical_gf(fid: FamilyId, order: int) -> TruncSeries:
    m = fid.m
    name = fid.name
    one = frac_series([1] + [0] * order)
    if name in ("f", "fm"):
        return classical_phi(m, order)
    if name == "l":
        return (one - classical_phi(2, order).shift(1) * 2).inverse()
    if name == "lm":
        return classical_psi(m, order)
    if name == "Lm":
        return (one - (classical_phi(m, order) ** (m - 1)).shift(1) * 2).inverse()
    quarter = classical_phi(2, order).scale(Fraction(1, 4))
    if name == "uc":
        return quarter
    if name == "tc":
        return (one - quarter.shift(1) * Fraction(1, 2)).inverse()
    raise ValueError(name)


def gf_moments(fid, order: int) -> TruncSeries:
    """Generating function ``sum Lambda(x^(m n)) u^n`` as a series quotient."""
    fid = _coerce_id(fid)
    name = fid.name
    if fid.spec.classical:
        return _classical_gf(fid, order).map(to_ratfunc)
    q1, q2 = q_pow(1), q_pow(2)
    if name == "fq":
        return qcatalan_series(order, fid.m)
    if name == "fs":
        return qcatalan_series(order, fid.m).scale(fid.sval())
    if name == "u":
        return series_G(order, z=-q2, scale=-q2) / series_G(order, z=-q1, scale=-q1)
    if name == "t":
        return series_G4(order, scale=q2) / series_G4(order, scale=q1)
    if name == "fz":
        z = fid.zval()
        return series_G(order, z=q1 * z, scale=-q2) / series_G(order, z=z, scale=-q1)
    if name == "lz":
        z = fid.zval()
        return series_G(order, z=z, scale=-q2) / series_G(order, z=z, scale=-q1)
    raise ValueError(f"family {name!r} has no generating-function quotient")


def has_series_route(fid) -> bool:
    fid = _coerce_id(fid)
    return fid.spec.classical or fid.name in ("fq", "fs", "u", "t", "fz", "lz")


# Cantero-Iserles ----------------------------------------------------------

def cantero_iserles(N: int, z=None) -> List[RatFunc]:
    """``a_n`` from ``sum_j a_(n-j) / ((q;q)_j (z;q)_j) = q^n / ((q;q)_n (z;q)_n)``."""
    z = RatFunc.var("z") if z is None else to_ratfunc(z)
    w = [ONE]
    poch = ONE
    for j in range(1, N + 1):
        poch = poch * (1 - q_pow(j - 1) * z)
        w.append(ONE / (qq_poch(j) * poch))
    a = [ONE]
    for n in range(1, N + 1):
        acc = q_pow(n) * w[n]
        for j in range(1, n + 1):
            acc = acc - a[n - j] * w[j]
        a.append(acc)
    return a


def cantero_iserles_series(N: int, z=None) -> TruncSeries:
    """``F(qu, z) / F(u, z)``."""
    z = RatFunc.var("z") if z is None else to_ratfunc(z)
    return series_F(N, z=z, scale=q_pow(1)) / series_F(N, z=z)


def cantero_iserles_limit(n: int) -> RatFunc:
    """``(-1)^n C_(n-1) z^(n-1) / (1-z)^(2n-1)`` for ``n >= 1``."""
    z = RatFunc.var("z")
    return to_ratfunc((-1) ** n * catalan(n - 1)) * z ** (n - 1) / (1 - z) ** (2 * n - 1)
