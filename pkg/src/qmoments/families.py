"""Polynomial families in x with rational-function coefficients.

Every family in :data:`CATALOG` has two independent constructions: a closed
coefficient sum (:func:`family_closed`) and a recurrence (:func:`family_recur`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Dict, Mapping, Optional, Union

from .qkernel import ONE, ZERO, MPoly, RatFunc, limit_q1, parse, q_pow, to_ratfunc
from .qseries import binom2, pochhammer, qbin, qint

Param = Union[None, int, Fraction, RatFunc]


class XPoly:
    """Polynomial in ``x`` with :class:`RatFunc` coefficients (immutable)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Optional[Mapping[int, object]] = None):
        c = {}
        for k, v in (coeffs or {}).items():
            if k < 0:
                raise ValueError("negative power of x")
            v = to_ratfunc(v)
            if v:
                c[k] = v
        self._c = c

    @classmethod
    def monomial(cls, k: int, c=ONE) -> "XPoly":
        return cls({k: c})

    @classmethod
    def const(cls, c) -> "XPoly":
        return cls({0: c})

    @classmethod
    def from_ratfunc(cls, f) -> "XPoly":
        """Split a rational function whose denominator is free of ``x`` by powers of ``x``."""
        f = to_ratfunc(f)
        if f.den.degree("x") > 0:
            raise ValueError(f"{f} is not polynomial in x")
        buckets: Dict[int, dict] = {}
        for e, c in f.num.terms().items():
            buckets.setdefault(e[1], {})[(e[0], 0) + e[2:]] = c
        den = RatFunc.coerce(f.den)
        return cls({k: RatFunc.coerce(MPoly.from_terms(t)) / den for k, t in buckets.items()})

    @classmethod
    def parse(cls, text: str) -> "XPoly":
        return cls.from_ratfunc(parse(text))

    # inspection -------------------------------------------------------
    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def coeff(self, k: int) -> RatFunc:
        return self._c.get(k, ZERO)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def leading(self) -> RatFunc:
        return self._c[self.degree()] if self._c else ZERO

    # arithmetic -------------------------------------------------------
    def __add__(self, other) -> "XPoly":
        other = _as_xpoly(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out[k] + v if k in out else v
        return XPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> "XPoly":
        return self + (-_as_xpoly(other))

    def __rsub__(self, other) -> "XPoly":
        return _as_xpoly(other) - self

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, XPoly):
            out: Dict[int, RatFunc] = {}
            for i, a in self._c.items():
                for j, b in other._c.items():
                    t = a * b
                    out[i + j] = out[i + j] + t if i + j in out else t
            return XPoly(out)
        c = to_ratfunc(other)
        return XPoly({k: v * c for k, v in self._c.items()})

    __rmul__ = __mul__

    def __truediv__(self, c) -> "XPoly":
        c = to_ratfunc(c)
        return XPoly({k: v / c for k, v in self._c.items()})

    def mul_x(self, k: int = 1) -> "XPoly":
        return XPoly({i + k: v for i, v in self._c.items()})

    def map_coeffs(self, fn: Callable[[RatFunc], RatFunc]) -> "XPoly":
        return XPoly({k: fn(v) for k, v in self._c.items()})

    def limit_q1(self) -> "XPoly":
        return self.map_coeffs(limit_q1)

    def subs(self, assignment: Mapping[str, object]) -> "XPoly":
        return self.map_coeffs(lambda c: c.subs(assignment))

    def evaluate_x(self, value) -> RatFunc:
        """Horner evaluation at ``x = value``."""
        acc = ZERO
        value = to_ratfunc(value)
        for k in range(self.degree(), -1, -1):
            acc = acc * value + self.coeff(k)
        return acc

    # comparison and rendering -----------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            try:
                other = _as_xpoly(other)
            except TypeError:
                return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(("XPoly", str(self)))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        ordered = sorted(self._c.items(), reverse=True)
        alone = len(ordered) == 1
        for i, (k, c) in enumerate(ordered):
            neg, body = _coeff_body(c, k, alone)
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"XPoly('{self}')"

    def to_json(self) -> dict:
        return {str(k): str(v) for k, v in sorted(self._c.items(), reverse=True)}


def _as_xpoly(a) -> XPoly:
    if isinstance(a, XPoly):
        return a
    return XPoly.const(to_ratfunc(a))


def _xpow(k: int) -> str:
    return "" if k == 0 else ("x" if k == 1 else f"x^{k}")


def _coeff_body(c: RatFunc, k: int, alone: bool):
    text = str(c)
    neg = text.startswith("-")
    if neg:
        c = -c
        text = str(c)
    if k == 0:
        if not alone and c.is_polynomial() and len(c.num) > 1:
            text = "(" + text + ")"
        return neg, text
    if c == 1:
        return neg, _xpow(k)
    simple = c.is_polynomial() and len(c.num) == 1 and c.num.sorted_terms()[0][1].denominator == 1
    if simple:
        return neg, text + _xpow(k)
    return neg, "(" + text + ")" + _xpow(k)


X = XPoly.monomial(1)
XONE = XPoly.const(ONE)


def dq(p: XPoly) -> XPoly:
    """q-derivative: ``x^k -> [k] x^(k-1)``."""
    return XPoly({k - 1: c * qint(k) for k, c in p.items() if k > 0})


def sigma(p: XPoly) -> XPoly:
    """``p(x) -> p(qx)``."""
    return XPoly({k: c * q_pow(k) for k, c in p.items()})


_ONE_MINUS_Q = to_ratfunc("1-q")


def operator_A_apply(p: XPoly) -> XPoly:
    """``A p = x p + (1-q) D_q p``."""
    return p.mul_x(1) + dq(p) * _ONE_MINUS_Q


# family identifiers -----------------------------------------------------

@dataclass(frozen=True)
class FamilyId:
    """A catalog family with its step width ``m`` and optional parameters.

    ``z`` and ``s`` are ``None`` for the symbolic variable, otherwise a rational
    number or a rational function (for example ``-q``).
    """

    name: str
    m: int = 2
    z: Param = None
    s: Param = None

    def __post_init__(self):
        spec = CATALOG.get(self.name)
        if spec is None:
            raise KeyError(f"unknown family {self.name!r}; known: {', '.join(sorted(CATALOG))}")
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if not spec.variable_m and self.m != spec.default_m:
            raise ValueError(f"family {self.name!r} has fixed m={spec.default_m}")
        if self.z is not None and "z" not in spec.params:
            raise ValueError(f"family {self.name!r} takes no z parameter")
        if self.s is not None and "s" not in spec.params:
            raise ValueError(f"family {self.name!r} takes no s parameter")
        for attr in ("z", "s"):
            v = getattr(self, attr)
            if v is not None and not isinstance(v, RatFunc):
                object.__setattr__(self, attr, to_ratfunc(v))

    @classmethod
    def make(cls, name: str, m: Optional[int] = None, z: Param = None, s: Param = None) -> "FamilyId":
        spec = CATALOG.get(name)
        if spec is None:
            raise KeyError(f"unknown family {name!r}; known: {', '.join(sorted(CATALOG))}")
        return cls(name, spec.default_m if m is None else m, z, s)

    @property
    def spec(self) -> "FamilySpec":
        return CATALOG[self.name]

    def zval(self) -> RatFunc:
        return RatFunc.var("z") if self.z is None else self.z

    def sval(self) -> RatFunc:
        return RatFunc.var("s") if self.s is None else self.s

    def label(self) -> str:
        bits = [self.name]
        if self.spec.variable_m:
            bits.append(f"m={self.m}")
        if "z" in self.spec.params:
            bits.append(f"z={'z' if self.z is None else self.z}")
        if "s" in self.spec.params:
            bits.append(f"s={'s' if self.s is None else self.s}")
        return ",".join(bits)


@dataclass(frozen=True)
class FamilySpec:
    closed: Callable[[FamilyId, int], XPoly]
    recur: Callable[[FamilyId, int], XPoly]
    description: str
    default_m: int = 2
    variable_m: bool = False
    params: tuple = ()
    lam: Optional[Callable[[FamilyId, int], RatFunc]] = None
    classical: bool = False


# helpers ----------------------------------------------------------------

def _sum_terms(n: int, m: int, term: Callable[[int], RatFunc]) -> XPoly:
    return XPoly({n - m * k: term(k) for k in range(n // m + 1)})


def _c(v) -> RatFunc:
    return to_ratfunc(Fraction(v))


def _mq(k: int) -> RatFunc:
    """``(-q; q)_k``."""
    return to_ratfunc(pochhammer(MPoly.var("q") * -1, k))


def _poch_r(arg: RatFunc, k: int) -> RatFunc:
    return pochhammer(arg, k)


def _three_term(fid: FamilyId, n: int) -> XPoly:
    """``p_n = x p_(n-1) - lambda_(n-m) p_(n-m)`` with ``p_j = x^j`` for ``j < m``."""
    return _three_term_list(fid, n)[n]


@lru_cache(maxsize=None)
def _three_term_list(fid: FamilyId, n: int) -> tuple:
    lam = fid.spec.lam
    m = fid.m
    vals = []
    for j in range(n + 1):
        if j < m:
            vals.append(XPoly.monomial(j))
        else:
            vals.append(vals[j - 1].mul_x(1) - vals[j - m] * lam(fid, j - m))
    return tuple(vals)


# classical closed forms -------------------------------------------------

def _f_closed(fid, n):
    return _sum_terms(n, 2, lambda k: _c(comb(n - k, k) * (-1) ** k))


def _l_closed(fid, n):
    if n == 0:
        return XONE
    return _sum_terms(n, 2, lambda k: _c(Fraction(comb(n - k, k) * n, n - k) * (-1) ** k))


def _fm_closed(fid, n):
    m = fid.m
    return _sum_terms(n, m, lambda k: _c(comb(n - (m - 1) * k, k) * (-1) ** k))


def _lm_closed(fid, n):
    m = fid.m
    if n == 0:
        return XONE

    def term(k):
        big = n - (m - 1) * k
        return _c(Fraction(comb(big, k) * n, big) * (-1) ** k)

    return _sum_terms(n, m, term)


def _Lm_closed(fid, n):
    m = fid.m
    if n == 0:
        return XONE

    def term(k):
        big = n - (m - 1) * k
        return _c(Fraction(comb(big, k) * (n - (m - 2) * k), big) * (-1) ** k)

    return _sum_terms(n, m, term)


def _tc_closed(fid, n):
    if n == 0:
        return XONE
    return _sum_terms(n, 2, lambda k: _c(Fraction(comb(n - k, k) * n, n - k) * Fraction(-1, 4) ** k))


def _uc_closed(fid, n):
    return _sum_terms(n, 2, lambda k: _c(comb(n - k, k) * Fraction(-1, 4) ** k))


def _const_lam(first, rest):
    a, b = _c(first), _c(rest)
    return lambda fid, k: a if k == 0 else b


# q-families -------------------------------------------------------------

def _fq_closed(fid, n):
    m = fid.m
    return _sum_terms(n, m, lambda k: q_pow(m * binom2(k)) * qbin(n - (m - 1) * k, k) * (-1) ** k)


def _fs_closed(fid, n):
    m = fid.m
    s = fid.sval()
    return _sum_terms(n, m, lambda k: q_pow(m * binom2(k)) * qbin(n - (m - 1) * k, k) * (-s) ** k)


def _ls_closed(fid, n):
    m = fid.m
    s = fid.sval()
    if n == 0:
        return XONE

    def term(k):
        big = n - (m - 1) * k
        return q_pow(m * binom2(k)) * qint(n - (m - 2) * k) / qint(big) * qbin(big, k) * (-s) ** k

    return _sum_terms(n, m, term)


def _ls_recur(fid, n):
    """``l_n = f_n(x,q,s) - q^(n-m+1) s f_(n-m)(x,q,qs)`` with both f by recurrence."""
    m = fid.m
    s = fid.sval()
    if n == 0:
        return XONE
    f = _three_term(FamilyId("fs", m, s=s), n)
    if n < m:
        return f
    qs = s * q_pow(1)
    return f - _three_term(FamilyId("fs", m, s=qs), n - m) * (q_pow(n - m + 1) * s)


def _carlitz_lucas_closed(fid, n):
    s = fid.sval()
    if n == 0:
        return XONE
    return _sum_terms(
        n, 2, lambda k: q_pow(2 * binom2(k)) * qint(n) / qint(n - k) * qbin(n - k, k) * (-s) ** k
    )


def _carlitz_lucas_recur(fid, n):
    return _ls_recur(FamilyId("ls", 2, s=fid.s), n)


def _F_closed(fid, n):
    return _sum_terms(n, 2, lambda k: q_pow(binom2(k + 1)) * qbin(n - k, k) * (-1) ** k)


@lru_cache(maxsize=None)
def _F_list(n: int) -> tuple:
    vals = [XONE, X]
    for j in range(2, n + 1):
        vals.append(operator_A_apply(vals[j - 1]) - vals[j - 2])
    return tuple(vals[: n + 1])


def _F_recur(fid, n):
    return _F_list(n)[n]


def _lq_closed(fid, n):
    if n == 0:
        return XONE
    return _sum_terms(
        n, 2, lambda k: q_pow(binom2(k)) * qint(n) / qint(n - k) * qbin(n - k, k) * (-1) ** k
    )


@lru_cache(maxsize=None)
def _lq_list(n: int) -> tuple:
    vals = [XONE, X]
    for j in range(2, n + 1):
        lam = _c(2) if j == 2 else ONE
        vals.append(operator_A_apply(vals[j - 1]) - vals[j - 2] * lam)
    return tuple(vals[: n + 1])


def _lq_recur(fid, n):
    return _lq_list(n)[n]


def _Fm_closed(fid, n):
    m = fid.m
    return _sum_terms(n, m, lambda k: q_pow(binom2(k + 1)) * qbin(n - (m - 1) * k, k) * (-1) ** k)


def _Lmq_closed(fid, n):
    m = fid.m
    if n == 0:
        return XONE

    def term(k):
        big = n - (m - 1) * k
        return q_pow(binom2(k)) * qbin(big, k) * qint(n - (m - 2) * k) / qint(big) * (-1) ** k

    return _sum_terms(n, m, term)


def _solve_unitriangular(rhs: XPoly) -> XPoly:
    """Solve ``p - (1-q) D_q p = rhs`` from the top degree down."""
    coeffs: Dict[int, RatFunc] = {}
    above = ZERO
    for k in range(rhs.degree(), -1, -1):
        c = rhs.coeff(k) + (1 - q_pow(k + 1)) * above
        coeffs[k] = c
        above = c
    return XPoly(coeffs)


@lru_cache(maxsize=None)
def _operator_list(m: int, n: int, lam0: RatFunc) -> tuple:
    """``p_n = x p_(n-1) + (1-q) D_q p_(n-m+1) - lambda_(n-m) p_(n-m)``, ``lambda_k = 1`` for ``k > 0``."""
    vals: list = []
    for j in range(n + 1):
        if j < m:
            vals.append(XPoly.monomial(j))
            continue
        lam = lam0 if j == m else ONE
        tail = vals[j - 1].mul_x(1) - vals[j - m] * lam
        if m == 1:
            vals.append(_solve_unitriangular(tail))
        else:
            vals.append(tail + dq(vals[j - m + 1]) * _ONE_MINUS_Q)
    return tuple(vals)


def _Fm_recur(fid, n):
    if fid.m == 1 and n == 0:
        return XONE
    return _operator_list(fid.m, n, ONE)[n] if fid.m > 1 else _m1_operator(n, ONE)


def _Lmq_recur(fid, n):
    if fid.m == 1:
        return _m1_operator(n, _c(2))
    return _operator_list(fid.m, n, _c(2))[n]


def _m1_operator(n: int, lam0: RatFunc) -> XPoly:
    """m = 1: ``(1 - (1-q) D_q) p_n = x p_(n-1) - lambda_(n-1) p_(n-1)`` with ``p_0 = 1``."""
    p = XONE
    for j in range(1, n + 1):
        lam = lam0 if j == 1 else ONE
        p = _solve_unitriangular(p.mul_x(1) - p * lam)
    return p


def _u_closed(fid, n):
    def term(k):
        return qbin(n - k, k) * q_pow(k * k) * (-1) ** k / (_mq(k) * _poch_r(-q_pow(n + 1 - k), k))

    return _sum_terms(n, 2, term)


def _u_lam(fid, k):
    return q_pow(k + 1) / ((1 + q_pow(k + 1)) * (1 + q_pow(k + 2)))


def _t_closed(fid, n):
    if n == 0:
        return XONE

    def term(k):
        return (
            q_pow(k * k) * qint(n) / qint(n - k) * qbin(n - k, k) * (-1) ** k
            / (_mq(k) * _poch_r(-q_pow(n - k), k))
        )

    return _sum_terms(n, 2, term)


def _t_lam(fid, k):
    if k == 0:
        return q_pow(1) / (1 + q_pow(1))
    return q_pow(k + 1) / ((1 + q_pow(k)) * (1 + q_pow(k + 1)))


def _T_closed(fid, n):
    s = fid.sval()
    if n == 0:
        return XONE
    pref = _mq(n - 1)

    def term(k):
        return (
            pref * q_pow(k * k) * qint(n) / qint(n - k) * qbin(n - k, k) * s ** k
            / (_mq(k) * _poch_r(-q_pow(n - k), k))
        )

    return _sum_terms(n, 2, term)


def _T_recur(fid, n):
    s = fid.sval()
    vals = [XONE, X]
    for j in range(2, n + 1):
        vals.append(vals[j - 1].mul_x(1) * (1 + q_pow(j - 1)) + vals[j - 2] * (q_pow(j - 1) * s))
    return vals[n]


def _U_closed(fid, n):
    s = fid.sval()
    pref = _mq(n)

    def term(k):
        return pref * qbin(n - k, k) * q_pow(k * k) * s ** k / (_mq(k) * _poch_r(-q_pow(n + 1 - k), k))

    return _sum_terms(n, 2, term)


def _U_recur(fid, n):
    s = fid.sval()
    vals = [XONE, X * (1 + q_pow(1))]
    for j in range(2, n + 1):
        vals.append(vals[j - 1].mul_x(1) * (1 + q_pow(j)) + vals[j - 2] * (q_pow(j - 1) * s))
    return vals[n]


def _fz_closed(fid, n):
    z = fid.zval()

    def term(k):
        return (
            q_pow(k * k) * qbin(n - k, k) * (-1) ** k
            / (_poch_r(z, k) * _poch_r(q_pow(n - k) * z, k))
        )

    return _sum_terms(n, 2, term)


def _fz_lam(fid, k):
    z = fid.zval()
    return q_pow(k + 1) / ((1 - q_pow(k) * z) * (1 - q_pow(k + 1) * z))


def _lz_closed(fid, n):
    z = fid.zval()
    if n == 0:
        return XONE

    def term(k):
        top = qbin(n - k, k) - q_pow(n - k - 1) * z * qbin(n - k - 1, k - 1)
        return (
            q_pow(k * k) * top * (-1) ** k
            / (_poch_r(z, k) * _poch_r(q_pow(n - 1 - k) * z, k))
        )

    return _sum_terms(n, 2, term)


def _lz_lam(fid, k):
    z = fid.zval()
    if k == 0:
        return q_pow(1) / (1 - z)
    return q_pow(k + 1) / ((1 - q_pow(k - 1) * z) * (1 - q_pow(k) * z))


def _fq_lam(fid, k):
    return q_pow(k)


def _fs_lam(fid, k):
    return q_pow(k) * fid.sval()


def rogers_szego(n: int, s=None) -> XPoly:
    """``r_n(x, s) = sum [n,k] x^k s^(n-k)``."""
    s = RatFunc.var("s") if s is None else to_ratfunc(s)
    return XPoly({k: qbin(n, k) * s ** (n - k) for k in range(n + 1)})


def _rs_closed(fid, n):
    return rogers_szego(n, fid.sval())


def _rs_recur(fid, n):
    """``r_(n+1) = (x+s) r_n + (q^n - 1) x s r_(n-1)``."""
    s = fid.sval()
    vals = [XONE]
    for j in range(1, n + 1):
        nxt = vals[j - 1].mul_x(1) + vals[j - 1] * s
        if j >= 2:
            nxt = nxt + vals[j - 2].mul_x(1) * ((q_pow(j - 1) - 1) * s)
        vals.append(nxt)
    return vals[n]


CATALOG: Dict[str, FamilySpec] = {
    "f": FamilySpec(_f_closed, _three_term, "classical Fibonacci", lam=_const_lam(1, 1), classical=True),
    "l": FamilySpec(_l_closed, _three_term, "classical Lucas", lam=_const_lam(2, 1), classical=True),
    "fm": FamilySpec(_fm_closed, _three_term, "classical m-Fibonacci", variable_m=True,
                     lam=_const_lam(1, 1), classical=True),
    "lm": FamilySpec(_lm_closed, _three_term, "classical m-Lucas (lambda_0 = m)", variable_m=True,
                     lam=lambda fid, k: _c(fid.m) if k == 0 else ONE, classical=True),
    "Lm": FamilySpec(_Lm_closed, _three_term, "classical m-Lucas (lambda_0 = 2)", variable_m=True,
                     lam=_const_lam(2, 1), classical=True),
    "tc": FamilySpec(_tc_closed, _three_term, "monic Chebyshev, first kind",
                     lam=_const_lam(Fraction(1, 2), Fraction(1, 4)), classical=True),
    "uc": FamilySpec(_uc_closed, _three_term, "monic Chebyshev, second kind",
                     lam=_const_lam(Fraction(1, 4), Fraction(1, 4)), classical=True),
    "fq": FamilySpec(_fq_closed, _three_term, "Carlitz-type q-Fibonacci", variable_m=True, lam=_fq_lam),
    "fs": FamilySpec(_fs_closed, _three_term, "q-Fibonacci with parameter s", variable_m=True,
                     params=("s",), lam=_fs_lam),
    "ls": FamilySpec(_ls_closed, _ls_recur, "q-Lucas with parameter s", variable_m=True, params=("s",)),
    "carlitz_lucas": FamilySpec(_carlitz_lucas_closed, _carlitz_lucas_recur, "Carlitz q-Lucas",
                                params=("s",)),
    "F": FamilySpec(_F_closed, _F_recur, "operator q-Fibonacci"),
    "lq": FamilySpec(_lq_closed, _lq_recur, "operator q-Lucas"),
    "Fm": FamilySpec(_Fm_closed, _Fm_recur, "operator m-q-Fibonacci", variable_m=True),
    "Lmq": FamilySpec(_Lmq_closed, _Lmq_recur, "operator m-q-Lucas", variable_m=True),
    "u": FamilySpec(_u_closed, _three_term, "q-Chebyshev, second kind", lam=_u_lam),
    "t": FamilySpec(_t_closed, _three_term, "q-Chebyshev, first kind", lam=_t_lam),
    "T": FamilySpec(_T_closed, _T_recur, "bivariate q-Chebyshev, first kind", params=("s",)),
    "U": FamilySpec(_U_closed, _U_recur, "bivariate q-Chebyshev, second kind", params=("s",)),
    "fz": FamilySpec(_fz_closed, _three_term, "q-Fibonacci with parameter z", params=("z",), lam=_fz_lam),
    "lz": FamilySpec(_lz_closed, _three_term, "q-Lucas with parameter z", params=("z",), lam=_lz_lam),
    "rs": FamilySpec(_rs_closed, _rs_recur, "Rogers-Szego", params=("s",)),
}


def _coerce_id(fid) -> FamilyId:
    if isinstance(fid, FamilyId):
        return fid
    if isinstance(fid, str):
        return FamilyId.make(fid)
    raise TypeError("expected a FamilyId or a family name")


def family_closed(fid, n: int) -> XPoly:
    fid = _coerce_id(fid)
    if n < 0:
        raise ValueError("n must be non-negative")
    return fid.spec.closed(fid, n)


def family_recur(fid, n: int) -> XPoly:
    fid = _coerce_id(fid)
    if n < 0:
        raise ValueError("n must be non-negative")
    return fid.spec.recur(fid, n)


def family(fid, n: int, route: str = "closed") -> XPoly:
    if route == "closed":
        return family_closed(fid, n)
    if route == "recur":
        return family_recur(fid, n)
    raise ValueError(f"unknown route {route!r}")


def is_three_term(fid) -> bool:
    return _coerce_id(fid).spec.lam is not None


def lambda_weight(fid, k: int) -> RatFunc:
    fid = _coerce_id(fid)
    if fid.spec.lam is None:
        raise ValueError(f"family {fid.name!r} has no three-term recurrence")
    return fid.spec.lam(fid, k)


_PHI_SOURCES = {"f": "F", "l": "lq"}


def phi_substitute(classical, n: int) -> XPoly:
    """Evaluate the classical polynomial at ``x -> A = x + (1-q) D_q`` and apply it to 1."""
    fid = _coerce_id(classical)
    if fid.name not in _PHI_SOURCES:
        raise ValueError("phi_substitute supports the classical families 'f' and 'l'")
    p = family_closed(fid, n)
    acc = XPoly()
    for k in range(p.degree(), -1, -1):
        acc = operator_A_apply(acc) + p.coeff(k)
    return acc


# q -> 1 correspondences: q-family id -> classical id
def classical_partner(fid: FamilyId) -> Optional[FamilyId]:
    name = fid.name
    if name in ("fq", "Fm"):
        return FamilyId("fm", fid.m)
    if name == "F":
        return FamilyId("f")
    if name == "lq":
        return FamilyId("l")
    if name == "Lmq":
        return FamilyId("Lm", fid.m)
    if name == "u":
        return FamilyId("uc")
    if name == "t":
        return FamilyId("tc")
    if name == "fz" and fid.z == to_ratfunc("-q"):
        return FamilyId("uc")
    if name == "lz" and fid.z == to_ratfunc("-q"):
        return FamilyId("tc")
    if name == "fs" and fid.s == ONE:
        return FamilyId("fm", fid.m)
    if name == "ls" and fid.s == ONE:
        return FamilyId("Lm", fid.m)
    if name == "carlitz_lucas" and fid.s == ONE:
        return FamilyId("l")
    return None


def catalog_ids(max_m: int = 4) -> list:
    """Representative instances of every catalog entry (all m in 1..max_m where m varies)."""
    out = []
    for name, spec in CATALOG.items():
        ms = range(1, max_m + 1) if spec.variable_m else [spec.default_m]
        for m in ms:
            out.append(FamilyId(name, m))
    return out
