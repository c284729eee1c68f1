"""q-integers, Gaussian binomials, Pochhammer symbols and truncated power series in u.

Series coefficients are usually :class:`RatFunc` values, but :class:`TruncSeries`
only needs ``+ - *`` and division by its constant term, so plain ``Fraction``
coefficients (classical generating functions) and the sampling domains in
:mod:`qmoments.zdomain` work too.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .qkernel import MPoly, ONE, RatFunc, q_pow, to_ratfunc

DEFAULT_ORDER = 12


def binom2(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def q_int(n: int) -> MPoly:
    """``[n] = 1 + q + ... + q^(n-1)``; ``[0] = 0``."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return MPoly.from_terms({(i, 0, 0, 0, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> MPoly:
    """Gaussian binomial via ``[n,k] = q^k [n-1,k] + [n-1,k-1]``."""
    if n < 0 or k < 0 or k > n:
        return MPoly()
    if k == 0 or k == n:
        return MPoly.const(1)
    return MPoly.var("q", k) * q_binomial(n - 1, k) + q_binomial(n - 1, k - 1)


def q_binomial_base(n: int, k: int, base: int) -> MPoly:
    """Gaussian binomial in the base ``q^base`` (``base`` may be negative)."""
    return q_binomial(n, k).substitute_q_power(base)


def pochhammer(arg, n: int, base: int = 1):
    """``(arg; q^base)_n``; works for MPoly, RatFunc or any domain value."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    if isinstance(arg, MPoly):
        acc = MPoly.const(1)
        for j in range(n):
            acc = acc * (1 - MPoly.var("q", base * j) * arg)
        return acc
    acc = None
    for j in range(n):
        f = 1 - q_pow(base * j) * arg
        acc = f if acc is None else acc * f
    if acc is None:
        return ONE if isinstance(arg, RatFunc) else arg * 0 + 1
    return acc


@lru_cache(maxsize=None)
def qq_poch(n: int) -> RatFunc:
    """``(q;q)_n`` as a RatFunc."""
    return RatFunc.coerce(pochhammer(MPoly.var("q"), n))


def qbin(n: int, k: int) -> RatFunc:
    return RatFunc.coerce(q_binomial(n, k))


def qint(n: int) -> RatFunc:
    return RatFunc.coerce(q_int(n))


class TruncSeries:
    """Power series in ``u`` known through ``u^order``.

    Arithmetic returns a series of order ``min`` of the operand orders.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def from_function(cls, order: int, fn: Callable[[int], object]) -> "TruncSeries":
        return cls(fn(n) for n in range(order + 1))

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        zero = c - c
        return cls([c] + [zero] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def zero(self):
        return self.coeffs[0] - self.coeffs[0]

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1])

    def _lift(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        z = self.zero()
        return TruncSeries([z + other] + [z] * self.order)

    def __add__(self, other) -> "TruncSeries":
        other = self._lift(other)
        n = min(self.order, other.order)
        return TruncSeries(self.coeffs[i] + other.coeffs[i] for i in range(n + 1))

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(-c for c in self.coeffs)

    def __sub__(self, other) -> "TruncSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "TruncSeries":
        return self._lift(other) - self

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries(c * other for c in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = None
            for i in range(k + 1):
                if not a[i] or not b[k - i]:
                    continue
                t = a[i] * b[k - i]
                acc = t if acc is None else acc + t
            out.append(self.zero() if acc is None else acc)
        return TruncSeries(out)

    def __rmul__(self, other) -> "TruncSeries":
        return TruncSeries(other * c for c in self.coeffs)

    def __pow__(self, k: int) -> "TruncSeries":
        if k < 0:
            return self.inverse() ** (-k)
        acc = self._lift(self.coeffs[0] - self.coeffs[0] + 1)
        for _ in range(k):
            acc = acc * self
        return acc

    def inverse(self) -> "TruncSeries":
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        b = [inv0]
        for n in range(1, len(a)):
            acc = None
            for j in range(1, n + 1):
                if not a[j]:
                    continue
                t = a[j] * b[n - j]
                acc = t if acc is None else acc + t
            b.append(self.zero() if acc is None else -(acc * inv0))
        return TruncSeries(b)

    def __truediv__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return TruncSeries(c / other for c in self.coeffs)

    def __rtruediv__(self, other) -> "TruncSeries":
        return self._lift(other) * self.inverse()

    def scale(self, c) -> "TruncSeries":
        """Substitute ``u -> c*u``: coefficient ``n`` is multiplied by ``c^n``."""
        out = [self.coeffs[0]]
        p = None
        for a in self.coeffs[1:]:
            p = c if p is None else p * c
            out.append(a * p)
        return TruncSeries(out)

    def scale_u(self, power: int) -> "TruncSeries":
        """Substitute ``u -> q^power * u``."""
        if power == 0:
            return self
        return TruncSeries(a * q_pow(power * n) if n else a for n, a in enumerate(self.coeffs))

    def shift(self, k: int = 1) -> "TruncSeries":
        """Multiply by ``u^k`` keeping the order."""
        z = self.zero()
        return TruncSeries(([z] * k + list(self.coeffs))[: self.order + 1])

    def map(self, fn: Callable) -> "TruncSeries":
        return TruncSeries(fn(c) for c in self.coeffs)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """``self(inner(u))`` for ``inner`` with zero constant term (Horner)."""
        if inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = self._lift(self.coeffs[n]).truncate(n)
        for c in reversed(self.coeffs[:n]):
            acc = acc * inner + c
        return acc

    def first_mismatch(self, other: "TruncSeries"):
        """Index of the first differing coefficient, or ``None``."""
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return "TruncSeries([" + ", ".join(str(c) for c in self.coeffs) + "])"


def geometric(order: int, ratio=ONE) -> TruncSeries:
    """``1/(1 - ratio*u)``."""
    return TruncSeries([ONE] * (order + 1)).scale(ratio)


def series_E(m: int, order: int = DEFAULT_ORDER, corrected: bool = True) -> TruncSeries:
    """``sum q^(m*binom(n,2)) u^n / (q;q)_n``.

    With ``corrected=False`` the exponent is ``binom(n,2)`` regardless of ``m``,
    which only satisfies the functional equation
    ``E(u) - E(qu) = u E(q^m u)`` for ``m = 1``.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    w = m if corrected else 1
    return TruncSeries.from_function(order, lambda n: q_pow(w * binom2(n)) / qq_poch(n))


def series_G(order: int = DEFAULT_ORDER, z=None, scale=ONE) -> TruncSeries:
    """``G(scale*u, z) = sum q^(n^2-n) (scale*u)^n / ((z;q)_n (q;q)_n)``."""
    if z is None:
        z = RatFunc.var("z")
    base = _z_series(order, z, lambda n: q_pow(n * n - n))
    return base if _is_one(scale) else base.scale(scale)


def series_F(order: int = DEFAULT_ORDER, z=None, scale=ONE) -> TruncSeries:
    """``F(scale*u, z) = sum (scale*u)^n / ((z;q)_n (q;q)_n)``."""
    if z is None:
        z = RatFunc.var("z")
    base = _z_series(order, z, lambda n: ONE)
    return base if _is_one(scale) else base.scale(scale)


def _is_one(c) -> bool:
    return isinstance(c, (int, Fraction, RatFunc)) and c == 1


def _z_series(order: int, z, weight) -> TruncSeries:
    coeffs = []
    poch = None
    for n in range(order + 1):
        if n:
            f = 1 - q_pow(n - 1) * z
            poch = f if poch is None else poch * f
        c = weight(n) / qq_poch(n)
        coeffs.append(c if poch is None else c / poch)
    return TruncSeries(coeffs)


def series_G4(order: int = DEFAULT_ORDER, scale=ONE) -> TruncSeries:
    """``(scale*u; q^2)_inf = sum q^(k^2-k) (-scale*u)^k / (q^2;q^2)_k``."""
    q2 = MPoly.var("q", 2)

    def coeff(k):
        return q_pow(k * k - k) * (-1) ** k / RatFunc.coerce(pochhammer(q2, k, 2))

    s = TruncSeries.from_function(order, coeff)
    return s if _is_one(scale) else s.scale(scale)


def infinite_product(a, base: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """``(a*u; q^base)_inf`` as the unique series ``P`` with ``P(u) = (1 - a u) P(q^base u)``, ``P(0) = 1``.

    Coefficient recursion: ``p_n (1 - q^(base n)) = -a q^(base (n-1)) p_(n-1)``.
    """
    if base < 1:
        raise ValueError("base exponent must be positive")
    a = to_ratfunc(a) if isinstance(a, (int, Fraction, str, MPoly)) else a
    coeffs = [ONE]
    for n in range(1, order + 1):
        coeffs.append(-(a * q_pow(base * (n - 1))) * coeffs[-1] / (1 - q_pow(base * n)))
    return TruncSeries(coeffs)


def partial_product(a, base: int, terms: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Finite product ``(a*u; q^base)_terms`` truncated at ``u^order``."""
    a = to_ratfunc(a) if isinstance(a, (int, Fraction, str, MPoly)) else a
    acc = TruncSeries.constant(ONE, order)
    for j in range(terms):
        factor = TruncSeries([ONE, -(a * q_pow(base * j))] + [ONE - ONE] * (order - 1)).truncate(order)
        acc = acc * factor
    return acc


def series_h_g(order: int = DEFAULT_ORDER):
    """The pair ``(h, g)``: ``h(u)h(qu) = 1-u`` and ``g(u) = G(qu)/G(u)`` with ``G(u) = (u;q^2)_inf``."""
    qm1 = MPoly.var("q", -1)
    q2 = MPoly.var("q", 2)

    def h_coeff(n):
        return (RatFunc.coerce(pochhammer(qm1, n, 2)) / RatFunc.coerce(pochhammer(q2, n, 2))) * q_pow(n)

    h = TruncSeries.from_function(order, h_coeff)
    g4 = series_G4(order)
    g = g4.scale_u(1) / g4
    return h, g


def fixed_point(order: int, step: Callable[[TruncSeries], TruncSeries], start: TruncSeries) -> TruncSeries:
    """Iterate ``step`` until the series stops changing (each pass fixes one more coefficient)."""
    cur = start
    for _ in range(order + 2):
        nxt = step(cur)
        if nxt == cur:
            return cur
        cur = nxt
    return cur


def frac_series(values: Sequence) -> TruncSeries:
    return TruncSeries(Fraction(v) for v in values)


def classical_phi(m: int, order: int) -> TruncSeries:
    """``Phi_m(u) = 1 + u Phi_m(u)^m`` with rational coefficients."""
    one = frac_series([1] + [0] * order)
    return fixed_point(order, lambda p: one + (p ** m).shift(1), one)


def classical_psi(m: int, order: int) -> TruncSeries:
    """``1 / (1 - m u Phi_m(u)^(m-1))``."""
    phi = classical_phi(m, order)
    one = frac_series([1] + [0] * order)
    return (one - (phi ** (m - 1)).shift(1) * m).inverse()
