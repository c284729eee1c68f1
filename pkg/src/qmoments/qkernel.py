"""Exact arithmetic kernel.

Sparse multivariate polynomials over the rationals in the variables
``q, x, z, s, u`` (only ``q`` may carry negative exponents) and reduced
rational functions built from them.  Heavy lifting (multiplication, gcd)
is delegated to FLINT through ``python-flint``; this module owns the
normal forms, the Laurent bookkeeping in ``q`` and the canonical strings.

Canonical string grammar
------------------------
A polynomial is a sum of terms sorted by ascending total degree, ties broken
by ascending exponent vector in the variable order ``(q, x, z, s, u)``.
Terms are joined with ``+``/``-`` and no spaces::

    term     := sign? coeff? monomial | sign? rational
    coeff    := integer | "(" integer "/" integer ")"
    monomial := (var ("^" int)?)+          # e.g. q^2z, q^-1
    rational := integer ("/" integer)?

A rational function with denominator 1 prints as its numerator.  Otherwise
it prints as ``NUM/DEN`` where ``NUM`` is bare when it is a single term with
integer coefficient and parenthesised otherwise (``-(...)`` when the first
term is negative), and ``DEN`` is the product of the irreducible factors of
the denominator, each normalised to a positive lowest term, sorted by
(total degree, string), and wrapped in one extra pair of parentheses when
there is more than one factor::

    1/(1-q)    q/((1+q)(1+q^2))    -(1+q)/(1-z)^2    (1/2)/(1-q)

Every string produced here is also a valid input for :func:`parse`.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, List, Mapping, Tuple, Union

import flint

VARS = ("q", "x", "z", "s", "u")
NVARS = len(VARS)
_IDX = {v: i for i, v in enumerate(VARS)}
_CTX = flint.fmpq_mpoly_ctx.get(VARS, "deglex")
_GENS = _CTX.gens()
_Q = _GENS[0]
_ZERO = _CTX.from_dict({})
_ONE = _CTX.constant(1)

Rational = Fraction
Scalar = Union[int, Fraction]


def _fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, int):
        return flint.fmpq(c)
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _frac(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _qpow(k: int):
    return _Q ** k if k else _ONE


def _strip_q(p):
    """Split ``p`` as ``q^v * p'`` with ``p'`` not divisible by ``q``."""
    if p.is_zero():
        return p, 0
    e = int(p.term_content().monoms()[0][0])
    if e:
        p = p / _qpow(e)
    return p, e


class MPoly:
    """Laurent polynomial in ``q``, ordinary in ``x, z, s, u``, over the rationals.

    Stored as ``q**_v * _p`` where ``_p`` is a FLINT polynomial that is not
    divisible by ``q``.  Instances are immutable.
    """

    __slots__ = ("_p", "_v")

    def __init__(self, p=None, v: int = 0):
        if p is None:
            p = _ZERO
        p, e = _strip_q(p)
        self._p = p
        self._v = v + e if not p.is_zero() else 0

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "MPoly":
        return cls(_CTX.constant(_fmpq(c)))

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MPoly":
        i = _IDX[name]
        if power < 0 and i != 0:
            raise ValueError(f"only q may carry a negative exponent, got {name}^{power}")
        if i == 0:
            return cls(_ONE, power)
        return cls(_GENS[i] ** power)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple, Scalar]) -> "MPoly":
        """Build from ``{(eq, ex, ez, es, eu): coeff}``; ``eq`` may be negative."""
        if not terms:
            return cls()
        low = min(e[0] for e in terms)
        d = {}
        for e, c in terms.items():
            if len(e) != NVARS:
                raise ValueError("exponent vectors must have length 5")
            if any(k < 0 for k in e[1:]):
                raise ValueError("negative exponent outside q")
            if c:
                d[(e[0] - low,) + tuple(e[1:])] = _fmpq(c)
        return cls(_CTX.from_dict(d), low)

    @classmethod
    def coerce(cls, a) -> "MPoly":
        if isinstance(a, MPoly):
            return a
        if isinstance(a, (int, Fraction, _RationalABC)):
            return cls.const(a)
        raise TypeError(f"cannot coerce {type(a).__name__} to MPoly")

    # inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __bool__(self) -> bool:
        return not self._p.is_zero()

    def is_one(self) -> bool:
        return self._v == 0 and self._p.is_one()

    def terms(self) -> dict:
        """Map of exponent vectors (true ``q`` exponent) to ``Fraction`` coefficients."""
        v = self._v
        return {
            (m[0] + v,) + tuple(m[1:]): _frac(c)
            for m, c in zip(self._p.monoms(), self._p.coeffs())
        }

    def __len__(self) -> int:
        return len(self._p)

    def variables(self) -> set:
        degs = self._p.degrees()
        out = {VARS[i] for i in range(NVARS) if degs[i] > 0}
        if self._v and not self._p.is_zero():
            out.add("q")
        return out

    def degree(self, var: str = "q") -> int:
        """Highest exponent of ``var``; -1 for the zero polynomial."""
        if self._p.is_zero():
            return -1
        i = _IDX[var]
        return int(self._p.degrees()[i]) + (int(self._v) if i == 0 else 0)

    def low_degree_q(self) -> int:
        return self._v

    def is_constant(self) -> bool:
        return self._v == 0 and self._p.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return _frac(self._p.coefficient(0)) if len(self._p) else Fraction(0)

    def is_monomial(self) -> bool:
        return len(self._p) == 1

    # arithmetic -------------------------------------------------------
    def __neg__(self) -> "MPoly":
        return MPoly._raw(-self._p, self._v)

    def __add__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            try:
                other = MPoly.coerce(other)
            except TypeError:
                return NotImplemented
        if self._p.is_zero():
            return other
        if other._p.is_zero():
            return self
        v = min(self._v, other._v)
        return MPoly(self._p * _qpow(self._v - v) + other._p * _qpow(other._v - v), v)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            try:
                other = MPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return MPoly.coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return MPoly._raw(self._p * other._p, self._v + other._v)
        if isinstance(other, (int, Fraction)):
            return MPoly._raw(self._p * _fmpq(other), self._v)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            if not (self.is_monomial() and self._p.is_one()):
                raise ValueError("negative powers only for powers of q")
            return MPoly._raw(_ONE, self._v * k)
        return MPoly._raw(self._p ** k, self._v * k)

    def divexact(self, other: "MPoly") -> "MPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        try:
            p = self._p / other._p
        except Exception as exc:
            raise ArithmeticError("division is not exact") from exc
        return MPoly(p, self._v - other._v)

    @classmethod
    def _raw(cls, p, v):
        obj = cls.__new__(cls)
        obj._p = p
        obj._v = int(v) if not p.is_zero() else 0
        return obj

    # comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return other == self
        if not isinstance(other, MPoly):
            try:
                other = MPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self._v == other._v and self._p == other._p

    def __hash__(self) -> int:
        return hash(("MPoly", str(self)))

    # substitution -----------------------------------------------------
    def substitute_q_power(self, k: int) -> "MPoly":
        """Return ``p(q^k)``; ``k`` may be negative or zero."""
        if k == 1:
            return self
        return MPoly.from_terms({(e[0] * k,) + e[1:]: c for e, c in self.terms().items()})

    def subs(self, assignment: Mapping[str, Scalar]) -> "MPoly":
        """Substitute rational values for variables."""
        if not assignment:
            return self
        vals = {}
        factor = Fraction(1)
        for name, val in assignment.items():
            if name not in _IDX:
                raise KeyError(name)
            vals[name] = _fmpq(val)
        if "q" in vals:
            qv = Fraction(assignment["q"])
            if self._v < 0 and qv == 0:
                raise ZeroDivisionError("q=0 in a Laurent polynomial with negative powers")
            factor = qv ** int(self._v)
        p = self._p.subs(vals)
        if "q" in vals:
            return MPoly(p * _fmpq(factor))
        return MPoly(p, self._v)

    def compose(self, images: Mapping[str, "MPoly"]) -> "MPoly":
        """Substitute polynomials for variables.  A Laurent ``q`` part needs ``q`` mapped to a monomial."""
        gens = list(_GENS)
        for name, img in images.items():
            img = MPoly.coerce(img)
            if img._v < 0:
                raise ValueError("images must be ordinary polynomials")
            gens[_IDX[name]] = img._p * _qpow(img._v)
        p = self._p.compose(*gens)
        if not self._v:
            return MPoly(p)
        qimg = MPoly.coerce(images.get("q", MPoly.var("q")))
        if self._v > 0:
            return MPoly(p) * qimg ** int(self._v)
        if not qimg.is_monomial():
            raise ValueError("negative powers of q need a monomial image for q")
        return MPoly(p) * (qimg ** (-int(self._v)))._monomial_inverse()

    def _monomial_inverse(self) -> "MPoly":
        (e, c), = self.terms().items()
        if any(e[1:]):
            raise ValueError("only q-monomials are invertible")
        return MPoly.from_terms({(-e[0], 0, 0, 0, 0): 1 / c})

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Full evaluation to a rational number."""
        r = self.subs(values)
        if not r.is_constant():
            raise ValueError(f"variables left unassigned: {sorted(r.variables())}")
        return r.constant_value()

    # rendering --------------------------------------------------------
    def sorted_terms(self) -> list:
        """Terms in canonical (ascending) order as ``(exps, Fraction)`` pairs."""
        v = self._v
        out = [
            ((m[0] + v,) + tuple(m[1:]), _frac(c))
            for m, c in zip(self._p.monoms(), self._p.coeffs())
        ]
        out.reverse()
        return out

    def __str__(self) -> str:
        terms = self.sorted_terms()
        if not terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(terms):
            t = _term_str(e, c)
            if i and not t.startswith("-"):
                t = "+" + t
            parts.append(t)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MPoly('{self}')"


def _mono_str(e) -> str:
    out = []
    for name, k in zip(VARS, e):
        if k == 1:
            out.append(name)
        elif k:
            out.append(f"{name}^{k}")
    return "".join(out)


def _term_str(e, c: Fraction) -> str:
    mono = _mono_str(e)
    if not mono:
        return str(c)
    sign = "-" if c < 0 else ""
    a = abs(c)
    if a == 1:
        return sign + mono
    if a.denominator == 1:
        return f"{sign}{a}{mono}"
    return f"{sign}({a}){mono}"


def poly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Greatest common divisor, normalised so its lowest canonical term has coefficient 1.

    Powers of ``q`` are units in the Laurent ring and are dropped.
    """
    a, b = MPoly.coerce(a), MPoly.coerce(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    g = a._p.gcd(b._p)
    return MPoly(g * (1 / g.coefficient(len(g) - 1)))


def poly_arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    a, b = MPoly.coerce(a), MPoly.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


class RatFunc:
    """Reduced quotient ``q**_v * _n / _d`` of polynomials over the rationals.

    Normal form: ``gcd(_n, _d) = 1``, neither is divisible by ``q``, and the
    lowest canonical term of ``_d`` has coefficient 1.  Two values are equal
    iff their normal forms coincide.
    """

    __slots__ = ("_n", "_v", "_d")

    def __init__(self, num=0, den=1):
        num = _as_ratfunc(num)
        den = _as_ratfunc(den)
        r = num / den
        self._n, self._v, self._d = r._n, r._v, r._d

    @classmethod
    def _make(cls, n, v, d, reduce=True):
        if d.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        obj = cls.__new__(cls)
        if n.is_zero():
            obj._n, obj._v, obj._d = _ZERO, 0, _ONE
            return obj
        if reduce and not d.is_constant():
            g = n.gcd(d)
            if not g.is_one():
                n = n / g
                d = d / g
        n, e = _strip_q(n)
        v += e
        d, e = _strip_q(d)
        v -= e
        c = d.coefficient(len(d) - 1)
        if c != 1:
            inv = 1 / c
            n = n * inv
            d = d * inv
        obj._n, obj._v, obj._d = n, v, d
        return obj

    @classmethod
    def coerce(cls, a) -> "RatFunc":
        return _as_ratfunc(a)

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return _as_ratfunc(MPoly.var(name))

    # inspection -------------------------------------------------------
    @property
    def num(self) -> MPoly:
        return MPoly._raw(self._n, self._v)

    @property
    def den(self) -> MPoly:
        return MPoly._raw(self._d, 0)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def __bool__(self) -> bool:
        return not self._n.is_zero()

    def is_polynomial(self) -> bool:
        return self._d.is_one()

    def is_constant(self) -> bool:
        return self._d.is_one() and self._v == 0 and self._n.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return _frac(self._n.coefficient(0)) if len(self._n) else Fraction(0)

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    def as_mpoly(self) -> MPoly:
        if not self._d.is_one():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    # arithmetic -------------------------------------------------------
    def __neg__(self) -> "RatFunc":
        obj = RatFunc.__new__(RatFunc)
        obj._n, obj._v, obj._d = -self._n, self._v, self._d
        return obj

    def __add__(self, other) -> "RatFunc":
        other = _try_ratfunc(other)
        if other is None:
            return NotImplemented
        if self._n.is_zero():
            return other
        if other._n.is_zero():
            return self
        v = min(self._v, other._v)
        a = self._n * _qpow(self._v - v)
        b = other._n * _qpow(other._v - v)
        d1, d2 = self._d, other._d
        if d1 == d2:
            return RatFunc._make(a + b, v, d1)
        if d1.is_one():
            return RatFunc._make(a * d2 + b, v, d2, reduce=False)
        if d2.is_one():
            return RatFunc._make(a + b * d1, v, d1, reduce=False)
        # Henrici: with g = gcd(d1, d2) the sum only shares factors with g
        g = d1.gcd(d2)
        if g.is_one():
            return RatFunc._make(a * d2 + b * d1, v, d1 * d2, reduce=False)
        d1g, d2g = d1 / g, d2 / g
        t = a * d2g + b * d1g
        if t.is_zero():
            return RatFunc._make(t, 0, _ONE)
        h = t.gcd(g)
        if not h.is_one():
            t, g = t / h, g / h
        return RatFunc._make(t, v, d1g * d2g * g, reduce=False)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        other = _try_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return _as_ratfunc(other) - self

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc._make(_ZERO, 0, _ONE)
            obj = RatFunc.__new__(RatFunc)
            obj._n, obj._v, obj._d = self._n * _fmpq(other), self._v, self._d
            return obj
        other = _try_ratfunc(other)
        if other is None:
            return NotImplemented
        if self._n.is_zero() or other._n.is_zero():
            return RatFunc._make(_ZERO, 0, _ONE)
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 / g, d2 / g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 / g, d1 / g
        return RatFunc._make(n1 * n2, self._v + other._v, d1 * d2, reduce=False)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self._n.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc._make(self._d, -self._v, self._n, reduce=False)

    def __truediv__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            obj = RatFunc.__new__(RatFunc)
            obj._n, obj._v, obj._d = self._n / _fmpq(other), self._v, self._d
            return obj
        other = _try_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return _as_ratfunc(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return _as_ratfunc(1)
        return RatFunc._make(self._n ** k, self._v * k, self._d ** k, reduce=False)

    # comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = _try_ratfunc(other)
        if other is None:
            return NotImplemented
        return self._v == other._v and self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        return hash(("RatFunc", str(self)))

    # substitution -----------------------------------------------------
    def subs(self, assignment: Mapping[str, Scalar]) -> "RatFunc":
        return eval_partial(self, assignment)

    def compose(self, images: Mapping[str, object]) -> "RatFunc":
        """Substitute rational functions for variables (e.g. ``{'z': q*z}``)."""
        images = {k: _as_ratfunc(v) for k, v in images.items()}
        if all(img.is_polynomial() and img._v >= 0 for img in images.values()):
            pimg = {k: img.num for k, img in images.items()}
            n = MPoly._raw(self._n, 0).compose(pimg)
            d = MPoly._raw(self._d, 0).compose(pimg)
            qimg = images.get("q", _as_ratfunc(MPoly.var("q")))
            return _as_ratfunc(n) * qimg ** int(self._v) / _as_ratfunc(d)
        return _compose_general(self, images)

    def substitute_q_power(self, k: int) -> "RatFunc":
        """Return ``f(q^k)``."""
        n = self.num.substitute_q_power(k)
        d = self.den.substitute_q_power(k)
        return _as_ratfunc(n) / _as_ratfunc(d)

    def __str__(self) -> str:
        if self._d.is_one():
            return str(self.num)
        num = self.num
        terms = num.sorted_terms()
        if len(terms) == 1 and terms[0][1].denominator == 1:
            ns = str(num)
        elif terms[0][1] < 0 and len(terms) > 1:
            ns = "-(" + str(-num) + ")"
        else:
            ns = "(" + str(num) + ")"
        return ns + "/" + _den_str(self._d)

    def __repr__(self) -> str:
        return f"RatFunc('{self}')"


def _compose_general(f: RatFunc, images: Mapping[str, RatFunc]) -> RatFunc:
    env = {v: images.get(v, _as_ratfunc(MPoly.var(v))) for v in VARS}

    def ev(p: MPoly) -> RatFunc:
        acc = _as_ratfunc(0)
        for e, c in p.terms().items():
            t = _as_ratfunc(c)
            for name, k in zip(VARS, e):
                if k:
                    t = t * env[name] ** k
            acc = acc + t
        return acc

    return ev(f.num) / ev(f.den)


def irreducible_factors(p: MPoly) -> List[Tuple[MPoly, int]]:
    """Irreducible factors with multiplicity, each scaled so its lowest term has coefficient 1.

    The q-power and the constant content are dropped.
    """
    raw, _ = _strip_q(p._p)
    _, facs = raw.factor()
    out = []
    for f, k in facs:
        f = f * (1 / f.coefficient(len(f) - 1))
        out.append((MPoly(f), k))
    return out


def _den_str(d) -> str:
    items = []
    for mp, k in irreducible_factors(MPoly(d)):
        items.append((mp._p.total_degree(), str(mp), mp, k))
    items.sort(key=lambda t: (t[0], t[1]))
    rendered = []
    for _, s, mp, k in items:
        # irreducible monomial factors are single variables, so "z^2" is unambiguous
        base = s if mp.is_monomial() else "(" + s + ")"
        rendered.append(base + (f"^{k}" if k > 1 else ""))
    if len(rendered) == 1:
        return rendered[0]
    return "(" + "".join(rendered) + ")"


def _as_ratfunc(a) -> RatFunc:
    if isinstance(a, RatFunc):
        return a
    if isinstance(a, MPoly):
        obj = RatFunc.__new__(RatFunc)
        obj._n, obj._v, obj._d = a._p, a._v, _ONE
        return obj
    if isinstance(a, (int, Fraction, _RationalABC)):
        obj = RatFunc.__new__(RatFunc)
        obj._n, obj._v, obj._d = _CTX.constant(_fmpq(a)), 0, _ONE
        if not a:
            obj._n = _ZERO
        return obj
    raise TypeError(f"cannot coerce {type(a).__name__} to RatFunc")


def _try_ratfunc(a):
    try:
        return _as_ratfunc(a)
    except TypeError:
        return None


def ratfunc_arith(a, b, op: str) -> RatFunc:
    a, b = _as_ratfunc(a), _as_ratfunc(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational-function operation {op!r}")


def eval_partial(f, assignment: Mapping[str, Scalar]) -> RatFunc:
    """Substitute rational values for some variables.

    Raises ``ZeroDivisionError`` when the denominator vanishes identically.
    """
    f = _as_ratfunc(f)
    if not assignment:
        return f
    den = MPoly._raw(f._d, 0).subs(assignment)
    if den.is_zero():
        raise ZeroDivisionError(f"denominator of {f} vanishes at {dict(assignment)}")
    num = MPoly._raw(f._n, f._v).subs(assignment)
    return _as_ratfunc(num) / _as_ratfunc(den)


def limit_q1(f) -> RatFunc:
    """Value at ``q = 1`` after cancelling common powers of ``(1 - q)``.

    The stored form is already reduced, so a surviving factor ``(1 - q)``
    in the denominator is a genuine pole and raises ``ValueError``.
    """
    f = _as_ratfunc(f)
    den = MPoly._raw(f._d, 0).subs({"q": 1})
    if den.is_zero():
        raise ValueError(f"{f} has a pole at q = 1")
    num = MPoly._raw(f._n, 0).subs({"q": 1})
    return _as_ratfunc(num) / _as_ratfunc(den)


q = RatFunc.var("q")
x = RatFunc.var("x")
z = RatFunc.var("z")
s = RatFunc.var("s")
u = RatFunc.var("u")
ONE = _as_ratfunc(1)
ZERO = _as_ratfunc(0)


# parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([qxzsu])|(\^)|([-+*/()]))")


def parse(text: str) -> RatFunc:
    """Parse a canonical string (or any ordinary arithmetic expression in q, x, z, s, u).

    Implicit multiplication binds like ``*``; ``^`` takes a signed integer
    exponent and binds tighter than unary minus.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        num, var, caret, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", var))
        elif caret:
            tokens.append(("^", None))
        else:
            tokens.append((op, None))
        pos = m.end()
    p = _Parser(tokens, text)
    r = p.expr()
    if p.i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return r


class _Parser:
    def __init__(self, tokens, text):
        self.t = tokens
        self.i = 0
        self.text = text

    def peek(self):
        return self.t[self.i][0] if self.i < len(self.t) else None

    def take(self, kind=None):
        if self.i >= len(self.t):
            raise ValueError(f"unexpected end of input in {self.text!r}")
        tok = self.t[self.i]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self):
        r = self.product()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.product()
            r = r + rhs if op == "+" else r - rhs
        return r

    def product(self):
        r = self.unary()
        while True:
            k = self.peek()
            if k == "*":
                self.take()
                r = r * self.unary()
            elif k == "/":
                self.take()
                r = r / self.unary()
            elif k in ("num", "var", "("):
                r = r * self.power()
            else:
                return r

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            k = sign * self.take("num")[1]
            return base ** k
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return _as_ratfunc(val)
        if kind == "var":
            return _as_ratfunc(MPoly.var(val))
        if kind == "(":
            r = self.expr()
            self.take(")")
            return r
        raise ValueError(f"unexpected token {kind!r} in {self.text!r}")


def to_ratfunc(a) -> RatFunc:
    """Coerce ints, Fractions, MPoly, RatFunc or canonical strings."""
    if isinstance(a, str):
        return parse(a)
    return _as_ratfunc(a)


def q_pow(k: int) -> RatFunc:
    return _as_ratfunc(MPoly.var("q", k))


def product(items: Iterable) -> RatFunc:
    acc = ONE
    for it in items:
        acc = acc * it
    return acc
