"""Degree tracking in z for exact identity testing by sampling.

A computation written against ``+ - * /`` can be replayed with
:class:`ZDegree` values in place of rational functions.  Each value carries an
upper bound for the z-degree of a numerator together with the denominator as a
multiset of irreducible factors, so sums combine denominators by least common
multiple.  Values of small z-degree are carried exactly.

If ``lhs - rhs`` has numerator degree at most ``B`` and the same computation,
replayed with ``z := z0``, gives ``lhs == rhs`` at ``B + 1`` distinct points
without dividing by zero, the identity holds for symbolic ``z``.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterator, List, Optional

from .qkernel import MPoly, RatFunc, irreducible_factors

EXACT_LIMIT = 4
_fresh = itertools.count()


def _zdeg(p: MPoly) -> int:
    return max(int(p.degree("z")), 0)


def _atoms(p: MPoly) -> Counter:
    out: Counter = Counter()
    for f, k in irreducible_factors(p):
        d = _zdeg(f)
        if d:
            out[(str(f), d)] += k
    return out


def _weight(c: Counter) -> int:
    return sum(key[1] * k for key, k in c.items())


class ZDegree:
    """Either an exact rational function or a bound ``(num, den-factors)``; ``num is None`` marks zero."""

    __slots__ = ("num", "den", "exact")

    def __init__(self, num: Optional[int], den: Optional[Counter] = None, exact: Optional[RatFunc] = None):
        self.num = num
        self.den = Counter() if den is None or num is None else den
        self.exact = exact

    @classmethod
    def var(cls) -> "ZDegree":
        return cls.coerce(RatFunc.var("z"))

    @classmethod
    def coerce(cls, a) -> "ZDegree":
        if isinstance(a, ZDegree):
            return a
        if isinstance(a, (int, Fraction, MPoly)):
            a = RatFunc.coerce(a)
        if isinstance(a, RatFunc):
            if a.is_zero():
                return cls(None, exact=a)
            return cls(_zdeg(a.num), _atoms(a.den), a)
        raise TypeError(f"cannot track {type(a).__name__}")

    @classmethod
    def _wrap(cls, value: RatFunc) -> "ZDegree":
        out = cls.coerce(value)
        if out.num is not None and out.num + _weight(out.den) > EXACT_LIMIT:
            out.exact = None
        return out

    @property
    def den_degree(self) -> int:
        return _weight(self.den)

    def __bool__(self) -> bool:
        if self.exact is not None:
            return not self.exact.is_zero()
        return self.num is not None

    def __neg__(self) -> "ZDegree":
        if self.exact is not None:
            return ZDegree(self.num, self.den, -self.exact)
        return self

    def __add__(self, other) -> "ZDegree":
        other = ZDegree.coerce(other)
        if self.exact is not None and other.exact is not None:
            return ZDegree._wrap(self.exact + other.exact)
        if self.num is None:
            return other
        if other.num is None:
            return self
        lcm = self.den | other.den
        w = _weight(lcm)
        num = max(self.num + w - self.den_degree, other.num + w - other.den_degree)
        return ZDegree(num, lcm)

    __radd__ = __add__

    def __sub__(self, other) -> "ZDegree":
        return self + (-ZDegree.coerce(other))

    def __rsub__(self, other) -> "ZDegree":
        return ZDegree.coerce(other) + (-self)

    def __mul__(self, other) -> "ZDegree":
        other = ZDegree.coerce(other)
        if self.exact is not None and other.exact is not None:
            return ZDegree._wrap(self.exact * other.exact)
        if self.num is None or other.num is None:
            return ZDegree(None)
        return ZDegree(self.num + other.num, self.den + other.den)

    __rmul__ = __mul__

    def _inverse(self) -> "ZDegree":
        if self.num is None:
            raise ZeroDivisionError("division by tracked zero")
        if self.exact is not None:
            return ZDegree._wrap(1 / self.exact)
        # the numerator is not factored: it becomes one opaque denominator factor
        den = Counter({(f"?{next(_fresh)}", self.num): 1}) if self.num else Counter()
        return ZDegree(self.den_degree, den)

    def __truediv__(self, other) -> "ZDegree":
        return self * ZDegree.coerce(other)._inverse()

    def __rtruediv__(self, other) -> "ZDegree":
        return ZDegree.coerce(other) * self._inverse()

    def __pow__(self, k: int) -> "ZDegree":
        if k < 0:
            return self._inverse() ** (-k)
        acc = ZDegree.coerce(1)
        for _ in range(k):
            acc = acc * self
        return acc

    def __repr__(self) -> str:
        if self.num is None:
            return "ZDegree(0)"
        return f"ZDegree({self.num}/{self.den_degree}{', exact' if self.exact is not None else ''})"


def numerator_bound(lhs, rhs) -> Optional[int]:
    """Degree bound for the numerator of ``lhs - rhs``; ``None`` when it is exactly zero."""
    diff = ZDegree.coerce(lhs) - ZDegree.coerce(rhs)
    if diff.exact is not None:
        return None if diff.exact.is_zero() else _zdeg(diff.exact.num)
    return diff.num


def iter_sample_points(seed: int, avoid=(0, 1, -1)) -> Iterator[Fraction]:
    """Endless stream of distinct small rationals drawn deterministically from ``seed``."""
    rng = random.Random(seed)
    seen = set(Fraction(a) for a in avoid)
    while True:
        v = Fraction(rng.randint(-60, 60), rng.randint(1, 7))
        if v in seen:
            continue
        seen.add(v)
        yield v


def sample_points(count: int, seed: int, avoid=(0, 1, -1)) -> List[Fraction]:
    return list(itertools.islice(iter_sample_points(seed, avoid), count))
