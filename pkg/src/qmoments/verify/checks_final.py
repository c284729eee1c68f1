"""Families with the third parameter s."""
from __future__ import annotations

from ..families import FamilyId, XPoly, family_closed
from ..qkernel import ONE, RatFunc, q_pow
from .registry import register


@register("final-m1-product", "poly-identity", "final", cap=10)
def _m1_product(bound):
    """f^(1)_n(x,q,s) = (x-s)(x-qs)...(x-q^(n-1) s)."""
    fid = FamilyId("fs", 1)
    s = RatFunc.var("s")
    prod = XPoly.const(ONE)
    for n in range(bound + 1):
        if n:
            prod = prod * (XPoly.monomial(1) - q_pow(n - 1) * s)
        yield (f"n={n}", family_closed(fid, n), prod)


@register("final-z0", "poly-identity", "final", cap=10)
def _z0(bound):
    """f_n(x,0,q) and l_n(x,0,q) both reduce to f^(2)_n(x,q,q)."""
    carlitz = FamilyId("fs", 2, s=q_pow(1))
    for n in range(bound + 1):
        target = family_closed(carlitz, n)
        yield (f"f n={n}", family_closed(FamilyId("fz", z=0), n), target)
        yield (f"l n={n}", family_closed(FamilyId("lz", z=0), n), target)


@register("final-carlitz-lucas", "poly-identity", "final", cap=10)
def _carlitz_lucas(bound):
    """l^(2)_n(x,q,s) equals the Carlitz q-Lucas polynomial."""
    for n in range(bound + 1):
        yield (f"n={n}", family_closed(FamilyId("ls", 2), n), family_closed(FamilyId("carlitz_lucas"), n))


@register("final-limit", "limit", "final", cap=10)
def _limit(bound):
    """At q = 1 and s = 1 the s-families become the classical m-Fibonacci and m-Lucas polynomials."""
    for m in range(1, 5):
        top = bound if m <= 2 else min(bound, 8)
        for n in range(top + 1):
            f = family_closed(FamilyId("fs", m, s=1), n).limit_q1()
            l = family_closed(FamilyId("ls", m, s=1), n).limit_q1()
            yield (f"f m={m},n={n}", f, family_closed(FamilyId("fm", m), n))
            yield (f"l m={m},n={n}", l, family_closed(FamilyId("Lm", m), n))
