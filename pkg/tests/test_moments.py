import random
from fractions import Fraction
from functools import lru_cache
from math import comb

import pytest

from qmoments.families import FamilyId, family_closed
from qmoments.moments import (
    LambdaSeq,
    andrews_catalan,
    cantero_iserles,
    cantero_iserles_limit,
    cantero_iserles_series,
    catalan,
    expand_monomial,
    fuss_catalan,
    functional_on_poly,
    gf_moments,
    moment,
    moments_by_route,
    qcatalan_carlitz,
    qcatalan_convolution,
    qcatalan_series,
    triangle,
)
from qmoments.qkernel import ONE, MPoly, RatFunc, limit_q1, parse, q_pow, to_ratfunc
from qmoments.qseries import binom2, pochhammer, qbin

Z = RatFunc.var("z")


def mq(k, start=1):
    return RatFunc.coerce(pochhammer(-MPoly.var("q", start), k))


def paths_oracle(m, weight, length):
    """Weighted lattice paths from height 0 to 0: up-steps +1, down-steps -(m-1) weighted by the end height."""
    @lru_cache(maxsize=None)
    def walk(steps, height):
        if steps == 0:
            return Fraction(1) if height == 0 else Fraction(0)
        total = walk(steps - 1, height + 1)
        if height - (m - 1) >= 0:
            total += weight(height - (m - 1)) * walk(steps - 1, height - (m - 1))
        return total

    return walk(length, 0)


# --- triangle -------------------------------------------------------------------

def test_triangle_examples():
    tri = triangle(LambdaSeq.constant(2, ONE, ONE), 8)
    assert tri(4, 0) == RatFunc.coerce(2)
    assert all(not tri(2 * n + 1, 0) for n in range(4))
    lucas = triangle(LambdaSeq.constant(2, to_ratfunc(2), ONE), 8)
    assert lucas(4, 0) == RatFunc.coerce(6)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_triangle_against_path_enumeration(m):
    rng = random.Random(m)
    w = [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(20)]
    tri = triangle(LambdaSeq(m, lambda k: w[k]), 12, one=Fraction(1))
    for n in range(12 // m + 1):
        assert tri(m * n, 0) == paths_oracle(m, lambda k: w[k], m * n)
    assert tri.congruence_holds()


def test_fuss_catalan_from_paths():
    for m in range(2, 5):
        for n in range(7):
            assert paths_oracle(m, lambda k: 1, m * n) == fuss_catalan(m, n)
            assert fuss_catalan(m, n) == comb(m * n, n) // ((m - 1) * n + 1)


def test_classical_sequences():
    assert [moment("f", 2 * n) for n in range(6)] == [RatFunc.coerce(v) for v in (1, 1, 2, 5, 14, 42)]
    assert [moment("l", 2 * n) for n in range(5)] == [RatFunc.coerce(v) for v in (1, 2, 6, 20, 70)]
    assert [moment(FamilyId("fm", 3), 3 * n) for n in range(5)] == [RatFunc.coerce(v) for v in (1, 1, 3, 12, 55)]


# --- expansion and moments -----------------------------------------------------

def test_expand_monomial_examples():
    assert expand_monomial(FamilyId("lq"), 4)[0] == qbin(4, 2)
    u = expand_monomial(FamilyId("u"), 2)
    assert u[0] == (qbin(2, 1) - qbin(2, 0)) / (mq(1) * mq(1, 2))
    assert u[2] == ONE
    for name in ("f", "F", "u", "lz"):
        assert expand_monomial(FamilyId.make(name), 0) == {0: ONE}


def test_expand_reconstructs_monomial():
    for name in ("F", "lq", "t", "fz"):
        fid = FamilyId.make(name)
        for n in range(7):
            acc = sum((family_closed(fid, k) * c for k, c in expand_monomial(fid, n).items()),
                      family_closed(fid, 0) * 0)
            assert acc == family_closed("f", 0).monomial(n)


def test_moment_examples():
    assert moment("f", 4) == RatFunc.coerce(2)
    assert moment("F", 2) == parse("q")
    assert moment("t", 2) == parse("q/(1+q)")
    assert moment("u", 3).is_zero()


def test_functional_on_poly_examples():
    F3 = family_closed("F", 3)
    assert functional_on_poly("F", F3.mul_x(1)) == parse("(q-1)*q^3")
    u = [family_closed("u", n) for n in range(4)]
    assert functional_on_poly("u", u[3] * u[2]).is_zero()
    assert functional_on_poly("u", u[2] * u[2]) == q_pow(binom2(3)) / (mq(2) * mq(2, 2))


TRIPLE = [
    FamilyId("f"), FamilyId("l"), FamilyId("fq", 2), FamilyId("u"), FamilyId("t"),
    FamilyId("fz"), FamilyId("lz"), FamilyId("fq", 3), FamilyId("fm", 3), FamilyId("fm", 4),
]


@pytest.mark.parametrize("fid", TRIPLE, ids=lambda f: f.label())
def test_triple_route_agreement(fid):
    N = 8 if fid.m == 2 else 5
    tri = moments_by_route(fid, N, "triangle")
    assert tri == moments_by_route(fid, N, "expand")
    assert tri == moments_by_route(fid, N, "series")


def test_orthogonality_tables():
    for name, norm in (
        ("u", lambda n: q_pow(binom2(n + 1)) / (mq(n) * mq(n, 2))),
        ("t", lambda n: ONE if n == 0 else q_pow(binom2(n + 1)) / (mq(n - 1) * mq(n))),
    ):
        polys = [family_closed(name, n) for n in range(7)]
        for n in range(7):
            for k in range(7):
                want = norm(n) if n == k else 0
                assert functional_on_poly(name, polys[n] * polys[k]) == want, (name, n, k)


def test_moment_closed_forms():
    for n in range(9):
        assert moment("F", 2 * n) == qbin(2 * n, n) - qbin(2 * n, n - 1)
        assert moment("lq", 2 * n) == qbin(2 * n, n)
        assert moment("t", 2 * n) == qbin(2 * n, n) * q_pow(n) / mq(n) ** 2
        assert moment("u", 2 * n) == andrews_catalan(n)


def test_odd_moments_vanish():
    for name in ("f", "u", "t", "fz"):
        for n in range(1, 9, 2):
            assert moment(name, n).is_zero()
    assert moment(FamilyId("fm", 3), 4).is_zero()


# --- q-Catalan -----------------------------------------------------------------

def test_carlitz_examples():
    c = qcatalan_carlitz(4, 2)
    assert c[0] == ONE
    assert c[2] == parse("1+q")
    assert c[3] == parse("1+2q+q^2+q^3")


def test_carlitz_routes_agree():
    for m in range(1, 5):
        N = 8 if m <= 2 else 5
        conv = qcatalan_convolution(N, m)
        assert conv == list(qcatalan_series(N, m))
    c2 = qcatalan_carlitz(8, 2)
    assert c2 == [moment(FamilyId("fq", 2), 2 * n) for n in range(9)]


def test_carlitz_limit_is_fuss_catalan():
    for m in range(1, 4):
        c = qcatalan_carlitz(6, m)
        assert [limit_q1(v) for v in c] == [RatFunc.coerce(fuss_catalan(m, n)) for n in range(7)]


def test_gf_moments_examples():
    lz = gf_moments(FamilyId.make("lz", z="-q"), 8)
    for n in range(9):
        assert lz[n] == qbin(2 * n, n) * q_pow(n) / mq(n) ** 2
    fz = gf_moments(FamilyId.make("fz", z="-q"), 8)
    assert list(fz) == [andrews_catalan(n) for n in range(9)]


def test_phi_f_limit():
    phi = gf_moments(FamilyId("fz"), 6)
    for n in range(7):
        assert limit_q1(phi[n]) == RatFunc.coerce(catalan(n)) / (1 - Z) ** (2 * n)


def test_cantero_iserles():
    a = cantero_iserles(6)
    assert a[0] == ONE
    assert a[1] == -ONE / (1 - Z)
    assert limit_q1(a[2]) == Z / (1 - Z) ** 3
    assert a == list(cantero_iserles_series(6))
    for n in range(1, 7):
        assert limit_q1(a[n]) == cantero_iserles_limit(n)
        want = RatFunc.coerce((-1) ** n * catalan(n - 1)) * Z ** (n - 1) / (1 - Z) ** (2 * n - 1)
        assert limit_q1(a[n]) == want


def test_cantero_iserles_numeric_z():
    z0 = Fraction(2, 9)
    a_sym = cantero_iserles(5)
    a_num = cantero_iserles(5, z0)
    assert [v.subs({"z": z0}) for v in a_sym] == a_num
