"""Acceptance criteria, one test per criterion, each reporting a PASS/FAIL line."""
import json
import subprocess
import sys
import time
from fractions import Fraction
from functools import lru_cache
from math import comb

import pytest

from qmoments.families import FamilyId, catalog_ids, family_closed, family_recur
from qmoments.moments import (
    LambdaSeq,
    cantero_iserles,
    cantero_iserles_limit,
    cantero_iserles_series,
    catalan,
    functional_on_poly,
    moment,
    moments_by_route,
    triangle,
)
from qmoments.qkernel import ONE, MPoly, RatFunc, limit_q1, parse, q_pow
from qmoments.qseries import binom2, pochhammer, qbin

SUITE_IDS = """
1.4 1.14 1.17 1.20 1.24 1.28 1.30 1.31 1.32 1.33 1.34 1.35 1.43 1.44 1.45
2.3 2.4 2.6 2.7 2.8 2.9 2.10
3.4 3.5 3.6 3.7 3.8 3.12 3.13 3.14 3.18 3.19 3.20 3.21 3.22 3.23 3.24
4.5 4.6 4.7 4.8 4.11 4.14 4.17 4.18 4.19 4.20 4.21
5.2 5.6 5.7 5.8 5.9 5.13 5.14 5.15 5.18 5.19 5.20 5.21 5.22 5.23 5.24 5.27
""".split()

SUITE_SECONDS = 60


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        assert ok, detail

    return emit


def ints(values):
    return [RatFunc.coerce(v) for v in values]


def mq(k, start=1):
    return RatFunc.coerce(pochhammer(-MPoly.var("q", start), k))


@lru_cache(maxsize=None)
def fuss_paths(m, length, height=0):
    """Lattice paths with up-steps +1 and down-steps -(m-1), counted directly."""
    if length == 0:
        return 1 if height == 0 else 0
    total = fuss_paths(m, length - 1, height + 1)
    if height >= m - 1:
        total += fuss_paths(m, length - 1, height - (m - 1))
    return total


@pytest.fixture(scope="module")
def cli_runs():
    """Two independent CLI runs of the full suite; the first one is timed."""
    argv = [sys.executable, "-m", "qmoments", "verify", "--suite", "all", "--order", "10", "--format", "json"]
    outputs, seconds = [], []
    for _ in range(2):
        start = time.perf_counter()
        proc = subprocess.run(argv, capture_output=True, check=False)
        seconds.append(time.perf_counter() - start)
        outputs.append(proc)
    return outputs, seconds


def test_criterion_1_classical_sanity(report):
    start = time.perf_counter()
    f = [moment("f", 2 * n) for n in range(6)]
    l = [moment("l", 2 * n) for n in range(6)]
    tri3 = triangle(LambdaSeq.constant(3, ONE, ONE), 12).moments()
    elapsed = time.perf_counter() - start
    closed3 = [Fraction(comb(3 * n, n), 2 * n + 1) for n in range(5)]
    ok = (
        f == ints([1, 1, 2, 5, 14, 42])
        and l[:5] == ints([1, 2, 6, 20, 70])
        and tri3 == ints([1, 1, 3, 12, 55])
        and closed3 == [1, 1, 3, 12, 55]
        and [fuss_paths(3, 3 * n) for n in range(5)] == [1, 1, 3, 12, 55]
        and elapsed < 1.0
    )
    report(1, ok, f"Catalan, central binomial and Fuss-Catalan moments exact in {elapsed:.3f}s")


def test_criterion_2_route_equality(report):
    start = time.perf_counter()
    bad = []
    count = 0
    for fid in catalog_ids():
        top = 8 if fid.m >= 3 else 10
        for n in range(top + 1):
            count += 1
            if family_closed(fid, n) != family_recur(fid, n):
                bad.append(f"{fid.label()} n={n}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10.0
    report(2, ok, f"closed = recur for {count} (family, n) pairs in {elapsed:.2f}s; mismatches: {bad[:3]}")


def test_criterion_3_triple_route(report):
    fids = [FamilyId("f"), FamilyId("l"), FamilyId("fq", 2), FamilyId("u"), FamilyId("t"),
            FamilyId("fz"), FamilyId("lz")]
    bad = []
    for fid in fids:
        tri = moments_by_route(fid, 8, "triangle")
        if tri != moments_by_route(fid, 8, "expand") or tri != moments_by_route(fid, 8, "series"):
            bad.append(fid.label())
    report(3, not bad, f"triangle = expansion = series for {len(fids)} families at n <= 8; disagree: {bad}")


def test_criterion_4_orthogonality(report):
    norms = {
        "u": lambda n: q_pow(binom2(n + 1)) / (mq(n) * mq(n, 2)),
        "t": lambda n: ONE if n == 0 else q_pow(binom2(n + 1)) / (mq(n - 1) * mq(n)),
    }
    bad = []
    for name, norm in norms.items():
        polys = [family_closed(name, n) for n in range(7)]
        for n in range(7):
            for m in range(7):
                want = norm(n) if n == m else 0
                if functional_on_poly(name, polys[n] * polys[m]) != want:
                    bad.append(f"{name} n={n} m={m}")
    witness = functional_on_poly("F", family_closed("F", 3).mul_x(1))
    ok = not bad and witness == parse("(q-1)*q^3")
    report(4, ok, f"orthogonality tables n, m <= 6 exact; non-orthogonality witness {witness}; bad: {bad[:3]}")


def test_criterion_5_identity_suite(report, cli_runs):
    (proc, _), (elapsed, _) = cli_runs
    data = json.loads(proc.stdout)
    status = {c["id"]: c["status"] for c in data["checks"]}
    missing = [eq for eq in SUITE_IDS if f"eq-{eq}" not in status]
    failed = [cid for cid, s in status.items() if s != "pass"]
    listed = all(status.get(f"eq-{eq}") == "pass" for eq in SUITE_IDS) and status.get("psi-m") == "pass"
    ok = proc.returncode == 0 and not missing and not failed and listed and elapsed < SUITE_SECONDS
    report(5, ok, f"{len(status)} registered checks at order 10, {data['totals']['pass']} pass, "
                  f"{elapsed:.1f}s wall; missing {missing}, failed {failed[:5]}")


def test_criterion_6_squared_binomial_sum(report):
    bad = []
    for n in range(21):
        acc = RatFunc.coerce(0)
        for j in range(n + 1):
            acc = acc + q_pow(j * j) * qbin(n, j) ** 2
        if acc != qbin(2 * n, n):
            bad.append(n)
    report(6, not bad, f"sum q^(j^2) [n,j]^2 = [2n,n] symbolically for n <= 20; failing n: {bad}")


def test_criterion_7_cantero_iserles(report):
    z = RatFunc.var("z")
    a = cantero_iserles(6)
    series = cantero_iserles_series(6)
    same = a == list(series)
    limits = []
    for n in range(1, 7):
        want = RatFunc.coerce((-1) ** n * catalan(n - 1)) * z ** (n - 1) / (1 - z) ** (2 * n - 1)
        limits.append(limit_q1(a[n]) == want == cantero_iserles_limit(n))
    ok = same and all(limits)
    report(7, ok, f"forward substitution = series division for n <= 6: {same}; q -> 1 limits: {limits}")


def test_criterion_8_determinism(report, cli_runs):
    (first, second), _ = cli_runs
    ok = first.returncode == second.returncode == 0 and first.stdout == second.stdout
    report(8, ok, f"two verify --suite all --order 10 runs byte-identical ({len(first.stdout)} bytes)")
