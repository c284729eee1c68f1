import json

import pytest

from qmoments.moments import andrews_catalan
from qmoments.qkernel import ONE, MPoly, RatFunc, parse, q_pow
from qmoments.qseries import TruncSeries, pochhammer, series_G
from qmoments.verify import IdentityCheck, load_all, run_check, run_suite, select
from qmoments.verify.checks_s5 import _solve_psi_tilde
from qmoments.verify.runner import Report

# registry ids that must always be present
INVARIANT_IDS = """
1.3 1.13 1.21 1.23 1.25 1.27 1.29 1.30 1.34 1.35 1.36 1.37 1.43 1.45
2.3 2.7 2.8 2.9 2.10
3.6 3.7 3.8 3.13 3.14 3.18 3.19 3.21 3.23 3.24
4.4 4.6 4.7 4.8 4.11 4.13 4.15 4.21
5.2 5.6 5.13 5.14 5.18 5.19 5.20 5.23
""".split()

# registry ids covered by the full identity suite
SUITE_IDS = """
1.4 1.14 1.17 1.20 1.24 1.28 1.30 1.31 1.32 1.33 1.34 1.35 1.43 1.44 1.45
2.3 2.4 2.6 2.7 2.8 2.9 2.10
3.4 3.5 3.6 3.7 3.8 3.12 3.13 3.14 3.18 3.19 3.20 3.21 3.22 3.23 3.24
4.5 4.6 4.7 4.8 4.11 4.14 4.17 4.18 4.19 4.20 4.21
5.2 5.6 5.7 5.8 5.9 5.13 5.14 5.15 5.18 5.19 5.20 5.21 5.22 5.23 5.24 5.27
""".split()


@pytest.fixture(scope="module")
def registry():
    return load_all()


@pytest.mark.parametrize("eq", INVARIANT_IDS)
def test_invariant_ids_registered(registry, eq):
    assert f"eq-{eq}" in registry


@pytest.mark.parametrize("eq", SUITE_IDS)
def test_suite_ids_registered(registry, eq):
    assert f"eq-{eq}" in registry


def test_psi_m_relation_registered(registry):
    assert "psi-m" in registry and "phi-m" in registry


def test_registry_metadata(registry):
    for check in registry.values():
        assert check.kind in ("poly-identity", "series-identity", "moment-equality", "annihilation", "limit")
        assert check.section in ("s1", "s2", "s3", "s4", "s5", "final")
        assert check.summary, check.id


def test_selectors(registry):
    assert len(select("all")) == len(registry)
    assert all(c.section == "s4" for c in select("s4"))
    assert all(c.classical for c in select("classical"))
    assert [c.id for c in select(["eq-4.21", "eq-1.3"])] == ["eq-4.21", "eq-1.3"]
    with pytest.raises(KeyError, match="Known ids"):
        select(["eq-99.9"])


# --- runner ----------------------------------------------------------------------

def test_squared_binomial_check_passes():
    report = run_suite(["eq-4.21"], order=6)
    assert report.ok and report.checks[0].bound == 6


def test_witness_value_for_non_orthogonality():
    result = run_suite(["eq-3.1-witness"]).checks[0]
    assert result.passed
    assert parse(result.witness["value"]) == parse("(q-1)*q^3")


def test_classical_suite_passes():
    report = run_suite("classical", order=6)
    assert report.ok and len(report.checks) > 10


def _fake(run, zgeneric=False):
    return IdentityCheck("fake", "poly-identity", "s1", run, cap=5, zgeneric=zgeneric, summary="x")


def test_failure_carries_first_witness():
    def run(bound):
        for n in range(bound + 1):
            yield (f"n={n}", n * n, n * n if n < 3 else n)

    result = run_check(_fake(run))
    assert result.status == "fail"
    assert result.witness == {"at": "n=3", "lhs": "9", "rhs": "3"}


def test_exception_is_a_failure():
    def run(bound):
        yield ("n=0", 1, 1)
        raise RuntimeError("boom")

    result = run_check(_fake(run))
    assert result.status == "fail" and "boom" in result.witness["error"]


def test_sampled_mode_detects_a_false_identity():
    def run(bound, z):
        # (1 - z^7)/(1 - z) is not 1 + z + ... + z^5
        lhs = (1 - z ** 7) / (1 - z)
        rhs = sum((z ** k for k in range(6)), z * 0)
        yield ("geometric", lhs, rhs)

    result = run_check(_fake(run, zgeneric=True), mode="sampled")
    assert result.status == "fail"
    assert "z" in result.witness


def test_sampled_mode_passes_true_identity_with_enough_points():
    def run(bound, z):
        lhs = (1 - z ** 7) / (1 - z)
        rhs = sum((z ** k for k in range(7)), z * 0)
        yield ("geometric", lhs, rhs)

    result = run_check(_fake(run, zgeneric=True), mode="sampled")
    assert result.passed
    assert len(result.sampling["points"]) == result.sampling["degree_bound"] + 1


def test_sampled_section_check_and_determinism():
    a = run_suite(["eq-5.2", "eq-5.26"], order=4, mode="sampled", seed=7)
    b = run_suite(["eq-5.2", "eq-5.26"], order=4, mode="sampled", seed=7)
    assert a.ok
    assert a.render("json") == b.render("json")
    for c in a.checks:
        assert len(c.sampling["points"]) > c.sampling["degree_bound"]
    other = run_suite(["eq-5.2"], order=4, mode="sampled", seed=8)
    assert other.checks[0].sampling["points"] != a.checks[0].sampling["points"]


def test_renderings_agree():
    report = run_suite(["eq-4.21", "eq-1.3"], order=5)
    data = json.loads(report.render("json"))
    assert [c["status"] for c in data["checks"]] == ["pass", "pass"]
    assert data["totals"] == {"checks": 2, "pass": 2, "fail": 0}
    assert data["elapsed_ms"] is None
    csv_lines = report.render("csv").splitlines()
    assert csv_lines[0] == "id,kind,bound,status,witness"
    assert [line.split(",")[3] for line in csv_lines[1:]] == ["pass", "pass"]
    text = report.render("text")
    assert text.count("PASS") == 2 and "2 passed, 0 failed" in text
    with pytest.raises(ValueError):
        report.render("xml")


def test_timing_is_opt_in():
    assert run_suite(["eq-1.3"], order=3, timing=True).elapsed_ms is not None
    assert isinstance(Report("x", 1, "symbolic").to_json()["elapsed_ms"], type(None))


def test_bad_mode_or_order():
    with pytest.raises(ValueError):
        run_suite(["eq-1.3"], mode="fuzzy")
    with pytest.raises(ValueError):
        run_suite(["eq-1.3"], order=-1)


# --- corrected variants differ from the uncorrected ones ---------------------------

def test_uncorrected_half_binomial_exponent_differs():
    def half_binomial(k):
        num = ONE
        for j in range(k):
            num = num * (1 - q_pow(1 - 2 * j))
        return num / RatFunc.coerce(pochhammer(MPoly.var("q", 2), k, 2))

    for n in range(1, 5):
        base = (1 + q_pow(1)) * half_binomial(n + 1) * (-1) ** n
        assert base * q_pow(n * n + n) == andrews_catalan(n)
        assert base * q_pow(n * n) != andrews_catalan(n)


def test_uncorrected_psi_tilde_sign_differs():
    z = RatFunc.var("z")
    order = 4
    solution = TruncSeries(_solve_psi_tilde(order, z))
    q1 = q_pow(1)
    used = series_G(order, z=q1 * z, scale=q1 * z) / series_G(order, z=z, scale=z)
    negated = series_G(order, z=q1 * z, scale=-q1 * z) / series_G(order, z=z, scale=-z)
    assert solution == used
    assert solution != negated


def test_uncorrected_second_andrews_product_differs():
    order = 6
    q2 = MPoly.var("q", 2)
    andrews = TruncSeries.from_function(order, andrews_catalan)

    def second_product(den):
        first = TruncSeries([q_pow(n) / den(n) for n in range(order + 1)])
        other = TruncSeries([
            q_pow(n * n + n) * (-1) ** n / (RatFunc.coerce(pochhammer(-q2, n)) * RatFunc.coerce(pochhammer(MPoly.var("q"), n)))
            for n in range(order + 1)
        ])
        return first * other

    assert second_product(lambda n: RatFunc.coerce(pochhammer(q2, n, 2))) == andrews
    assert second_product(lambda n: RatFunc.coerce(pochhammer(-q2, n, 2))) != andrews
