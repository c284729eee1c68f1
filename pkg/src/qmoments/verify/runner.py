"""Suite runner and report renderings."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import List, Optional

from ..qkernel import RatFunc
from ..zdomain import ZDegree, iter_sample_points, numerator_bound
from .registry import IdentityCheck, select

MODES = ("symbolic", "sampled")
DEFAULT_ORDER = 10
DEFAULT_SEED = 2012


def _render(v) -> str:
    return str(v)


def _differs(lhs, rhs) -> bool:
    return not (lhs == rhs)


@dataclass
class CheckResult:
    id: str
    kind: str
    bound: int
    status: str
    comparisons: int = 0
    witness: Optional[dict] = None
    sampling: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"id": self.id, "kind": self.kind, "bound": self.bound, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.sampling is not None:
            out["sampling"] = self.sampling
        return out


@dataclass
class Report:
    suite: str
    order: int
    mode: str
    checks: List[CheckResult] = field(default_factory=list)
    elapsed_ms: Optional[int] = None

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "order": self.order,
            "mode": self.mode,
            "checks": [c.to_json() for c in self.checks],
            "totals": {"checks": len(self.checks), "pass": self.passed, "fail": self.failed},
            "elapsed_ms": self.elapsed_ms,
        }

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=False) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["id", "kind", "bound", "status", "witness"])
            for c in self.checks:
                w.writerow([c.id, c.kind, c.bound, c.status, json.dumps(c.witness) if c.witness else ""])
            return buf.getvalue()
        if fmt == "text":
            lines = []
            width = max((len(c.id) for c in self.checks), default=0)
            for c in self.checks:
                line = f"{c.status.upper():4s}  {c.id:<{width}}  {c.kind}  bound={c.bound}"
                if c.sampling:
                    line += f"  points={len(c.sampling['points'])} degree<={c.sampling['degree_bound']}"
                lines.append(line)
                if c.witness and not c.passed:
                    for k, v in c.witness.items():
                        lines.append(f"      {k}: {v}")
                elif c.witness and "value" in c.witness:
                    lines.append(f"      value: {c.witness['value']}")
            lines.append(
                f"suite={self.suite} order={self.order} mode={self.mode}: "
                f"{self.passed} passed, {self.failed} failed"
            )
            if self.elapsed_ms is not None:
                lines.append(f"elapsed_ms={self.elapsed_ms}")
            return "\n".join(lines) + "\n"
        raise ValueError(f"unknown format {fmt!r}")


def _compare(gen):
    """Consume ``(label, lhs, rhs)`` triples; return (count, witness or None, returned value)."""
    count = 0
    while True:
        try:
            label, lhs, rhs = next(gen)
        except StopIteration as stop:
            return count, None, stop.value
        count += 1
        if _differs(lhs, rhs):
            return count, {"at": label, "lhs": _render(lhs), "rhs": _render(rhs)}, None


def _run_symbolic(check: IdentityCheck, bound: int) -> CheckResult:
    gen = check.run(bound, RatFunc.var("z")) if check.zgeneric else check.run(bound)
    count, mismatch, value = _compare(gen)
    if mismatch is not None:
        return CheckResult(check.id, check.kind, bound, "fail", count, mismatch)
    witness = None if value is None else {"value": _render(value)}
    return CheckResult(check.id, check.kind, bound, "pass", count, witness)


def _run_sampled(check: IdentityCheck, bound: int, seed: int) -> CheckResult:
    degree = -1
    count = 0
    for _, lhs, rhs in check.run(bound, ZDegree.var()):
        count += 1
        d = numerator_bound(lhs, rhs)
        if d is not None:
            degree = max(degree, d)
    needed = degree + 1
    points: List[str] = []
    skipped: List[str] = []
    stream = iter_sample_points(seed)
    while len(points) < needed:
        z0 = next(stream)
        try:
            _, witness, _ = _compare(check.run(bound, z0))
        except ZeroDivisionError:
            skipped.append(str(z0))
            continue
        if witness is not None:
            witness["z"] = str(z0)
            return CheckResult(check.id, check.kind, bound, "fail", count, witness,
                               {"degree_bound": degree, "points": points + [str(z0)], "skipped": skipped})
        points.append(str(z0))
    sampling = {"degree_bound": degree, "points": points}
    if skipped:
        sampling["skipped"] = skipped
    return CheckResult(check.id, check.kind, bound, "pass", count, None, sampling)


def run_check(check: IdentityCheck, order: int = DEFAULT_ORDER, mode: str = "symbolic",
              seed: int = DEFAULT_SEED) -> CheckResult:
    bound = check.bound(order)
    try:
        if mode == "sampled" and check.zgeneric:
            return _run_sampled(check, bound, seed)
        return _run_symbolic(check, bound)
    except Exception as exc:  # a crashing check is a failing check
        return CheckResult(check.id, check.kind, bound, "fail", 0,
                           {"at": "exception", "error": f"{type(exc).__name__}: {exc}"})


def _suite_name(selector) -> str:
    if isinstance(selector, str):
        return selector
    return ",".join(selector)


def run_suite(selector="all", order: int = DEFAULT_ORDER, mode: str = "symbolic",
              seed: int = DEFAULT_SEED, timing: bool = False) -> Report:
    """Run the selected checks in registry order.

    ``elapsed_ms`` is only filled in when ``timing`` is set, so reports are
    byte-stable by default.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    if order < 0:
        raise ValueError("order must be non-negative")
    checks = select(selector)
    start = time.perf_counter()
    report = Report(_suite_name(selector), order, mode)
    for check in checks:
        report.checks.append(run_check(check, order, mode, seed))
    if timing:
        report.elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    return report
