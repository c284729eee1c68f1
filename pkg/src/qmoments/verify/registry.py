"""Identity registry: stable ids mapped to check procedures."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Tuple

KINDS = ("poly-identity", "series-identity", "moment-equality", "annihilation", "limit")
SECTIONS = ("s1", "s2", "s3", "s4", "s5", "final")

Comparison = Tuple[str, object, object]


@dataclass(frozen=True)
class IdentityCheck:
    """A registered identity.

    ``run(bound)`` yields ``(label, lhs, rhs)`` triples.  When ``zgeneric`` is
    set, ``run(bound, z)`` accepts any z-domain value so the check can be
    replayed for degree tracking and sampling.
    """

    id: str
    kind: str
    section: str
    run: Callable[..., Iterator[Comparison]]
    cap: Optional[int] = None
    fixed: bool = False
    classical: bool = False
    zgeneric: bool = False
    summary: str = ""

    def bound(self, order: int) -> int:
        if self.fixed:
            return self.cap
        return order if self.cap is None else min(order, self.cap)


REGISTRY: Dict[str, IdentityCheck] = {}


def register(check_id: str, kind: str, section: str, *, cap: Optional[int] = None, fixed: bool = False,
             classical: bool = False, zgeneric: bool = False, summary: str = ""):
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if section not in SECTIONS:
        raise ValueError(f"unknown section {section!r}")

    def deco(fn):
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id!r}")
        REGISTRY[check_id] = IdentityCheck(
            check_id, kind, section, fn, cap, fixed, classical, zgeneric, summary or (fn.__doc__ or "").strip()
        )
        return fn

    return deco


def add_check(check: IdentityCheck) -> None:
    if check.id in REGISTRY:
        raise ValueError(f"duplicate check id {check.id!r}")
    REGISTRY[check.id] = check


def series_pairs(name: str, a, b) -> Iterator[Comparison]:
    """Coefficientwise comparison of two truncated series."""
    n = min(a.order, b.order)
    for i in range(n + 1):
        yield (f"{name} u^{i}", a[i], b[i])


def load_all() -> Dict[str, IdentityCheck]:
    from . import checks_s1, checks_s2, checks_s3, checks_s4, checks_s5, checks_final, checks_catalog  # noqa: F401

    return REGISTRY


def select(selector) -> List[IdentityCheck]:
    """``"all"``, a section name (``s1``..``s5``, ``final``, ``classical``) or a list of ids."""
    reg = load_all()
    if isinstance(selector, str):
        if selector == "all":
            return list(reg.values())
        if selector == "classical":
            return [c for c in reg.values() if c.classical]
        if selector in SECTIONS:
            return [c for c in reg.values() if c.section == selector]
        selector = [selector]
    unknown = [i for i in selector if i not in reg]
    if unknown:
        raise KeyError(
            f"unknown check id(s): {', '.join(unknown)}. Known ids: {', '.join(sorted(reg))}"
        )
    return [reg[i] for i in selector]
