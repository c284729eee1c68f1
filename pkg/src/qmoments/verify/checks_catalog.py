"""Per-family checks generated from the catalog."""
from __future__ import annotations

from functools import partial

from ..families import FamilyId, catalog_ids, classical_partner, family_closed, family_recur
from ..moments import has_series_route, moments_by_route
from ..qkernel import ONE, q_pow
from .registry import IdentityCheck, add_check


def _top(fid: FamilyId, bound: int) -> int:
    return bound if fid.m <= 2 else min(bound, 8)


def _routes(fid: FamilyId, bound: int):
    for n in range(_top(fid, bound) + 1):
        yield (f"n={n}", family_closed(fid, n), family_recur(fid, n))


def _limit(fid: FamilyId, partner: FamilyId, bound: int):
    for n in range(_top(fid, bound) + 1):
        yield (f"n={n}", family_closed(fid, n).limit_q1(), family_closed(partner, n))


def _moments(fid: FamilyId, bound: int):
    top = bound if fid.m <= 2 else min(bound, 5)
    tri = moments_by_route(fid, top, "triangle")
    exp = moments_by_route(fid, top, "expand")
    ser = moments_by_route(fid, top, "series") if has_series_route(fid) else None
    for n in range(top + 1):
        yield (f"n={n} expand", exp[n], tri[n])
        if ser is not None:
            yield (f"n={n} series", ser[n], tri[n])


def _limit_instances():
    out = [fid for fid in catalog_ids() if classical_partner(fid) is not None]
    out += [FamilyId("fz", z=-q_pow(1)), FamilyId("lz", z=-q_pow(1)), FamilyId("carlitz_lucas", s=ONE)]
    out += [FamilyId(name, m, s=ONE) for name in ("fs", "ls") for m in range(1, 5)]
    return out


MOMENT_FAMILIES = (
    [FamilyId(n) for n in ("f", "l", "u", "t", "fz", "lz", "tc", "uc")]
    + [FamilyId("fq", m) for m in (1, 2, 3, 4)]
    + [FamilyId("fm", m) for m in (2, 3, 4)]
    + [FamilyId("lm", m) for m in (2, 3)]
    + [FamilyId("Lm", m) for m in (2, 3)]
    + [FamilyId("fs", 2)]
)

for _fid in catalog_ids():
    add_check(IdentityCheck(f"route-{_fid.label()}", "poly-identity", "final", partial(_routes, _fid), cap=10,
                            summary="closed coefficients against the defining recurrence"))

for _fid in _limit_instances():
    _partner = classical_partner(_fid)
    add_check(IdentityCheck(f"limit-{_fid.label()}", "limit", "final", partial(_limit, _fid, _partner), cap=10,
                            classical=True, summary=f"q -> 1 gives {_partner.label()}"))

for _fid in MOMENT_FAMILIES:
    add_check(IdentityCheck(f"moments-{_fid.label()}", "moment-equality", "final", partial(_moments, _fid), cap=8,
                            summary="lattice-path triangle, basis expansion and generating function agree"))
