"""Exact q-Fibonacci, q-Lucas and q-Chebyshev families, their moments and q-Catalan numbers."""
from .families import CATALOG, FamilyId, XPoly, family, family_closed, family_recur
from .moments import (
    andrews_catalan,
    cantero_iserles,
    gf_moments,
    moment,
    moments_by_route,
    qcatalan_carlitz,
    triangle,
)
from .qkernel import MPoly, RatFunc, limit_q1, parse, to_ratfunc
from .qseries import TruncSeries

__version__ = "0.1.0"

__all__ = [
    "CATALOG", "FamilyId", "XPoly", "family", "family_closed", "family_recur",
    "andrews_catalan", "cantero_iserles", "gf_moments", "moment", "moments_by_route",
    "qcatalan_carlitz", "triangle", "MPoly", "RatFunc", "limit_q1", "parse", "to_ratfunc",
    "TruncSeries",
]
