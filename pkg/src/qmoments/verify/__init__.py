"""Identity registry, suite runner and reports."""
from .registry import REGISTRY, IdentityCheck, load_all, select
from .runner import CheckResult, Report, run_check, run_suite

__all__ = ["REGISTRY", "IdentityCheck", "load_all", "select", "CheckResult", "Report", "run_check", "run_suite"]
