"""
Verification suites: each returns CheckResults; the CLI prints them as a table.
"""

from .base import CheckResult, VerificationSuite
from .limits import LimitsSuite
from .oracle import OracleSuite
from .registry import available_suites, get_suite, register_suite, run_suites
from .rep_theory import RepTheorySuite
from .sampling import SamplingSuite

# Default registration (order = run order for "all")
register_suite(RepTheorySuite())
register_suite(LimitsSuite())
register_suite(OracleSuite())
register_suite(SamplingSuite())

__all__ = [
	"CheckResult",
	"VerificationSuite",
	"available_suites",
	"get_suite",
	"register_suite",
	"run_suites",
	"RepTheorySuite",
	"LimitsSuite",
	"OracleSuite",
	"SamplingSuite",
]
