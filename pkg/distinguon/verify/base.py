from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

from ..config import Settings


@dataclass
class CheckResult:
	name: str
	passed: bool
	detail: str = ""
	suite: str = ""


class VerificationSuite(Protocol):
	"""
	Verification suite interface:
	- Input: Settings (caps, threads)
	- Output: one CheckResult per identity or comparison, in a fixed order
	"""

	suite_id: str

	def run(self, settings: Settings) -> list[CheckResult]:
		...


def close_check(name: str, error: float, atol: float) -> CheckResult:
	return CheckResult(name=name, passed=bool(error <= atol), detail=f"max error {error:.2e} (tol {atol:.0e})")
