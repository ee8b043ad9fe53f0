from __future__ import annotations

import logging
import time

from ..config import Settings, get_settings
from ..errors import ValidationError
from .base import CheckResult, VerificationSuite


log = logging.getLogger(__name__)

_REGISTRY: dict[str, VerificationSuite] = {}


def register_suite(suite: VerificationSuite) -> None:
	_REGISTRY[str(getattr(suite, "suite_id", ""))] = suite


def get_suite(suite_id: str) -> VerificationSuite:
	sid = str(suite_id or "").strip()
	if sid in _REGISTRY:
		return _REGISTRY[sid]
	raise ValidationError(f"unknown suite {sid!r}; available: {', '.join(available_suites())}, all")


def available_suites() -> list[str]:
	return list(_REGISTRY)


def run_suites(suite_id: str, settings: Settings | None = None) -> list[CheckResult]:
	"""
	Run one suite, or every registered suite for "all", in registration order.
	"""
	cfg = settings or get_settings()
	names = available_suites() if str(suite_id).strip() == "all" else [suite_id]
	suites = [get_suite(name) for name in names]
	results: list[CheckResult] = []
	for suite in suites:
		started = time.perf_counter()
		checks = suite.run(cfg)
		for check in checks:
			check.suite = suite.suite_id
		failed = sum(1 for c in checks if not c.passed)
		log.info("suite %s: %d checks, %d failed, %.1fs", suite.suite_id, len(checks), failed, time.perf_counter() - started)
		results.extend(checks)
	return results
