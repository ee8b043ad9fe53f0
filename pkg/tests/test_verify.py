import pytest

from distinguon.config import Settings
from distinguon.errors import ValidationError
from distinguon.verify import (
	CheckResult,
	available_suites,
	get_suite,
	register_suite,
	run_suites,
)
from distinguon.verify.base import close_check
from distinguon.verify.registry import _REGISTRY


def _failures(results):
	return [(r.name, r.detail) for r in results if not r.passed]


def test_registered_suites_in_run_order():
	assert available_suites() == ["rep-theory", "limits", "oracle", "sampling"]
	with pytest.raises(ValidationError, match="available"):
		get_suite("nope")


def test_close_check():
	assert close_check("x", 1e-11, 1e-10).passed
	failed = close_check("x", 1e-3, 1e-10)
	assert not failed.passed
	assert "1.00e-03" in failed.detail


def test_rep_theory_suite_passes():
	results = run_suites("rep-theory", Settings())
	assert results
	assert _failures(results) == []
	assert {r.suite for r in results} == {"rep-theory"}


def test_limits_suite_passes():
	results = run_suites("limits", Settings())
	assert _failures(results) == []
	names = [r.name for r in results]
	assert "HOM ideal (1/2, 0, 1/2)" in names
	assert any(name.startswith("Ryser vs brute force") for name in names)


@pytest.mark.slow
def test_oracle_suite_passes():
	results = run_suites("oracle", Settings())
	assert _failures(results) == []
	assert any(r.name == "Schmidt rank n=3" for r in results)


@pytest.mark.slow
def test_sampling_suite_passes():
	assert _failures(run_suites("sampling", Settings())) == []


class _Failing:
	suite_id = "always-fails"

	def run(self, settings):
		return [CheckResult("broken", False, "on purpose")]


def test_custom_suite_registration():
	register_suite(_Failing())
	try:
		results = run_suites("always-fails")
		assert [(r.name, r.passed, r.suite) for r in results] == [("broken", False, "always-fails")]
	finally:
		_REGISTRY.pop("always-fails", None)
	assert "always-fails" not in available_suites()
