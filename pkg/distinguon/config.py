from __future__ import annotations

import logging
import os
from collections.abc import Mapping

from pydantic import BaseModel, ConfigDict, Field

from .errors import SizeError, ValidationError


log = logging.getLogger(__name__)

ENV_MAX_N = "DISTINGUON_MAX_N"
ENV_THREADS = "DISTINGUON_THREADS"
ENV_LOG_LEVEL = "DISTINGUON_LOG_LEVEL"

DEFAULT_MAX_PERMANENT_N = 24

# --- Tolerances (shared by every module) ---
UNITARY_ATOL = 1e-10
NORMALIZATION_ATOL = 1e-9
NEGATIVE_CLAMP = 1e-12
HERMITIAN_ATOL = 1e-12
UNIT_NORM_ATOL = 1e-12
PSD_ATOL = 1e-10
IMAG_RESIDUE_ATOL = 1e-10
POSTSELECTION_MIN = 1e-12
SCHMIDT_TOL = 1e-10


class Settings(BaseModel):
	"""
	Size caps and parallelism. Every cap is a policy constant: exceeding it raises SizeError.
	"""

	model_config = ConfigDict(frozen=True)

	max_permanent_n: int = Field(DEFAULT_MAX_PERMANENT_N, ge=0)
	max_basis_size: int = Field(10**6, ge=1)
	max_enumeration: int = Field(10**7, ge=1)
	max_partial_n: int = Field(7, ge=0)
	max_dense_amplitudes: int = Field(2**20, ge=1)
	max_density_dim: int = Field(4096, ge=1)
	threads: int | None = Field(None, ge=1)
	unsafe_size: bool = False
	log_level: str = "WARNING"

	@classmethod
	def from_env(cls, environ: Mapping[str, str] | None = None) -> "Settings":
		env = os.environ if environ is None else environ
		values: dict[str, object] = {}

		raw_max_n = str(env.get(ENV_MAX_N, "") or "").strip()
		if raw_max_n:
			values["max_permanent_n"] = _parse_positive_int(ENV_MAX_N, raw_max_n)

		raw_threads = str(env.get(ENV_THREADS, "") or "").strip()
		if raw_threads:
			values["threads"] = _parse_positive_int(ENV_THREADS, raw_threads)

		raw_level = str(env.get(ENV_LOG_LEVEL, "") or "").strip().upper()
		if raw_level:
			if not isinstance(logging.getLevelName(raw_level), int):
				raise ValidationError(f"{ENV_LOG_LEVEL}: unknown log level {raw_level!r}")
			values["log_level"] = raw_level

		return cls(**values)

	@property
	def worker_count(self) -> int:
		return int(self.threads or os.cpu_count() or 1)

	def check_permanent_order(self, n: int) -> None:
		if self.unsafe_size:
			return
		if n > self.max_permanent_n:
			raise SizeError(f"permanent of order {n} exceeds the cap {self.max_permanent_n} (use --unsafe-size or {ENV_MAX_N})")

	def check_basis_size(self, size: int, what: str = "output basis") -> None:
		if size > self.max_basis_size:
			raise SizeError(f"{what} has {size} occupations, cap is {self.max_basis_size}")

	def check_partial_order(self, n: int) -> None:
		if n > self.max_partial_n:
			raise SizeError(f"partial-distinguishability sum over (n!)^2 terms needs n <= {self.max_partial_n}, got n={n}")

	def check_dense_amplitudes(self, count: int) -> None:
		if count > self.max_dense_amplitudes:
			raise SizeError(f"dense state needs {count} amplitudes, cap is {self.max_dense_amplitudes}")

	def check_density_dim(self, dim: int) -> None:
		if dim > self.max_density_dim:
			raise SizeError(f"density matrix of dimension {dim} exceeds the cap {self.max_density_dim}")


def _parse_positive_int(name: str, raw: str) -> int:
	try:
		value = int(raw)
	except ValueError as e:
		raise ValidationError(f"{name}: expected a positive integer, got {raw!r}") from e
	if value < 1:
		raise ValidationError(f"{name}: expected a positive integer, got {value}")
	return value


_SETTINGS: Settings | None = None


def get_settings() -> Settings:
	global _SETTINGS
	if _SETTINGS is None:
		_SETTINGS = Settings.from_env()
		if _SETTINGS.max_permanent_n != DEFAULT_MAX_PERMANENT_N:
			log.warning("permanent cap set to %d from %s", _SETTINGS.max_permanent_n, ENV_MAX_N)
	return _SETTINGS


def configure(settings: Settings | None) -> Settings | None:
	"""
	Replace the process-wide settings; returns the previous ones (None resets to env defaults).
	"""
	global _SETTINGS
	previous = _SETTINGS
	_SETTINGS = settings
	if settings is not None and settings.unsafe_size:
		log.warning("unsafe-size enabled: permanent cap lifted")
	return previous
