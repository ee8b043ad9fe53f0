"""
Shared plumbing for the distribution models: input validation, output basis, and the
per-occupation evaluation loop.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

import numpy as np

from ..config import Settings, get_settings
from ..errors import ValidationError
from ..fock import basis_size, enumerate_occupations
from ..interferometer import validate_unitary
from ..models import Occupation


log = logging.getLogger(__name__)

T = TypeVar("T")

# Below this many output occupations the pool costs more than it saves.
_MIN_PARALLEL = 32


def prepare(u: np.ndarray, s: Occupation, settings: Settings, n_out: int | None = None) -> tuple[np.ndarray, list[Occupation]]:
	"""
	Validate U against S and return (U, output basis). n_out defaults to S.n (lossless).
	"""
	mat = validate_unitary(u)
	m = mat.shape[0]
	if s.m != m:
		raise ValidationError(f"input occupation {s} has {s.m} modes, unitary is {m}x{m}")
	n = s.n if n_out is None else int(n_out)
	settings.check_basis_size(basis_size(m, n))
	settings.check_permanent_order(n)
	return mat, enumerate_occupations(m, n, settings)


def evaluate(outputs: Sequence[Occupation], fn: Callable[[Occupation], T], settings: Settings | None = None) -> list[T]:
	"""
	fn applied to every output occupation; results come back in the order of outputs
	whatever the thread count.
	"""
	cfg = settings or get_settings()
	workers = min(cfg.worker_count, len(outputs))
	if workers <= 1 or len(outputs) < _MIN_PARALLEL:
		return [fn(occ) for occ in outputs]
	log.debug("evaluating %d occupations on %d threads", len(outputs), workers)
	with ThreadPoolExecutor(max_workers=workers) as executor:
		return list(executor.map(fn, outputs))
