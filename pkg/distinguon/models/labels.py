from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from ..config import HERMITIAN_ATOL, PSD_ATOL, UNIT_NORM_ATOL
from ..errors import ValidationError


@dataclass(frozen=True, eq=False)
class LabelConfiguration:
	"""
	Internal (Label) state of the bosons, in one of two forms:
	- labels: one unit-norm vector Phi_i per occupied System mode (0-based mode keys)
	- dist_matrix: an n x n distinguishability matrix given directly
	"""

	labels: dict[int, np.ndarray] = field(default_factory=dict)
	dist_matrix: np.ndarray | None = None

	def __post_init__(self) -> None:
		if self.dist_matrix is None and not self.labels:
			raise ValidationError("label configuration needs either Label vectors or a distinguishability matrix")
		if self.dist_matrix is not None and self.labels:
			raise ValidationError("label configuration takes Label vectors or a distinguishability matrix, not both")
		if self.dist_matrix is not None:
			validate_dist_matrix(self.dist_matrix)

	@classmethod
	def from_labels(cls, labels: Mapping[int, Sequence[complex] | np.ndarray]) -> "LabelConfiguration":
		if not labels:
			raise ValidationError("no Label vectors given")
		width = max(len(np.atleast_1d(v)) for v in labels.values())
		vectors: dict[int, np.ndarray] = {}
		for mode, vec in labels.items():
			if int(mode) < 0:
				raise ValidationError(f"Label mode must be 0-based non-negative, got {mode}")
			arr = np.zeros(width, dtype=complex)
			raw = np.asarray(vec, dtype=complex).ravel()
			arr[: raw.size] = raw
			if not np.all(np.isfinite(arr)):
				raise ValidationError(f"Label vector for mode {mode} has non-finite entries")
			norm = float(np.linalg.norm(arr))
			if abs(norm - 1.0) > UNIT_NORM_ATOL:
				raise ValidationError(f"Label vector for mode {mode} has norm {norm!r}, expected 1")
			vectors[int(mode)] = arr
		return cls(labels=vectors)

	@classmethod
	def from_matrix(cls, matrix: np.ndarray | Sequence[Sequence[complex]]) -> "LabelConfiguration":
		return cls(dist_matrix=np.asarray(matrix, dtype=complex))

	@property
	def label_dim(self) -> int:
		if not self.labels:
			return 0
		return int(next(iter(self.labels.values())).size)

	def vector(self, mode: int) -> np.ndarray:
		vec = self.labels.get(int(mode))
		if vec is None:
			raise ValidationError(f"no Label vector for occupied mode {mode}")
		return vec


def validate_dist_matrix(matrix: np.ndarray) -> np.ndarray:
	"""
	Hermitian, unit diagonal, positive semidefinite; raise naming the violated property.
	"""
	s = np.asarray(matrix, dtype=complex)
	if s.ndim != 2 or s.shape[0] != s.shape[1]:
		raise ValidationError(f"distinguishability matrix must be square, got shape {s.shape}")
	if not np.all(np.isfinite(s)):
		raise ValidationError("distinguishability matrix has non-finite entries")
	herm = float(np.max(np.abs(s - s.conj().T))) if s.size else 0.0
	if herm > HERMITIAN_ATOL:
		raise ValidationError(f"distinguishability matrix is not Hermitian (max deviation {herm:.3e})")
	diag = float(np.max(np.abs(np.diag(s) - 1.0))) if s.size else 0.0
	if diag > HERMITIAN_ATOL:
		raise ValidationError(f"distinguishability matrix needs a unit diagonal (max deviation {diag:.3e})")
	if s.size:
		min_eig = float(np.linalg.eigvalsh((s + s.conj().T) / 2.0).min())
		if min_eig < -PSD_ATOL:
			raise ValidationError(f"distinguishability matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})")
	return s
