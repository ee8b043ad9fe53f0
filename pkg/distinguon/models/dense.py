from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..config import HERMITIAN_ATOL, PSD_ATOL, UNIT_NORM_ATOL
from ..errors import ValidationError


@dataclass(frozen=True, eq=False)
class DenseState:
	"""
	Pure state on n qudits. Each qudit is a (System, Label) pair with flat index
	system * label_dim + label; label_dim == 1 means plain System qudits.
	"""

	system_dim: int
	n: int
	amplitudes: np.ndarray
	label_dim: int = 1

	def __post_init__(self) -> None:
		expected = self.local_dim ** self.n
		if self.amplitudes.shape != (expected,):
			raise ValidationError(f"dense state needs {expected} amplitudes, got shape {self.amplitudes.shape}")

	@property
	def local_dim(self) -> int:
		return int(self.system_dim) * int(self.label_dim)

	@property
	def is_paired(self) -> bool:
		return self.label_dim > 1

	def norm(self) -> float:
		return float(np.linalg.norm(self.amplitudes))

	def validate(self) -> "DenseState":
		norm = self.norm()
		if abs(norm - 1.0) > UNIT_NORM_ATOL:
			raise ValidationError(f"state norm is {norm!r}, expected 1")
		return self

	def tensor(self) -> np.ndarray:
		return self.amplitudes.reshape((self.local_dim,) * self.n)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
	"""
	Mixed state on n qudits (same qudit convention as DenseState).
	"""

	system_dim: int
	n: int
	matrix: np.ndarray
	label_dim: int = 1

	def __post_init__(self) -> None:
		dim = self.local_dim ** self.n
		if self.matrix.shape != (dim, dim):
			raise ValidationError(f"density matrix must be {dim}x{dim}, got shape {self.matrix.shape}")

	@classmethod
	def from_state(cls, state: DenseState) -> "DensityMatrix":
		amp = state.amplitudes
		return cls(state.system_dim, state.n, np.outer(amp, amp.conj()), state.label_dim)

	@property
	def local_dim(self) -> int:
		return int(self.system_dim) * int(self.label_dim)

	@property
	def dim(self) -> int:
		return int(self.matrix.shape[0])

	def trace(self) -> complex:
		return complex(np.trace(self.matrix))

	def validate(self, trace_atol: float = 1e-10) -> "DensityMatrix":
		rho = self.matrix
		herm = float(np.max(np.abs(rho - rho.conj().T))) if rho.size else 0.0
		if herm > HERMITIAN_ATOL:
			raise ValidationError(f"density matrix is not Hermitian (max deviation {herm:.3e})")
		tr = self.trace()
		if abs(tr - 1.0) > trace_atol:
			raise ValidationError(f"density matrix trace is {tr!r}, expected 1")
		min_eig = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2.0).min())
		if min_eig < -PSD_ATOL:
			raise ValidationError(f"density matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})")
		return self

	def tensor(self) -> np.ndarray:
		return self.matrix.reshape((self.local_dim,) * (2 * self.n))


Quantum = DenseState | DensityMatrix
