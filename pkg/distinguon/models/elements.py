from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ValidationError


@dataclass(frozen=True)
class PhaseShift:
	mode: int
	angle: float

	def matrix(self, m: int) -> np.ndarray:
		_check_mode(self.mode, m, "phase shift")
		mat = np.eye(m, dtype=complex)
		mat[self.mode, self.mode] = np.exp(1j * self.angle)
		return mat


@dataclass(frozen=True)
class MixingElement:
	"""
	Two-mode element on the adjacent pair (mode, mode + 1):
	diag(e^{i phi}, 1) @ [[cos theta, -sin theta], [sin theta, cos theta]].
	"""

	mode: int
	theta: float
	phi: float

	def block(self) -> np.ndarray:
		c, s = np.cos(self.theta), np.sin(self.theta)
		phase = np.exp(1j * self.phi)
		return np.array([[phase * c, -phase * s], [s, c]], dtype=complex)

	def matrix(self, m: int) -> np.ndarray:
		_check_mode(self.mode, m, "mixing element")
		_check_mode(self.mode + 1, m, "mixing element")
		mat = np.eye(m, dtype=complex)
		mat[self.mode : self.mode + 2, self.mode : self.mode + 2] = self.block()
		return mat


Element = PhaseShift | MixingElement


@dataclass(frozen=True)
class ElementSequence:
	"""
	Ordered optical elements followed by a final per-mode phase vector.
	"""

	m: int
	elements: tuple[Element, ...] = ()
	phases: tuple[float, ...] = field(default=())

	def __post_init__(self) -> None:
		if int(self.m) < 1:
			raise ValidationError(f"element sequence needs m >= 1, got {self.m}")
		phases = tuple(float(p) for p in self.phases) if self.phases else (0.0,) * int(self.m)
		if len(phases) != int(self.m):
			raise ValidationError(f"final phase vector needs {self.m} entries, got {len(phases)}")
		object.__setattr__(self, "phases", phases)
		object.__setattr__(self, "elements", tuple(self.elements))

	@property
	def mixing_count(self) -> int:
		return sum(1 for e in self.elements if isinstance(e, MixingElement))


def _check_mode(mode: int, m: int, what: str) -> None:
	if not 0 <= int(mode) < int(m):
		raise ValidationError(f"{what} touches mode {mode}, outside 0..{m - 1}")
