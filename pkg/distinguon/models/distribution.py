from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from ..config import NEGATIVE_CLAMP, NORMALIZATION_ATOL
from ..errors import NumericalError, ValidationError
from .occupation import Occupation


log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OccupationDistribution:
	"""
	Probability table over the full n-boson, m-mode basis in canonical order.

	clamped counts entries in [-1e-12, 0) that were set to 0; max_imag_residue is the
	largest imaginary part discarded while assembling (0 for models with real kernels).
	"""

	m: int
	n: int
	occupations: tuple[Occupation, ...]
	probabilities: np.ndarray
	model: str = ""
	clamped: int = 0
	max_imag_residue: float = 0.0
	_index: dict[Occupation, int] = field(default_factory=dict, repr=False)

	def __post_init__(self) -> None:
		if len(self.occupations) != len(self.probabilities):
			raise ValidationError("distribution needs one probability per occupation")
		for occ in self.occupations:
			if occ.m != self.m or occ.n != self.n:
				raise ValidationError(f"occupation {occ} does not belong to the m={self.m}, n={self.n} basis")
		if not self._index:
			self._index.update({occ: i for i, occ in enumerate(self.occupations)})

	@classmethod
	def from_raw(
		cls,
		m: int,
		n: int,
		occupations: Sequence[Occupation],
		raw: Sequence[float] | np.ndarray,
		model: str = "",
		max_imag_residue: float = 0.0,
		normalization_atol: float = NORMALIZATION_ATOL,
	) -> "OccupationDistribution":
		"""
		Clamp tiny negatives, reject real negatives, and check normalization.
		"""
		probs = np.asarray(raw, dtype=float).copy()
		if probs.size and float(probs.min()) < -NEGATIVE_CLAMP:
			worst = int(np.argmin(probs))
			raise NumericalError(f"{model or 'distribution'}: probability {probs[worst]:.3e} for {occupations[worst]} is below -{NEGATIVE_CLAMP}")
		negative = probs < 0.0
		clamped = int(negative.sum())
		if clamped:
			log.warning("%s: clamped %d tiny negative probabilities to 0", model or "distribution", clamped)
			probs[negative] = 0.0
		total = float(probs.sum())
		if abs(total - 1.0) > normalization_atol:
			raise NumericalError(f"{model or 'distribution'}: probabilities sum to {total!r}, off by more than {normalization_atol}")
		return cls(
			m=int(m),
			n=int(n),
			occupations=tuple(occupations),
			probabilities=probs,
			model=model,
			clamped=clamped,
			max_imag_residue=float(max_imag_residue),
		)

	def __len__(self) -> int:
		return len(self.occupations)

	def __getitem__(self, occupation: Occupation | Sequence[int]) -> float:
		occ = occupation if isinstance(occupation, Occupation) else Occupation(tuple(occupation))
		idx = self.index_of(occ)
		if idx is None:
			raise ValidationError(f"occupation {occ} is not in the m={self.m}, n={self.n} basis")
		return float(self.probabilities[idx])

	def index_of(self, occupation: Occupation) -> int | None:
		return self._index.get(occupation)

	def total(self) -> float:
		return float(self.probabilities.sum())

	def same_basis(self, other: "OccupationDistribution") -> bool:
		return self.m == other.m and self.n == other.n and self.occupations == other.occupations

	def entries(self) -> list[tuple[Occupation, float]]:
		return [(occ, float(p)) for occ, p in zip(self.occupations, self.probabilities)]

	def as_dict(self) -> dict[tuple[int, ...], float]:
		return {occ.counts: float(p) for occ, p in zip(self.occupations, self.probabilities)}
