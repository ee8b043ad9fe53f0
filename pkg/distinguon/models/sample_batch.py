from __future__ import annotations

from dataclasses import dataclass

from ..errors import ValidationError
from .occupation import Occupation


@dataclass(frozen=True)
class SampleBatch:
	"""
	Samples in shot-index order; replaying (seed, model, inputs) reproduces them.
	"""

	m: int
	n: int
	samples: tuple[Occupation, ...]
	seed: int
	model: str = ""

	def __post_init__(self) -> None:
		object.__setattr__(self, "samples", tuple(self.samples))
		for occ in self.samples:
			if occ.m != self.m or occ.n != self.n:
				raise ValidationError(f"sample {occ} is not an m={self.m}, n={self.n} occupation")

	def __len__(self) -> int:
		return len(self.samples)
