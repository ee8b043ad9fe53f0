from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

import numpy as np

from ..config import Settings
from ..models import LabelConfiguration, Occupation, OccupationDistribution


@dataclass(frozen=True, eq=False)
class ModelInputs:
	"""
	Everything a distribution model may read. Models ignore the fields they do not use
	and raise ValidationError when a field they need is missing.
	"""

	unitary: np.ndarray
	occupation: Occupation
	dist_matrix: np.ndarray | None = None
	labels: LabelConfiguration | None = None
	lost: int = 0


class DistributionModel(Protocol):
	"""
	Distribution model interface:
	- Input: ModelInputs (+ optional Settings for caps and thread count)
	- Output: OccupationDistribution over the full output basis, canonical order
	"""

	model_id: str

	def compute(self, inputs: ModelInputs, settings: Settings | None = None) -> OccupationDistribution:
		...
