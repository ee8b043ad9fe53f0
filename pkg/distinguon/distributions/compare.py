from __future__ import annotations

import numpy as np

from ..errors import ValidationError
from ..models import OccupationDistribution


def total_variation(d1: OccupationDistribution, d2: OccupationDistribution) -> float:
	"""
	(1/2) sum |D1 - D2| over the shared basis.
	"""
	if not d1.same_basis(d2):
		raise ValidationError(f"cannot compare distributions over different bases (m={d1.m}, n={d1.n} vs m={d2.m}, n={d2.n})")
	tvd = 0.5 * float(np.abs(d1.probabilities - d2.probabilities).sum())
	return min(max(tvd, 0.0), 1.0)


def max_abs_difference(d1: OccupationDistribution, d2: OccupationDistribution) -> float:
	if not d1.same_basis(d2):
		raise ValidationError("cannot compare distributions over different bases")
	if not len(d1):
		return 0.0
	return float(np.max(np.abs(d1.probabilities - d2.probabilities)))
