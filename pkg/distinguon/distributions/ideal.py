from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..config import Settings, get_settings
from ..models import Occupation, OccupationDistribution
from ..permanent import permanent, submatrix
from .base import ModelInputs
from .engine import evaluate, prepare


def ideal_distribution(u: np.ndarray, s: Occupation, settings: Settings | None = None) -> OccupationDistribution:
	"""
	Indistinguishable bosons: Pr[S'] = |per(U_{S',S})|^2 / (prod S'_i! S_i!).
	"""
	cfg = settings or get_settings()
	mat, outputs = prepare(u, s, cfg)
	in_fact = s.factorial_product()

	def prob(out: Occupation) -> float:
		amp = permanent(submatrix(mat, out, s), cfg)
		return (amp.real**2 + amp.imag**2) / (out.factorial_product() * in_fact)

	probs = evaluate(outputs, prob, cfg)
	return OccupationDistribution.from_raw(s.m, s.n, outputs, probs, model="ideal")


@dataclass
class IdealModel:
	model_id: str = "ideal"

	def compute(self, inputs: ModelInputs, settings: Settings | None = None) -> OccupationDistribution:
		return ideal_distribution(inputs.unitary, inputs.occupation, settings)
