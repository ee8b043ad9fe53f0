from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..config import Settings, get_settings
from ..models import Occupation, OccupationDistribution
from ..permanent import abs_squared, permanent, submatrix
from .base import ModelInputs
from .engine import evaluate, prepare
from .partial import partial_distribution


log = logging.getLogger(__name__)


def distinguishable_distribution(u: np.ndarray, s: Occupation, settings: Settings | None = None) -> OccupationDistribution:
	"""
	Fully distinguishable bosons: Pr[S'] = per(|U_{S',S}|^2) / prod S'_i!.

	Inputs with collisions go through partial_distribution with an identity
	distinguishability matrix; its block-permanent normalization reduces to the same
	closed form, so both paths agree.
	"""
	cfg = settings or get_settings()
	if not s.is_collision_free():
		log.debug("input %s has collisions; using identity distinguishability matrix", s)
		dist = partial_distribution(u, s, np.eye(s.n, dtype=complex), cfg)
		return OccupationDistribution.from_raw(
			s.m, s.n, dist.occupations, dist.probabilities, model="distinguishable", max_imag_residue=dist.max_imag_residue
		)

	mat, outputs = prepare(u, s, cfg)

	def prob(out: Occupation) -> float:
		return permanent(abs_squared(submatrix(mat, out, s)), cfg).real / out.factorial_product()

	probs = evaluate(outputs, prob, cfg)
	return OccupationDistribution.from_raw(s.m, s.n, outputs, probs, model="distinguishable")


@dataclass
class DistinguishableModel:
	model_id: str = "distinguishable"

	def compute(self, inputs: ModelInputs, settings: Settings | None = None) -> OccupationDistribution:
		return distinguishable_distribution(inputs.unitary, inputs.occupation, settings)
