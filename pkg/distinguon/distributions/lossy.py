"""
Loss before the interferometer: k of the n+k input bosons are lost, uniformly over which
ones. The survivors S range over the n-boson suboccupations of S0 with hypergeometric
weight prod_i C(S0_i, S_i) / C(n+k, k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..config import Settings, get_settings
from ..errors import ValidationError
from ..fock import consistent_suboccupations
from ..models import LabelConfiguration, Occupation, OccupationDistribution
from ..permanent import permanent, submatrix
from .base import ModelInputs
from .engine import evaluate, prepare
from .partial import build_dist_matrix, partial_distribution


def _survivors(s0: Occupation, k: int) -> tuple[int, list[tuple[Occupation, float]]]:
	k = int(k)
	if k < 0 or k > s0.n:
		raise ValidationError(f"cannot lose {k} bosons from input {s0} holding {s0.n}")
	n = s0.n - k
	total = math.comb(s0.n, k)
	weighted = []
	for s in consistent_suboccupations(s0, n):
		ways = math.prod(math.comb(a, b) for a, b in zip(s0.counts, s.counts))
		weighted.append((s, ways / total))
	return n, weighted


def lossy_distribution(u: np.ndarray, s0: Occupation, k: int, settings: Settings | None = None) -> OccupationDistribution:
	cfg = settings or get_settings()
	n, survivors = _survivors(s0, k)
	mat, outputs = prepare(u, s0, cfg, n_out=n)
	terms = [(s, weight / s.factorial_product()) for s, weight in survivors]

	def prob(out: Occupation) -> float:
		acc = 0.0
		for s, coeff in terms:
			amp = permanent(submatrix(mat, out, s), cfg)
			acc += coeff * (amp.real**2 + amp.imag**2)
		return acc / out.factorial_product()

	probs = evaluate(outputs, prob, cfg)
	return OccupationDistribution.from_raw(s0.m, n, outputs, probs, model="lossy")


def lossy_partial_distribution(
	u: np.ndarray, s0: Occupation, k: int, labels: LabelConfiguration, settings: Settings | None = None
) -> OccupationDistribution:
	"""
	Loss combined with per-mode Label states: the hypergeometric mixture of
	partial_distribution over the surviving suboccupations, each with its own Sm.
	"""
	if labels.dist_matrix is not None:
		raise ValidationError("lossy model needs per-mode Label vectors; a fixed distinguishability matrix does not survive loss")
	cfg = settings or get_settings()
	n, survivors = _survivors(s0, k)
	if labels.label_dim > max(s0.n, 1):
		raise ValidationError(f"Label dimension {labels.label_dim} exceeds the input boson count {s0.n}")

	probs: np.ndarray | None = None
	outputs: tuple[Occupation, ...] = ()
	residue = 0.0
	for s, weight in survivors:
		smat = build_dist_matrix(s, labels, max_label_dim=s0.n)
		part = partial_distribution(u, s, smat, cfg)
		outputs = part.occupations
		probs = weight * part.probabilities if probs is None else probs + weight * part.probabilities
		residue = max(residue, part.max_imag_residue)
	assert probs is not None
	return OccupationDistribution.from_raw(s0.m, n, outputs, probs, model="lossy", max_imag_residue=residue)


@dataclass
class LossyModel:
	model_id: str = "lossy"

	def compute(self, inputs: ModelInputs, settings: Settings | None = None) -> OccupationDistribution:
		if inputs.labels is not None:
			return lossy_partial_distribution(inputs.unitary, inputs.occupation, inputs.lost, inputs.labels, settings)
		if inputs.dist_matrix is not None:
			raise ValidationError("lossy model takes Label vectors, not a distinguishability matrix")
		return lossy_distribution(inputs.unitary, inputs.occupation, inputs.lost, settings)
