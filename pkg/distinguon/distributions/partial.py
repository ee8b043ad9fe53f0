"""
Partial distinguishability.

With s, s' the canonical words of S, S' and M = U_{S',S}:

    Pr[S'] = sum_{tau, tau'} prod_k M[k, tau(k)] M*[k, tau'(k)] Sm[tau'(k), tau(k)] / Z

Substituting pi = tau' o tau^-1 collapses the double sum to n! permanents:

    sum_pi  prod_j Sm[pi(j), j]  *  per(M o conj(M[:, pi]))

Z = prod_i S'_i! * prod_modes per(Sm restricted to the particles of that input mode).
For an Sm built from per-mode Label vectors every block is all-ones, so Z is the usual
prod S'_i! S_i!; for the identity matrix Z is prod S'_i!.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np

from ..config import IMAG_RESIDUE_ATOL, Settings, get_settings
from ..errors import NumericalError, ValidationError
from ..models import LabelConfiguration, Occupation, OccupationDistribution, validate_dist_matrix
from ..permanent import permanent, submatrix
from .base import ModelInputs
from .engine import evaluate, prepare


log = logging.getLogger(__name__)


def build_dist_matrix(s: Occupation, labels: LabelConfiguration, max_label_dim: int | None = None) -> np.ndarray:
	"""
	Sm[k, l] = <Phi_{s_k} | Phi_{s_l}> over the canonical (mode-ascending) word of S.
	Label vectors may be at most max_label_dim wide (default: the boson count).
	"""
	if labels.dist_matrix is not None:
		return validate_dist_matrix(labels.dist_matrix)
	limit = max(s.n if max_label_dim is None else int(max_label_dim), 1)
	if labels.label_dim > limit:
		raise ValidationError(f"Label dimension {labels.label_dim} exceeds {limit} (at most one Label mode per boson)")
	if s.n == 0:
		return np.zeros((0, 0), dtype=complex)
	modes = [letter - 1 for letter in s.canonical_word().letters]
	vectors = np.array([labels.vector(mode) for mode in modes], dtype=complex)
	return validate_dist_matrix(vectors.conj() @ vectors.T)


def _dist_for(s: Occupation, inputs: ModelInputs) -> np.ndarray:
	if inputs.dist_matrix is not None:
		return np.asarray(inputs.dist_matrix, dtype=complex)
	if inputs.labels is not None:
		return build_dist_matrix(s, inputs.labels)
	raise ValidationError("partial model needs a distinguishability matrix or Label vectors")


def _permutation_weights(smat: np.ndarray) -> list[tuple[complex, np.ndarray]]:
	n = smat.shape[0]
	cols = np.arange(n)
	terms: list[tuple[complex, np.ndarray]] = []
	for perm in itertools.permutations(range(n)):
		idx = np.asarray(perm, dtype=int)
		weight = complex(np.prod(smat[idx, cols]))
		if weight != 0:
			terms.append((weight, idx))
	return terms


def _block_normalization(s: Occupation, smat: np.ndarray, settings: Settings) -> float:
	total = 1.0
	start = 0
	for count in s.counts:
		if count > 1:
			block = smat[start : start + count, start : start + count]
			total *= permanent(block, settings).real
		start += count
	return total


def partial_distribution(u: np.ndarray, s: Occupation, dist_matrix: np.ndarray, settings: Settings | None = None) -> OccupationDistribution:
	cfg = settings or get_settings()
	smat = validate_dist_matrix(dist_matrix)
	if smat.shape != (s.n, s.n):
		raise ValidationError(f"distinguishability matrix must be {s.n}x{s.n} for input {s}, got {smat.shape}")
	cfg.check_partial_order(s.n)
	mat, outputs = prepare(u, s, cfg)

	terms = _permutation_weights(smat)
	z_in = _block_normalization(s, smat, cfg)
	log.debug("partial: %d of %d permutations carry weight", len(terms), math.factorial(s.n))

	def value(out: Occupation) -> complex:
		sub = submatrix(mat, out, s)
		conj = sub.conj()
		total = 0j
		for weight, perm in terms:
			total += weight * permanent(sub * conj[:, perm], cfg)
		return total / (out.factorial_product() * z_in)

	values = np.asarray(evaluate(outputs, value, cfg), dtype=complex)
	residue = float(np.max(np.abs(values.imag))) if values.size else 0.0
	if residue > IMAG_RESIDUE_ATOL:
		raise NumericalError(f"partial: imaginary residue {residue:.3e} exceeds {IMAG_RESIDUE_ATOL}")
	return OccupationDistribution.from_raw(s.m, s.n, outputs, values.real, model="partial", max_imag_residue=residue)


@dataclass
class PartialModel:
	model_id: str = "partial"

	def compute(self, inputs: ModelInputs, settings: Settings | None = None) -> OccupationDistribution:
		smat = _dist_for(inputs.occupation, inputs)
		return partial_distribution(inputs.unitary, inputs.occupation, smat, settings)
