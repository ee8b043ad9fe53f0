"""
End-to-end oracle runs. Each mirrors one distribution model using only dense
first-quantized linear algebra (no permanents), so agreement is a real cross-check.
"""

from __future__ import annotations

import numpy as np

from ..config import Settings, get_settings
from ..errors import ValidationError
from ..interferometer import validate_unitary
from ..models import LabelConfiguration, ModeWord, Occupation, OccupationDistribution
from .channels import apply_transversal, postselect_symmetric, trace_out_label, trace_out_last_qudits
from .measures import measurement_distribution
from .states import labels_from_dist_matrix, superposition_from_labels, symmetrize_occupation, system_label_state, werner_mixture


def _checked(u: np.ndarray, s: Occupation) -> np.ndarray:
	mat = validate_unitary(u)
	if s.m != mat.shape[0]:
		raise ValidationError(f"input occupation {s} has {s.m} modes, unitary is {mat.shape[0]}x{mat.shape[0]}")
	return mat


def oracle_ideal(u: np.ndarray, s: Occupation, settings: Settings | None = None) -> OccupationDistribution:
	"""
	symmetrize -> U^(x)n -> measure.
	"""
	mat = _checked(u, s)
	psi = symmetrize_occupation(s, settings)
	return measurement_distribution(apply_transversal(psi, mat), model="oracle-ideal")


def oracle_partial(
	u: np.ndarray, s: Occupation, labels: LabelConfiguration, settings: Settings | None = None
) -> OccupationDistribution:
	"""
	Label superposition -> U^(x)n (x) 1_Label -> trace Label -> measure. A distinguishability
	matrix is first factored into per-mode Label vectors (collision-free inputs only).
	"""
	cfg = settings or get_settings()
	mat = _checked(u, s)
	if labels.dist_matrix is not None:
		labels = labels_from_dist_matrix(s, labels.dist_matrix)
	psi = system_label_state(superposition_from_labels(s, labels), cfg)
	rho = trace_out_label(apply_transversal(psi, mat), cfg)
	return measurement_distribution(rho, model="oracle-partial")


def oracle_lossy(u: np.ndarray, s0: Occupation, k: int, settings: Settings | None = None) -> OccupationDistribution:
	"""
	symmetrize n+k -> trace the last k qudits -> U^(x)n -> measure.
	"""
	cfg = settings or get_settings()
	mat = _checked(u, s0)
	rho = trace_out_last_qudits(symmetrize_occupation(s0, cfg), k, cfg)
	return measurement_distribution(apply_transversal(rho, mat), model="oracle-lossy")


def oracle_lossy_partial(
	u: np.ndarray, s0: Occupation, k: int, labels: LabelConfiguration, settings: Settings | None = None
) -> OccupationDistribution:
	cfg = settings or get_settings()
	mat = _checked(u, s0)
	psi = system_label_state(superposition_from_labels(s0, labels), cfg)
	rho = trace_out_label(trace_out_last_qudits(psi, k, cfg), cfg)
	return measurement_distribution(apply_transversal(rho, mat), model="oracle-lossy")


def oracle_postselected(u: np.ndarray, word: ModeWord, settings: Settings | None = None) -> tuple[float, OccupationDistribution]:
	"""
	Completely distinguishable coincident input, postselected onto the symmetric subspace,
	then U^(x)n and measurement. Returns (success probability, conditional distribution).
	"""
	mat = validate_unitary(u)
	rho = werner_mixture(word, 0.0, mat.shape[0], settings)
	prob, selected = postselect_symmetric(rho, settings)
	return prob, measurement_distribution(apply_transversal(selected, mat), model="oracle-postselected")
