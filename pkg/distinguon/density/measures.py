from __future__ import annotations

import logging

import numpy as np

from ..config import HERMITIAN_ATOL, NEGATIVE_CLAMP, SCHMIDT_TOL
from ..errors import NumericalError, ValidationError
from ..fock import enumerate_occupations, index_occupations
from ..models import DenseState, DensityMatrix, Occupation, OccupationDistribution, Quantum


log = logging.getLogger(__name__)


def measurement_distribution(q: Quantum, model: str = "oracle") -> OccupationDistribution:
	"""
	Computational-basis measurement of System qudits, binned by type:
	Pr[S'] = sum over words s' of type S' of <s'|rho|s'>.
	"""
	if q.label_dim != 1:
		raise ValidationError("measure System qudits only; trace out the Label register first")
	m, n = q.system_dim, q.n
	if isinstance(q, DenseState):
		weights = np.abs(q.amplitudes) ** 2
	else:
		weights = np.real(np.diag(q.matrix))
	basis = enumerate_occupations(m, n)
	index = index_occupations(basis)
	probs = np.zeros(len(basis))
	if n == 0:
		probs[0] = float(weights.sum())
	else:
		digits = np.stack(np.unravel_index(np.arange(m**n), (m,) * n), axis=1)
		counts = np.stack([(digits == j).sum(axis=1) for j in range(m)], axis=1)
		slots = np.array([index[Occupation(tuple(int(c) for c in row))] for row in counts])
		np.add.at(probs, slots, weights)
	return OccupationDistribution.from_raw(m, n, basis, probs, model=model)


def trace_norm(a: np.ndarray) -> float:
	"""
	Sum of singular values. Hermitian input: sum |eigenvalues|; otherwise sqrt of the
	eigenvalues of A^dag A, clamped at -1e-12.
	"""
	mat = np.asarray(a, dtype=complex)
	if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
		raise ValidationError(f"trace norm needs a square matrix, got shape {mat.shape}")
	if not mat.size:
		return 0.0
	if float(np.max(np.abs(mat - mat.conj().T))) <= HERMITIAN_ATOL:
		return float(np.abs(np.linalg.eigvalsh((mat + mat.conj().T) / 2.0)).sum())
	evals = np.linalg.eigvalsh(mat.conj().T @ mat)
	scale = max(1.0, float(evals.max()))
	if float(evals.min()) < -NEGATIVE_CLAMP * scale:
		raise NumericalError(f"A^dag A has eigenvalue {evals.min():.3e}")
	return float(np.sqrt(np.clip(evals, 0.0, None)).sum())


def negativity(a: np.ndarray) -> float:
	"""
	Sum of |negative eigenvalues| of a Hermitian matrix (PPT witness).
	"""
	mat = np.asarray(a, dtype=complex)
	evals = np.linalg.eigvalsh((mat + mat.conj().T) / 2.0)
	return float(-evals[evals < 0].sum())


def min_eigenvalue(a: np.ndarray) -> float:
	mat = np.asarray(a, dtype=complex)
	return float(np.linalg.eigvalsh((mat + mat.conj().T) / 2.0).min())


def schmidt_coefficients(state: DenseState) -> np.ndarray:
	"""
	Singular values across the System | Label cut of a pair-qudit state.
	"""
	m, d, n = state.system_dim, state.label_dim, state.n
	if n == 0:
		return np.array([state.norm()])
	sys_axes = [2 * k for k in range(n)]
	lab_axes = [2 * k + 1 for k in range(n)]
	t = state.amplitudes.reshape((m, d) * n).transpose(sys_axes + lab_axes).reshape(m**n, d**n)
	return np.linalg.svd(t, compute_uv=False)


def schmidt_rank(state: DenseState, tol: float = SCHMIDT_TOL) -> int:
	return int((schmidt_coefficients(state) > tol).sum())


def purity(rho: DensityMatrix) -> float:
	mat = rho.matrix
	return float(np.real(np.trace(mat @ mat)))
