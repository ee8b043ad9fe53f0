"""
Maps on dense states: transversal U, partial traces, partial transposes, and
postselection onto symmetric-group isotypic subspaces.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterable

import numpy as np

from ..config import POSTSELECTION_MIN, Settings, get_settings
from ..errors import DegeneratePostselectionError, ValidationError
from ..models import DenseState, DensityMatrix, Quantum
from ..schur import Partition, cycle_type, partitions_of, symmetric_group_character, symmetric_group_dim


log = logging.getLogger(__name__)


def as_density(q: Quantum, settings: Settings | None = None) -> DensityMatrix:
	if isinstance(q, DensityMatrix):
		return q
	(settings or get_settings()).check_density_dim(q.local_dim**q.n)
	return DensityMatrix.from_state(q)


def _apply_local(tensor: np.ndarray, op: np.ndarray, axes: Iterable[int]) -> np.ndarray:
	for axis in axes:
		tensor = np.moveaxis(np.tensordot(op, tensor, axes=([1], [axis])), 0, axis)
	return tensor


def apply_transversal(q: Quantum, u: np.ndarray) -> Quantum:
	"""
	U on every System factor (identity on Labels): psi -> U^(x)n psi, rho -> U^(x)n rho U^dag(x)n.
	"""
	mat = np.asarray(u, dtype=complex)
	if mat.shape != (q.system_dim, q.system_dim):
		raise ValidationError(f"unitary is {mat.shape}, System local dimension is {q.system_dim}")
	op = np.kron(mat, np.eye(q.label_dim)) if q.label_dim > 1 else mat
	n = q.n
	if isinstance(q, DenseState):
		out = _apply_local(q.tensor(), op, range(n))
		return DenseState(q.system_dim, n, out.reshape(-1), q.label_dim)
	out = _apply_local(q.tensor(), op, range(n))
	out = _apply_local(out, op.conj(), range(n, 2 * n))
	dim = q.dim
	return DensityMatrix(q.system_dim, n, out.reshape(dim, dim), q.label_dim)


def trace_out_qudits(q: Quantum, positions: Iterable[int], settings: Settings | None = None) -> DensityMatrix:
	"""
	Partial trace over the qudits at the given positions (0-based).
	"""
	cfg = settings or get_settings()
	n = q.n
	traced = sorted(set(int(p) for p in positions))
	if any(not 0 <= p < n for p in traced):
		raise ValidationError(f"cannot trace qudits {traced} out of {n}")
	keep = [p for p in range(n) if p not in traced]
	dim_keep = q.local_dim ** len(keep)
	cfg.check_density_dim(dim_keep)

	if isinstance(q, DenseState):
		t = np.transpose(q.tensor(), keep + traced).reshape(dim_keep, -1)
		rho = t @ t.conj().T
	else:
		t = q.tensor()
		current = n
		for p in reversed(traced):
			t = np.trace(t, axis1=p, axis2=current + p)
			current -= 1
		rho = t.reshape(dim_keep, dim_keep)
	return DensityMatrix(q.system_dim, len(keep), rho, q.label_dim)


def trace_out_last_qudits(q: Quantum, k: int, settings: Settings | None = None) -> DensityMatrix:
	k = int(k)
	if k < 0 or k > q.n:
		raise ValidationError(f"cannot trace out {k} of {q.n} qudits")
	return trace_out_qudits(q, range(q.n - k, q.n), settings)


def trace_out_label(q: Quantum, settings: Settings | None = None) -> DensityMatrix:
	"""
	Partial trace over the Label half of every pair qudit.
	"""
	cfg = settings or get_settings()
	m, d, n = q.system_dim, q.label_dim, q.n
	if d == 1:
		return as_density(q, cfg)
	cfg.check_density_dim(m**n)
	sys_axes = [2 * k for k in range(n)]
	lab_axes = [2 * k + 1 for k in range(n)]
	if isinstance(q, DenseState):
		t = q.amplitudes.reshape((m, d) * n).transpose(sys_axes + lab_axes).reshape(m**n, d**n)
		rho = t @ t.conj().T
	else:
		t = q.matrix.reshape((m, d) * (2 * n))
		col_sys = [2 * n + a for a in sys_axes]
		col_lab = [2 * n + a for a in lab_axes]
		t = t.transpose(sys_axes + lab_axes + col_sys + col_lab).reshape(m**n, d**n, m**n, d**n)
		rho = np.einsum("ajbj->ab", t)
	return DensityMatrix(m, n, rho)


def partial_transpose(rho: DensityMatrix, qudits: Iterable[int]) -> np.ndarray:
	"""
	Transpose on the chosen tensor factors; the result need not be positive.
	"""
	n = rho.n
	t = rho.tensor()
	axes = list(range(2 * n))
	for k in sorted(set(int(x) for x in qudits)):
		if not 0 <= k < n:
			raise ValidationError(f"qudit {k} out of range 0..{n - 1}")
		axes[k], axes[n + k] = axes[n + k], axes[k]
	return t.transpose(axes).reshape(rho.dim, rho.dim)


def partial_transpose_first(rho: DensityMatrix) -> np.ndarray:
	return partial_transpose(rho, (0,))


def _permuted_rows(local_dim: int, n: int, perm: tuple[int, ...]) -> np.ndarray:
	return np.arange(local_dim**n).reshape((local_dim,) * n).transpose(perm).reshape(-1)


def _isotypic_terms(lam: Partition, local_dim: int, n: int) -> list[tuple[float, np.ndarray]]:
	"""
	P_lambda = (d_lambda / n!) sum_sigma chi_lambda(sigma) P_sigma as (coefficient, row map) pairs.
	"""
	scale = symmetric_group_dim(lam) / math.factorial(n)
	terms = []
	for perm in itertools.permutations(range(n)):
		chi = symmetric_group_character(lam, cycle_type(perm))
		if chi:
			terms.append((scale * chi, _permuted_rows(local_dim, n, perm)))
	return terms


def _project_rows(matrix: np.ndarray, terms: list[tuple[float, np.ndarray]]) -> np.ndarray:
	out = np.zeros_like(matrix)
	for coeff, rows in terms:
		out += coeff * matrix[rows, :]
	return out


def postselect_irrep(q: Quantum, lam: Partition, settings: Settings | None = None) -> tuple[float, DensityMatrix]:
	"""
	Condition on the lambda-isotypic subspace: returns (Tr[P rho P], P rho P / Tr[P rho P]).
	"""
	rho = as_density(q, settings)
	if lam.weight != rho.n:
		raise ValidationError(f"partition {lam} does not partition n={rho.n}")
	terms = _isotypic_terms(lam, rho.local_dim, rho.n)
	left = _project_rows(rho.matrix, terms)
	projected = _project_rows(left.conj().T, terms).conj().T
	prob = float(np.trace(projected).real)
	if prob < POSTSELECTION_MIN:
		raise DegeneratePostselectionError(f"state has weight {prob:.3e} on the {lam} isotypic subspace")
	log.debug("postselected onto %s with probability %.6g", lam, prob)
	return prob, DensityMatrix(rho.system_dim, rho.n, projected / prob, rho.label_dim)


def postselect_symmetric(q: Quantum, settings: Settings | None = None) -> tuple[float, DensityMatrix]:
	return postselect_irrep(q, Partition((q.n,)) if q.n else Partition(()), settings)


def isotypic_weights(q: Quantum, settings: Settings | None = None) -> dict[Partition, float]:
	"""
	Tr[P_lambda rho] for every lambda |- n with at most local_dim rows; the weights sum to 1.
	"""
	rho = as_density(q, settings)
	diag = np.arange(rho.dim)
	weights: dict[Partition, float] = {}
	for lam in partitions_of(rho.n, rho.local_dim):
		total = 0.0
		for coeff, rows in _isotypic_terms(lam, rho.local_dim, rho.n):
			total += coeff * float(rho.matrix[rows, diag].sum().real)
		weights[lam] = total
	return weights
