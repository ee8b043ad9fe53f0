"""
First-quantized state preparation on (C^m)^n and on (C^m (x) C^d)^n pair qudits.

Pair qudit convention: flat local index = system * d + label (0-based), the same map
flatten_system_label applies to System-Label occupations.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence

import numpy as np

from ..config import Settings, get_settings
from ..errors import ValidationError
from ..fock import enumerate_occupations, flatten_system_label
from ..models import DenseState, DensityMatrix, LabelConfiguration, ModeWord, Occupation, SystemLabelOccupation


_NORM_ATOL = 1e-10
_EIG_CUTOFF = 1e-13


def _symmetrized(indices: Sequence[int], local_dim: int, settings: Settings) -> np.ndarray:
	"""
	(1/sqrt(n! prod S_i!)) sum_sigma sigma|s> as a flat amplitude vector.
	"""
	n = len(indices)
	settings.check_dense_amplitudes(local_dim**n)
	amps = np.zeros(local_dim**n, dtype=complex)
	if n == 0:
		amps[0] = 1.0
		return amps
	shape = (local_dim,) * n
	for perm in itertools.permutations(indices):
		amps[np.ravel_multi_index(perm, shape)] += 1.0
	counts = np.bincount(np.asarray(indices), minlength=local_dim)
	norm = math.sqrt(math.factorial(n) * math.prod(math.factorial(int(c)) for c in counts))
	return amps / norm


def symmetrize_word(word: ModeWord, m: int, settings: Settings | None = None) -> DenseState:
	m = int(m)
	if any(letter > m for letter in word.letters):
		raise ValidationError(f"word {word.letters} has letters outside modes 1..{m}")
	amps = _symmetrized(word.indices(), m, settings or get_settings())
	return DenseState(system_dim=m, n=word.n, amplitudes=amps)


def symmetrize_occupation(s: Occupation, settings: Settings | None = None) -> DenseState:
	return symmetrize_word(s.canonical_word(), s.m, settings)


def system_label_state(
	terms: Sequence[tuple[complex, SystemLabelOccupation]], settings: Settings | None = None
) -> DenseState:
	"""
	sum_T amplitude_T * sym(flatten(T)) on pair qudits. All T must share m, d and n; d <= n.
	"""
	cfg = settings or get_settings()
	if not terms:
		raise ValidationError("System-Label superposition needs at least one term")
	first = terms[0][1]
	m, d, n = first.m, first.label_modes, first.n
	if d > max(n, 1):
		raise ValidationError(f"{d} Label modes for {n} bosons; at most one Label mode per boson")
	for _, t in terms:
		if (t.m, t.label_modes, t.n) != (m, d, n):
			raise ValidationError(f"inconsistent System-Label terms: m={t.m}, d={t.label_modes}, n={t.n} vs m={m}, d={d}, n={n}")
	cfg.check_dense_amplitudes((m * d) ** n)

	amps = np.zeros((m * d) ** n, dtype=complex)
	for amplitude, t in terms:
		word = flatten_system_label(t).canonical_word()
		amps += complex(amplitude) * _symmetrized(word.indices(), m * d, cfg)
	norm = float(np.linalg.norm(amps))
	if abs(norm - 1.0) > _NORM_ATOL:
		raise ValidationError(f"System-Label amplitudes are not normalized (state norm {norm!r})")
	return DenseState(system_dim=m, n=n, amplitudes=amps, label_dim=d)


def superposition_from_labels(s: Occupation, labels: LabelConfiguration) -> list[tuple[complex, SystemLabelOccupation]]:
	"""
	Expand prod_i (sum_j Phi_i[j] a^dag_{i,j})^{S_i} / sqrt(S_i!) |0> into System-Label
	occupations T with amplitude sqrt(prod S_i! / prod T_ij!) * prod Phi_i[j]^{T_ij}.
	"""
	if labels.dist_matrix is not None:
		raise ValidationError("System-Label expansion needs per-mode Label vectors, not a distinguishability matrix")
	d = max(labels.label_dim, 1)
	per_mode: list[list[tuple[complex, tuple[int, ...]]]] = []
	for mode, count in enumerate(s.counts):
		if count == 0:
			per_mode.append([(1.0 + 0j, (0,) * d)])
			continue
		phi = labels.vector(mode)
		options = []
		for split in enumerate_occupations(d, count):
			coeff = math.sqrt(math.factorial(count) / split.factorial_product())
			amp = coeff * complex(np.prod([phi[j] ** c for j, c in enumerate(split.counts)]))
			if amp != 0:
				options.append((amp, split.counts))
		per_mode.append(options)

	terms: list[tuple[complex, SystemLabelOccupation]] = []
	for combo in itertools.product(*per_mode):
		amp = complex(np.prod([a for a, _ in combo]))
		terms.append((amp, SystemLabelOccupation(tuple(row for _, row in combo))))
	return terms


def labels_from_dist_matrix(s: Occupation, dist_matrix: np.ndarray) -> LabelConfiguration:
	"""
	Per-mode Label vectors realizing a given distinguishability matrix (collision-free S):
	Phi_k is column k of sqrt(Lambda) W^dag from Sm = W Lambda W^dag.
	"""
	if not s.is_collision_free():
		raise ValidationError(f"a general distinguishability matrix has per-mode Label vectors only for collision-free inputs, got {s}")
	smat = np.asarray(dist_matrix, dtype=complex)
	if smat.shape != (s.n, s.n):
		raise ValidationError(f"distinguishability matrix must be {s.n}x{s.n}, got {smat.shape}")
	evals, evecs = np.linalg.eigh((smat + smat.conj().T) / 2.0)
	keep = evals > _EIG_CUTOFF
	factor = np.sqrt(evals[keep])[:, None] * evecs[:, keep].conj().T
	modes = [letter - 1 for letter in s.canonical_word().letters]
	vectors = {}
	for k, mode in enumerate(modes):
		vec = factor[:, k]
		vectors[mode] = vec / np.linalg.norm(vec)
	return LabelConfiguration.from_labels(vectors)


def werner_mixture(word: ModeWord, eps: float, m: int | None = None, settings: Settings | None = None) -> DensityMatrix:
	"""
	eps * |sym><sym| + (1 - eps) * (1/n!) sum_sigma sigma|s><s|sigma^dag for a collision-free word.
	"""
	eps = float(eps)
	if not 0.0 <= eps <= 1.0:
		raise ValidationError(f"mixing weight must lie in [0, 1], got {eps}")
	if word.n < 1 or not word.is_collision_free():
		raise ValidationError(f"word {word.letters} must be non-empty with distinct modes")
	cfg = settings or get_settings()
	m = int(m if m is not None else max(word.letters, default=1))
	n = word.n
	cfg.check_density_dim(m**n)

	sym = symmetrize_word(word, m, cfg)
	shape = (m,) * n
	mixed = np.zeros(m**n, dtype=float)
	for perm in itertools.permutations(word.indices()):
		mixed[np.ravel_multi_index(perm, shape)] += 1.0
	mixed /= math.factorial(n)
	rho = eps * np.outer(sym.amplitudes, sym.amplitudes.conj()) + (1.0 - eps) * np.diag(mixed).astype(complex)
	return DensityMatrix(system_dim=m, n=n, matrix=rho)
