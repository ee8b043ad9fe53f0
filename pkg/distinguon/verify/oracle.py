from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..config import Settings
from ..density import (
	isotypic_weights,
	min_eigenvalue,
	oracle_ideal,
	oracle_lossy,
	oracle_lossy_partial,
	oracle_partial,
	oracle_postselected,
	partial_transpose_first,
	schmidt_rank,
	superposition_from_labels,
	symmetrize_occupation,
	system_label_state,
	trace_norm,
	trace_out_qudits,
	werner_mixture,
)
from ..distributions import (
	build_dist_matrix,
	distinguishable_distribution,
	ideal_distribution,
	lossy_distribution,
	lossy_partial_distribution,
	max_abs_difference,
	partial_distribution,
)
from ..fock import enumerate_occupations
from ..interferometer import haar_random_unitary, rng_from_seed
from ..models import LabelConfiguration, ModeWord, Occupation
from ..schur import symmetric_group_dim
from .base import CheckResult, close_check


SEED = 7
ORACLE_ATOL = 1e-9
TRACE_NORM_ATOL = 1e-8
EPSILONS = (0.0, 0.1, 0.5, 1.0)


def random_labels(s: Occupation, dim: int, seed: int) -> LabelConfiguration:
	"""
	One Haar-ish random unit Label vector of the given dimension per occupied mode.
	"""
	rng = rng_from_seed(seed)
	vectors = {}
	for mode, count in enumerate(s.counts):
		if count:
			vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
			vectors[mode] = vec / np.linalg.norm(vec)
	return LabelConfiguration.from_labels(vectors)


def orthonormal_labels(s: Occupation) -> LabelConfiguration:
	modes = [mode for mode, count in enumerate(s.counts) if count]
	eye = np.eye(max(len(modes), 1), dtype=complex)
	return LabelConfiguration.from_labels({mode: eye[k] for k, mode in enumerate(modes)})


@dataclass
class OracleSuite:
	"""
	Distribution models against the dense first-quantized oracle, plus the postselection,
	trace-norm and Schmidt-rank claims.
	"""

	suite_id: str = "oracle"

	def run(self, settings: Settings) -> list[CheckResult]:
		results: list[CheckResult] = []
		results.extend(self._distributions(settings))
		results.extend(self._postselection(settings))
		results.extend(self._trace_norm(settings))
		results.extend(self._schmidt(settings))
		return results

	def _distributions(self, settings: Settings) -> list[CheckResult]:
		results = []
		for m in range(1, 4):
			u = haar_random_unitary(m, SEED + m)
			for total in range(1, 4):
				for s0 in enumerate_occupations(m, total):
					tag = f"m={m} S={s0}"
					err = max_abs_difference(ideal_distribution(u, s0, settings), oracle_ideal(u, s0, settings))
					results.append(close_check(f"oracle ideal {tag}", err, ORACLE_ATOL))

					labels = random_labels(s0, total, SEED + 31 * m + total)
					smat = build_dist_matrix(s0, labels)
					err = max_abs_difference(partial_distribution(u, s0, smat, settings), oracle_partial(u, s0, labels, settings))
					results.append(close_check(f"oracle partial {tag}", err, ORACLE_ATOL))

					if s0.is_collision_free():
						ortho = orthonormal_labels(s0)
						err = max_abs_difference(distinguishable_distribution(u, s0, settings), oracle_partial(u, s0, ortho, settings))
						results.append(close_check(f"oracle distinguishable {tag}", err, ORACLE_ATOL))

					for k in range(1, total + 1):
						err = max_abs_difference(lossy_distribution(u, s0, k, settings), oracle_lossy(u, s0, k, settings))
						results.append(close_check(f"oracle lossy {tag} k={k}", err, ORACLE_ATOL))
						err = max_abs_difference(
							lossy_partial_distribution(u, s0, k, labels, settings),
							oracle_lossy_partial(u, s0, k, labels, settings),
						)
						results.append(close_check(f"oracle lossy-partial {tag} k={k}", err, ORACLE_ATOL))

		psi = symmetrize_occupation(Occupation((1, 1, 1)), settings)
		err = float(np.max(np.abs(trace_out_qudits(psi, [0], settings).matrix - trace_out_qudits(psi, [2], settings).matrix)))
		results.append(close_check("trace-out choice is moot (symmetric input)", err, 1e-12))
		return results

	def _postselection(self, settings: Settings) -> list[CheckResult]:
		results = []
		for n in (2, 3):
			for m in range(n, 4):
				u = haar_random_unitary(m, SEED + 10 * m + n)
				word = ModeWord(tuple(range(1, n + 1)))
				prob, conditional = oracle_postselected(u, word, settings)
				s = Occupation(tuple(1 if i < n else 0 for i in range(m)))
				err = max_abs_difference(conditional, ideal_distribution(u, s, settings))
				results.append(close_check(f"postselected = ideal m={m} n={n}", err, ORACLE_ATOL))
				results.append(close_check(f"postselection success = 1/n! m={m} n={n}", abs(prob - 1.0 / math.factorial(n)), 1e-12))

				weights = isotypic_weights(werner_mixture(word, 0.0, m, settings), settings)
				err = max(abs(w - symmetric_group_dim(lam) ** 2 / math.factorial(n)) for lam, w in weights.items())
				results.append(close_check(f"isotypic weights d^2/n! m={m} n={n}", err, 1e-12))
		return results

	def _trace_norm(self, settings: Settings) -> list[CheckResult]:
		results = []
		for n in (2, 3):
			word = ModeWord(tuple(range(1, n + 1)))
			for eps in EPSILONS:
				rho = werner_mixture(word, eps, n, settings)
				pt = partial_transpose_first(rho)
				expected = 1.0 + eps * (n - 1)
				results.append(close_check(f"trace norm n={n} eps={eps}", abs(trace_norm(pt) - expected), TRACE_NORM_ATOL))
				if eps > 0:
					low = min_eigenvalue(pt)
					results.append(CheckResult(f"partial transpose negative n={n} eps={eps}", low < 0, f"min eigenvalue {low:.3e}"))
		return results

	def _schmidt(self, settings: Settings) -> list[CheckResult]:
		results = []
		for n in (1, 2, 3):
			s = Occupation((1,) * n)
			psi = system_label_state(superposition_from_labels(s, orthonormal_labels(s)), settings)
			rank = schmidt_rank(psi)
			results.append(CheckResult(f"Schmidt rank n={n}", rank == math.factorial(n), f"rank {rank}, expected {math.factorial(n)}"))
		return results
