from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..config import Settings
from ..distributions import ideal_distribution
from ..fock import enumerate_occupations
from ..interferometer import haar_random_unitary
from ..schur import coincident_dimension_check, schur_weyl_check, symmetric_irrep_matrix, unitary_unitary_check
from .base import CheckResult, close_check


SEED = 2024


def _identity(report) -> CheckResult:
	return CheckResult(name=report.name, passed=report.passed, detail=f"{report.lhs} vs {report.rhs}")


@dataclass
class RepTheorySuite:
	"""
	Dimension identities for all small (m, d, n), then unitarity, homomorphism and
	permanent-probability consistency of the symmetric irrep matrix.
	"""

	suite_id: str = "rep-theory"

	def run(self, settings: Settings) -> list[CheckResult]:
		results: list[CheckResult] = []

		for m in range(1, 6):
			for n in range(1, 7):
				check = _identity(schur_weyl_check(m, n))
				check.name = f"schur-weyl m={m} n={n}"
				results.append(check)

		for m in range(1, 5):
			for d in range(1, 5):
				for n in range(1, 5):
					check = _identity(unitary_unitary_check(m, d, n))
					check.name = f"unitary-unitary m={m} d={d} n={n}"
					results.append(check)

		for n in range(1, 8):
			check = _identity(coincident_dimension_check(n))
			check.name = f"coincident n={n}"
			results.append(check)

		for m in range(1, 4):
			u = haar_random_unitary(m, SEED + m)
			v = haar_random_unitary(m, SEED + 100 + m)
			for n in range(1, 4):
				mu = symmetric_irrep_matrix(u, n, settings)
				mv = symmetric_irrep_matrix(v, n, settings)
				muv = symmetric_irrep_matrix(u @ v, n, settings)
				unit_err = float(np.max(np.abs(mu.conj().T @ mu - np.eye(mu.shape[0]))))
				results.append(close_check(f"irrep unitary m={m} n={n}", unit_err, 1e-9))
				hom_err = float(np.max(np.abs(muv - mu @ mv)))
				results.append(close_check(f"irrep homomorphism m={m} n={n}", hom_err, 1e-9))
				prob_err = 0.0
				for j, s in enumerate(enumerate_occupations(m, n)):
					dist = ideal_distribution(u, s, settings)
					prob_err = max(prob_err, float(np.max(np.abs(np.abs(mu[:, j]) ** 2 - dist.probabilities))))
				results.append(close_check(f"irrep |entries|^2 = ideal m={m} n={n}", prob_err, 1e-10))
		return results
