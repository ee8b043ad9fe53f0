from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..config import Settings
from ..distributions import (
	distinguishable_distribution,
	ideal_distribution,
	lossy_distribution,
	max_abs_difference,
	partial_distribution,
	total_variation,
)
from ..interferometer import balanced_beamsplitter, haar_random_unitary, recompose, reck_decompose, rng_from_seed
from ..models import Occupation
from ..permanent import permanent, permanent_bruteforce
from .base import CheckResult, close_check


SEED = 99
LIMIT_ATOL = 1e-10
LIMIT_CASES = 50


def _hom(settings: Settings) -> list[CheckResult]:
	bs = balanced_beamsplitter()
	s = Occupation((1, 1))
	results = []
	ideal = ideal_distribution(bs, s, settings)
	err = float(np.max(np.abs(ideal.probabilities - [0.5, 0.0, 0.5])))
	results.append(close_check("HOM ideal (1/2, 0, 1/2)", err, LIMIT_ATOL))
	dist = distinguishable_distribution(bs, s, settings)
	err = float(np.max(np.abs(dist.probabilities - [0.25, 0.5, 0.25])))
	results.append(close_check("HOM distinguishable (1/4, 1/2, 1/4)", err, LIMIT_ATOL))
	for x in (0.0, 0.25, 0.5, 0.9, 1.0):
		overlap = np.sqrt(x)
		smat = np.array([[1.0, overlap], [overlap, 1.0]], dtype=complex)
		p11 = partial_distribution(bs, s, smat, settings)[(1, 1)]
		results.append(close_check(f"HOM partial overlap x={x}", abs(p11 - (1.0 - x) / 2.0), LIMIT_ATOL))
	results.append(close_check("HOM TVD ideal vs distinguishable = 1/2", abs(total_variation(ideal, dist) - 0.5), LIMIT_ATOL))
	lossy = lossy_distribution(np.eye(2), s, 1, settings)
	results.append(close_check("loss U=I, S0=(1,1), k=1 uniform", float(np.max(np.abs(lossy.probabilities - 0.5))), LIMIT_ATOL))
	return results


def _random_collision_free(rng: np.random.Generator) -> tuple[int, Occupation]:
	m = int(rng.integers(1, 5))
	n = int(rng.integers(1, m + 1))
	modes = rng.choice(m, size=n, replace=False)
	counts = [0] * m
	for mode in modes:
		counts[int(mode)] = 1
	return m, Occupation(tuple(counts))


@dataclass
class LimitsSuite:
	"""
	Hand-derived closed forms and the indistinguishable / distinguishable limits of the
	partial model; permanent kernel against brute force; decomposition round trip.
	"""

	suite_id: str = "limits"

	def run(self, settings: Settings) -> list[CheckResult]:
		results = _hom(settings)

		rng = rng_from_seed(SEED)
		ideal_err = dist_err = 0.0
		for case in range(LIMIT_CASES):
			m, s = _random_collision_free(rng)
			u = haar_random_unitary(m, SEED + case)
			ones = np.ones((s.n, s.n), dtype=complex)
			ideal_err = max(ideal_err, max_abs_difference(partial_distribution(u, s, ones, settings), ideal_distribution(u, s, settings)))
			eye = np.eye(s.n, dtype=complex)
			dist_err = max(dist_err, max_abs_difference(partial_distribution(u, s, eye, settings), distinguishable_distribution(u, s, settings)))
		results.append(close_check(f"partial(all-ones) = ideal, {LIMIT_CASES} cases", ideal_err, LIMIT_ATOL))
		results.append(close_check(f"partial(identity) = distinguishable, {LIMIT_CASES} cases", dist_err, LIMIT_ATOL))

		for n in range(1, 8):
			a = rng.uniform(0, 1, (n, n)) * np.exp(2j * np.pi * rng.uniform(0, 1, (n, n)))
			ref = permanent_bruteforce(a)
			rel = abs(permanent(a, settings) - ref) / max(abs(ref), 1e-300)
			results.append(close_check(f"Ryser vs brute force n={n}", rel, 1e-12))

		for m in range(1, 9):
			u = haar_random_unitary(m, SEED + 1000 + m)
			err = float(np.max(np.abs(recompose(reck_decompose(u)) - u)))
			results.append(close_check(f"decompose round trip m={m}", err, 1e-10))
		return results
