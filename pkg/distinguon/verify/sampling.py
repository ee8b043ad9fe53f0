from __future__ import annotations

from dataclasses import dataclass

from ..config import Settings
from ..distributions import ModelInputs, get_model, total_variation
from ..interferometer import balanced_beamsplitter, haar_random_unitary
from ..models import Occupation
from ..sampler import chi_square_test, empirical_distribution, sample_distinguishable_direct, sample_exact
from .base import CheckResult
from .oracle import random_labels


SHOTS = 100_000
TVD_MAX = 0.02
SIGNIFICANCE = 1e-3
SEED = 11


def _cases() -> list[tuple[str, ModelInputs]]:
	u3 = haar_random_unitary(3, SEED)
	u4 = haar_random_unitary(4, SEED + 1)
	s3 = Occupation((1, 1, 0))
	s4 = Occupation((1, 1, 1, 0))
	return [
		("ideal", ModelInputs(balanced_beamsplitter(), Occupation((1, 1)))),
		("ideal", ModelInputs(u4, s4)),
		("distinguishable", ModelInputs(u4, s4)),
		("partial", ModelInputs(u3, s3, labels=random_labels(s3, 2, SEED + 2))),
		("lossy", ModelInputs(u4, s4, lost=1)),
	]


@dataclass
class SamplingSuite:
	"""
	10^5 seeded shots per model: TVD to the exact table and a chi-square test; per-boson
	routing against exact distinguishable sampling.
	"""

	suite_id: str = "sampling"

	def run(self, settings: Settings) -> list[CheckResult]:
		results = []
		for i, (model_id, inputs) in enumerate(_cases()):
			dist = get_model(model_id).compute(inputs, settings)
			batch = sample_exact(dist, SHOTS, SEED + i)
			tvd = total_variation(empirical_distribution(batch, settings), dist)
			_, pvalue = chi_square_test(batch, dist)
			tag = f"{model_id} m={dist.m} n={dist.n}"
			results.append(CheckResult(f"sampling TVD {tag}", tvd <= TVD_MAX, f"TVD {tvd:.4f} (max {TVD_MAX})"))
			results.append(CheckResult(f"sampling chi-square {tag}", pvalue >= SIGNIFICANCE, f"p = {pvalue:.3g}"))

		u = haar_random_unitary(4, SEED + 1)
		s = Occupation((1, 1, 1, 0))
		dist = get_model("distinguishable").compute(ModelInputs(u, s), settings)
		direct = sample_distinguishable_direct(u, s, SHOTS, SEED + 100)
		exact = sample_exact(dist, SHOTS, SEED + 101)
		tvd = total_variation(empirical_distribution(direct, settings), empirical_distribution(exact, settings))
		results.append(CheckResult("direct routing vs exact distinguishable", tvd <= TVD_MAX, f"TVD {tvd:.4f}"))
		_, pvalue = chi_square_test(direct, dist)
		results.append(CheckResult("direct routing chi-square", pvalue >= SIGNIFICANCE, f"p = {pvalue:.3g}"))
		return results
