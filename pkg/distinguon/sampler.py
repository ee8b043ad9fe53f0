"""
Sampling from computed distributions, direct per-boson routing for distinguishable
bosons, and goodness-of-fit checks.

Shots are drawn in fixed-size chunks; chunk c uses the Philox stream (seed, counter=c),
so shot i always comes from the same stream position regardless of how chunks are
scheduled.
"""

from __future__ import annotations

import logging

import numpy as np
from scipy import stats

from .config import Settings, get_settings
from .distributions import ModelInputs, get_model
from .errors import ValidationError
from .fock import enumerate_occupations, index_occupations
from .interferometer import rng_from_seed, validate_unitary
from .models import Occupation, OccupationDistribution, SampleBatch


log = logging.getLogger(__name__)

SHOTS_PER_CHUNK = 4096
SAMPLING_NORM_ATOL = 1e-6


def _chunks(count: int) -> list[tuple[int, int]]:
	return [(c, min(SHOTS_PER_CHUNK, count - start)) for c, start in enumerate(range(0, count, SHOTS_PER_CHUNK))]


def _check_count(count: int) -> int:
	count = int(count)
	if count < 1:
		raise ValidationError(f"shot count must be positive, got {count}")
	return count


def _cdf(probs: np.ndarray) -> np.ndarray:
	cdf = np.cumsum(probs, dtype=float)
	cdf /= cdf[-1]
	cdf[-1] = 1.0
	return cdf


def sample_exact(dist: OccupationDistribution, count: int, seed: int) -> SampleBatch:
	"""
	i.i.d. draws by inverse CDF over the canonical order.
	"""
	count = _check_count(count)
	total = dist.total()
	if abs(total - 1.0) > SAMPLING_NORM_ATOL:
		raise ValidationError(f"cannot sample: distribution sums to {total!r}")
	cdf = _cdf(dist.probabilities)
	last = len(cdf) - 1

	picked: list[np.ndarray] = []
	for chunk, size in _chunks(count):
		draws = rng_from_seed(seed, chunk).random(size)
		picked.append(np.minimum(np.searchsorted(cdf, draws, side="right"), last))
	indices = np.concatenate(picked)
	samples = tuple(dist.occupations[i] for i in indices)
	return SampleBatch(m=dist.m, n=dist.n, samples=samples, seed=int(seed), model=dist.model)


def sample_distinguishable_direct(u: np.ndarray, s: Occupation, count: int, seed: int) -> SampleBatch:
	"""
	Route every boson on its own: input mode i -> output mode j with probability |U[j, i]|^2.
	No permanents involved.
	"""
	count = _check_count(count)
	mat = validate_unitary(u)
	m = mat.shape[0]
	if s.m != m:
		raise ValidationError(f"input occupation {s} has {s.m} modes, unitary is {m}x{m}")
	cdfs = [_cdf(np.abs(mat[:, i]) ** 2) for i in s.canonical_word().indices()]

	rows: list[np.ndarray] = []
	for chunk, size in _chunks(count):
		rng = rng_from_seed(seed, chunk)
		counts = np.zeros((size, m), dtype=int)
		shots = np.arange(size)
		for cdf in cdfs:
			modes = np.minimum(np.searchsorted(cdf, rng.random(size), side="right"), m - 1)
			np.add.at(counts, (shots, modes), 1)
		rows.append(counts)
	table = np.concatenate(rows) if rows else np.zeros((0, m), dtype=int)
	samples = tuple(Occupation(tuple(int(c) for c in row)) for row in table)
	return SampleBatch(m=m, n=s.n, samples=samples, seed=int(seed), model="distinguishable-direct")


def _counts_on(batch: SampleBatch, occupations: tuple[Occupation, ...] | list[Occupation]) -> np.ndarray:
	index = index_occupations(occupations)
	counts = np.zeros(len(occupations), dtype=float)
	for occ in batch.samples:
		idx = index.get(occ)
		if idx is None:
			raise ValidationError(f"sample {occ} is outside the m={batch.m}, n={batch.n} basis")
		counts[idx] += 1
	return counts


def empirical_distribution(batch: SampleBatch, settings: Settings | None = None) -> OccupationDistribution:
	if not len(batch):
		raise ValidationError("empirical distribution of an empty batch")
	basis = enumerate_occupations(batch.m, batch.n, settings or get_settings())
	counts = _counts_on(batch, basis)
	return OccupationDistribution.from_raw(batch.m, batch.n, basis, counts / len(batch), model="empirical")


def chi_square_test(batch: SampleBatch, dist: OccupationDistribution) -> tuple[float, float]:
	"""
	Pearson chi-square of the batch against dist over the bins with positive mass.
	Any sample landing on a zero-probability occupation gives (inf, 0).
	"""
	if not len(batch):
		raise ValidationError("chi-square test of an empty batch")
	if (batch.m, batch.n) != (dist.m, dist.n):
		raise ValidationError(f"batch is m={batch.m}, n={batch.n}; distribution is m={dist.m}, n={dist.n}")
	observed = _counts_on(batch, dist.occupations)
	support = dist.probabilities > 0.0
	if observed[~support].sum() > 0:
		log.info("chi-square: %d samples on zero-probability occupations", int(observed[~support].sum()))
		return float("inf"), 0.0
	if int(support.sum()) < 2:
		return 0.0, 1.0
	p = dist.probabilities[support]
	expected = len(batch) * p / p.sum()
	result = stats.chisquare(observed[support], expected)
	return float(result.statistic), float(result.pvalue)


def sample_model(
	model_id: str, inputs: ModelInputs, count: int, seed: int, settings: Settings | None = None, direct: bool = False
) -> tuple[SampleBatch, OccupationDistribution | None]:
	"""
	Compute the model's distribution and sample it. With direct=True (distinguishable
	only) shots are routed per boson and no distribution is built.
	"""
	if direct:
		if model_id != "distinguishable":
			raise ValidationError(f"direct routing only applies to the distinguishable model, not {model_id!r}")
		return sample_distinguishable_direct(inputs.unitary, inputs.occupation, count, seed), None
	dist = get_model(model_id).compute(inputs, settings)
	return sample_exact(dist, count, seed), dist
