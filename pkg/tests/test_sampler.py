import numpy as np
import pytest

from distinguon.distributions import ModelInputs, distinguishable_distribution, ideal_distribution, total_variation
from distinguon.errors import ValidationError
from distinguon.models import Occupation, OccupationDistribution, SampleBatch
from distinguon.sampler import (
	SHOTS_PER_CHUNK,
	chi_square_test,
	empirical_distribution,
	sample_distinguishable_direct,
	sample_exact,
	sample_model,
)


SHOTS = 100_000
TVD_MAX = 0.02
SIGNIFICANCE = 1e-3


def test_sampling_is_seed_deterministic(beamsplitter):
	dist = ideal_distribution(beamsplitter, Occupation((1, 1)))
	a = sample_exact(dist, 500, 3)
	assert a.samples == sample_exact(dist, 500, 3).samples
	assert a.samples != sample_exact(dist, 500, 4).samples


def test_prefix_is_stable_across_counts(haar):
	dist = ideal_distribution(haar(3), Occupation((1, 1, 0)))
	short = sample_exact(dist, SHOTS_PER_CHUNK + 10, 8)
	long = sample_exact(dist, 3 * SHOTS_PER_CHUNK, 8)
	assert long.samples[: len(short)] == short.samples


def test_never_samples_zero_probability(beamsplitter):
	dist = ideal_distribution(beamsplitter, Occupation((1, 1)))
	batch = sample_exact(dist, 5000, 1)
	assert Occupation((1, 1)) not in set(batch.samples)


def test_point_mass():
	dist = ideal_distribution(np.eye(3), Occupation((0, 2, 1)))
	batch = sample_exact(dist, 100, 0)
	assert set(batch.samples) == {Occupation((0, 2, 1))}
	assert chi_square_test(batch, dist) == (0.0, 1.0)


def test_count_must_be_positive(beamsplitter):
	dist = ideal_distribution(beamsplitter, Occupation((1, 1)))
	with pytest.raises(ValidationError):
		sample_exact(dist, 0, 1)


def test_chi_square_flags_impossible_samples():
	basis = [Occupation((2, 0)), Occupation((1, 1)), Occupation((0, 2))]
	dist = OccupationDistribution.from_raw(2, 2, basis, [0.5, 0.0, 0.5])
	batch = SampleBatch(m=2, n=2, samples=(Occupation((1, 1)), Occupation((2, 0))), seed=0)
	statistic, pvalue = chi_square_test(batch, dist)
	assert statistic == float("inf")
	assert pvalue == 0.0


def test_empirical_distribution():
	batch = SampleBatch(m=2, n=1, samples=(Occupation((1, 0)),) * 3 + (Occupation((0, 1)),), seed=0)
	emp = empirical_distribution(batch)
	assert emp.as_dict() == {(1, 0): 0.75, (0, 1): 0.25}


def test_direct_routing_identity_is_deterministic():
	batch = sample_distinguishable_direct(np.eye(3), Occupation((2, 0, 1)), 50, 9)
	assert set(batch.samples) == {Occupation((2, 0, 1))}
	assert batch.model == "distinguishable-direct"


def test_sample_model_routing(beamsplitter):
	inputs = ModelInputs(beamsplitter, Occupation((1, 1)))
	batch, dist = sample_model("ideal", inputs, 100, 2)
	assert isinstance(dist, OccupationDistribution)
	assert len(batch) == 100
	batch, dist = sample_model("distinguishable", inputs, 100, 2, direct=True)
	assert dist is None
	with pytest.raises(ValidationError):
		sample_model("ideal", inputs, 100, 2, direct=True)


@pytest.mark.slow
@pytest.mark.parametrize("model", ["ideal", "distinguishable"])
def test_statistical_agreement(haar, model):
	u = haar(4, 21)
	s = Occupation((1, 1, 1, 0))
	batch, dist = sample_model(model, ModelInputs(u, s), SHOTS, 5)
	assert total_variation(empirical_distribution(batch), dist) <= TVD_MAX
	assert chi_square_test(batch, dist)[1] >= SIGNIFICANCE


@pytest.mark.slow
def test_direct_routing_matches_distinguishable(haar):
	u = haar(4, 22)
	s = Occupation((1, 1, 1, 0))
	dist = distinguishable_distribution(u, s)
	batch = sample_distinguishable_direct(u, s, SHOTS, 6)
	assert total_variation(empirical_distribution(batch), dist) <= TVD_MAX
	assert chi_square_test(batch, dist)[1] >= SIGNIFICANCE
