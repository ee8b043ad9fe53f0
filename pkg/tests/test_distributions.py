import numpy as np
import pytest

from distinguon.config import Settings
from distinguon.distributions import (
	ModelInputs,
	available_models,
	build_dist_matrix,
	distinguishable_distribution,
	get_model,
	ideal_distribution,
	lossy_distribution,
	lossy_partial_distribution,
	max_abs_difference,
	partial_distribution,
	total_variation,
)
from distinguon.errors import SizeError, ValidationError
from distinguon.interferometer import rng_from_seed
from distinguon.models import LabelConfiguration, Occupation


HOM = Occupation((1, 1))


def test_hong_ou_mandel_ideal(beamsplitter):
	dist = ideal_distribution(beamsplitter, HOM)
	assert [o.counts for o in dist.occupations] == [(2, 0), (1, 1), (0, 2)]
	assert np.allclose(dist.probabilities, [0.5, 0.0, 0.5], atol=1e-10)
	assert dist.model == "ideal"


def test_hong_ou_mandel_distinguishable(beamsplitter):
	dist = distinguishable_distribution(beamsplitter, HOM)
	assert np.allclose(dist.probabilities, [0.25, 0.5, 0.25], atol=1e-10)
	assert total_variation(ideal_distribution(beamsplitter, HOM), dist) == pytest.approx(0.5, abs=1e-10)


@pytest.mark.parametrize("x", [0.0, 0.3, 0.5, 0.81, 1.0])
def test_hong_ou_mandel_partial_overlap(beamsplitter, x):
	overlap = np.sqrt(x)
	smat = np.array([[1.0, overlap], [overlap, 1.0]])
	assert partial_distribution(beamsplitter, HOM, smat)[(1, 1)] == pytest.approx((1.0 - x) / 2.0, abs=1e-10)


def test_hong_ou_mandel_from_labels(beamsplitter):
	# <Phi_0|Phi_1> = 0.6, so x = 0.36
	labels = LabelConfiguration.from_labels({0: [1.0, 0.0], 1: [0.6, 0.8]})
	dist = get_model("partial").compute(ModelInputs(beamsplitter, HOM, labels=labels))
	assert dist[(1, 1)] == pytest.approx((1.0 - 0.36) / 2.0, abs=1e-10)


def test_complex_overlap_phase_does_not_matter_for_two_bosons(beamsplitter):
	a = np.array([[1.0, 0.6j], [-0.6j, 1.0]])
	b = np.array([[1.0, 0.6], [0.6, 1.0]])
	assert max_abs_difference(partial_distribution(beamsplitter, HOM, a), partial_distribution(beamsplitter, HOM, b)) < 1e-12


@pytest.mark.parametrize("seed", range(6))
def test_partial_limits_on_collision_free_inputs(haar, seed):
	u = haar(4, seed)
	s = Occupation((1, 0, 1, 1))
	ideal = ideal_distribution(u, s)
	dist = distinguishable_distribution(u, s)
	assert max_abs_difference(partial_distribution(u, s, np.ones((3, 3))), ideal) < 1e-10
	assert max_abs_difference(partial_distribution(u, s, np.eye(3)), dist) < 1e-10


def test_identical_labels_with_collisions_match_ideal(haar):
	u = haar(3, 4)
	s = Occupation((2, 1, 0))
	labels = LabelConfiguration.from_labels({0: [1.0], 1: [1.0]})
	partial = get_model("partial").compute(ModelInputs(u, s, labels=labels))
	assert max_abs_difference(partial, ideal_distribution(u, s)) < 1e-10


def test_distinguishable_with_collisions_is_normalized(haar):
	u = haar(3, 8)
	dist = distinguishable_distribution(u, Occupation((2, 0, 1)))
	assert dist.total() == pytest.approx(1.0, abs=1e-9)
	assert dist.model == "distinguishable"
	# two distinguishable bosons from one mode with U = I stay put
	assert distinguishable_distribution(np.eye(2), Occupation((2, 0)))[(2, 0)] == pytest.approx(1.0)


def _random_occupation(rng: np.random.Generator, m: int, n: int) -> Occupation:
	counts = np.bincount(rng.integers(0, m, size=n), minlength=m)
	return Occupation(tuple(int(c) for c in counts))


def _random_mode_labels(rng: np.random.Generator, s: Occupation) -> LabelConfiguration:
	vectors = {}
	for mode, count in enumerate(s.counts):
		if count:
			vec = rng.standard_normal(s.n) + 1j * rng.standard_normal(s.n)
			vectors[mode] = vec / np.linalg.norm(vec)
	return LabelConfiguration.from_labels(vectors)


@pytest.mark.parametrize("model_id, seed", [("ideal", 200), ("distinguishable", 201), ("partial", 202), ("lossy", 203)])
def test_distributions_are_normalized(haar, model_id, seed):
	rng = rng_from_seed(seed)
	model = get_model(model_id)
	for case in range(50):
		m = int(rng.integers(1, 6))
		if model_id == "lossy":
			n0 = int(rng.integers(1, 6))
			s = _random_occupation(rng, m, n0)
			inputs = ModelInputs(haar(m, case), s, lost=int(rng.integers(0, n0 + 1)))
		elif model_id == "partial":
			s = _random_occupation(rng, m, int(rng.integers(1, 5)))
			inputs = ModelInputs(haar(m, case), s, labels=_random_mode_labels(rng, s))
		else:
			s = _random_occupation(rng, m, int(rng.integers(0, 5)))
			inputs = ModelInputs(haar(m, case), s)
		dist = model.compute(inputs)
		assert dist.total() == pytest.approx(1.0, abs=1e-9)
		assert np.all(dist.probabilities >= 0.0)


@pytest.mark.parametrize("model_id", ["ideal", "distinguishable", "partial", "lossy"])
def test_relabeling_modes_relabels_the_distribution(haar, model_id):
	rng = rng_from_seed(301)
	u = haar(4, seed=31)
	s = Occupation((2, 0, 1, 1))
	perm = np.array([2, 0, 3, 1])
	inv = np.argsort(perm)
	u_perm = u[np.ix_(inv, inv)]
	s_perm = Occupation(tuple(s.counts[a] for a in inv))
	labels = labels_perm = None
	if model_id == "partial":
		labels = _random_mode_labels(rng, s)
		labels_perm = LabelConfiguration.from_labels({int(perm[mode]): vec for mode, vec in labels.labels.items()})
	lost = 2 if model_id == "lossy" else 0
	model = get_model(model_id)
	dist = model.compute(ModelInputs(u, s, labels=labels, lost=lost))
	moved = model.compute(ModelInputs(u_perm, s_perm, labels=labels_perm, lost=lost))
	for occ, p in dist.entries():
		assert moved[tuple(occ.counts[a] for a in inv)] == pytest.approx(p, abs=1e-12)


def test_partial_rejects_bad_matrices(beamsplitter):
	with pytest.raises(ValidationError):
		partial_distribution(beamsplitter, HOM, np.array([[1.0, 2.0], [2.0, 1.0]]))
	with pytest.raises(ValidationError):
		partial_distribution(beamsplitter, HOM, np.array([[1.0, 0.5], [0.2, 1.0]]))
	with pytest.raises(ValidationError):
		partial_distribution(beamsplitter, HOM, np.eye(3))
	with pytest.raises(ValidationError):
		get_model("partial").compute(ModelInputs(beamsplitter, HOM))


def test_partial_size_cap(haar):
	s = Occupation((1,) * 4)
	with pytest.raises(SizeError):
		partial_distribution(haar(4), s, np.eye(4), Settings(max_partial_n=3))


def test_build_dist_matrix_orders_by_mode():
	labels = LabelConfiguration.from_labels({0: [1.0, 0.0], 2: [0.0, 1.0]})
	smat = build_dist_matrix(Occupation((2, 0, 1)), labels)
	assert np.allclose(smat, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])
	with pytest.raises(ValidationError):
		build_dist_matrix(Occupation((1, 1, 0)), labels)
	wide = LabelConfiguration.from_labels({0: [0.0, 0.0, 1.0]})
	with pytest.raises(ValidationError):
		build_dist_matrix(Occupation((1, 0)), wide)


def test_loss_identity_two_modes_is_uniform():
	dist = lossy_distribution(np.eye(2), HOM, 1)
	assert dist.n == 1
	assert np.allclose(dist.probabilities, [0.5, 0.5], atol=1e-10)


def test_loss_of_everything_leaves_vacuum(haar):
	dist = lossy_distribution(haar(3), Occupation((1, 1, 0)), 2)
	assert [o.counts for o in dist.occupations] == [(0, 0, 0)]
	assert dist.probabilities[0] == pytest.approx(1.0)


def test_no_loss_equals_ideal(haar):
	u = haar(3, 2)
	s = Occupation((1, 2, 0))
	assert max_abs_difference(lossy_distribution(u, s, 0), ideal_distribution(u, s)) < 1e-12


def test_loss_rejects_too_many(beamsplitter):
	with pytest.raises(ValidationError):
		lossy_distribution(beamsplitter, HOM, 3)
	with pytest.raises(ValidationError):
		get_model("lossy").compute(ModelInputs(beamsplitter, HOM, lost=3))


def test_lossy_partial_with_identical_labels_matches_lossy(haar):
	u = haar(3, 12)
	s0 = Occupation((1, 1, 1))
	labels = LabelConfiguration.from_labels({0: [1.0], 1: [1.0], 2: [1.0]})
	ref = lossy_distribution(u, s0, 1)
	assert max_abs_difference(lossy_partial_distribution(u, s0, 1, labels), ref) < 1e-10


def test_lossy_partial_with_orthogonal_labels_is_distinguishable_mixture(haar):
	u = haar(3, 13)
	s0 = Occupation((1, 1, 1))
	labels = LabelConfiguration.from_labels({0: [1, 0, 0], 1: [0, 1, 0], 2: [0, 0, 1]})
	dist = get_model("lossy").compute(ModelInputs(u, s0, labels=labels, lost=1))
	ref = sum(distinguishable_distribution(u, s).probabilities for s in (Occupation((1, 1, 0)), Occupation((1, 0, 1)), Occupation((0, 1, 1)))) / 3
	assert np.allclose(dist.probabilities, ref, atol=1e-10)


def test_lossy_rejects_dist_matrix(beamsplitter):
	cfg = LabelConfiguration.from_matrix(np.eye(2))
	with pytest.raises(ValidationError):
		lossy_partial_distribution(beamsplitter, HOM, 1, cfg)
	with pytest.raises(ValidationError):
		get_model("lossy").compute(ModelInputs(beamsplitter, HOM, dist_matrix=np.eye(2), lost=1))


def test_results_do_not_depend_on_thread_count(haar):
	u = haar(5, 3)
	s = Occupation((1, 1, 1, 0, 0))
	one = ideal_distribution(u, s, Settings(threads=1))
	many = ideal_distribution(u, s, Settings(threads=4))
	assert np.array_equal(one.probabilities, many.probabilities)


def test_registry():
	assert available_models() == ["distinguishable", "ideal", "lossy", "partial"]
	with pytest.raises(ValidationError, match="available"):
		get_model("nope")


def test_rejects_mismatched_inputs(beamsplitter):
	with pytest.raises(ValidationError):
		ideal_distribution(beamsplitter, Occupation((1, 0, 0)))
	with pytest.raises(ValidationError):
		ideal_distribution(np.ones((2, 2)), HOM)


def test_total_variation_needs_same_basis(beamsplitter):
	a = ideal_distribution(beamsplitter, HOM)
	b = ideal_distribution(beamsplitter, Occupation((1, 0)))
	with pytest.raises(ValidationError):
		total_variation(a, b)


def test_identity_interferometer_is_point_mass():
	ideal = ideal_distribution(np.eye(3), Occupation((1, 0, 2)))
	assert ideal[(1, 0, 2)] == pytest.approx(1.0)
	dist = distinguishable_distribution(np.eye(3), Occupation((1, 0, 1)))
	assert dist[(1, 0, 1)] == pytest.approx(1.0)


def test_single_boson_models_agree(haar):
	u = haar(4, 14)
	s = Occupation((0, 0, 1, 0))
	ideal = ideal_distribution(u, s)
	assert np.allclose(ideal.probabilities, np.abs(u[:, 2]) ** 2)
	assert max_abs_difference(distinguishable_distribution(u, s), ideal) < 1e-12
	assert max_abs_difference(partial_distribution(u, s, np.eye(1)), ideal) < 1e-12


def test_loss_from_a_single_mode(haar):
	u = haar(2, 15)
	assert max_abs_difference(lossy_distribution(u, Occupation((2, 0)), 1), ideal_distribution(u, Occupation((1, 0)))) < 1e-12


def test_total_variation_extremes():
	a = ideal_distribution(np.eye(2), Occupation((1, 1)))
	b = ideal_distribution(np.array([[0, 1], [1, 0]]), Occupation((2, 0)))
	assert total_variation(a, a) == 0.0
	assert total_variation(a, b) == pytest.approx(1.0)
