import numpy as np
import pytest

from distinguon.errors import ValidationError
from distinguon.interferometer import (
	balanced_beamsplitter,
	haar_random_unitary,
	recompose,
	reck_decompose,
	rng_from_seed,
	unitarity_residual,
	validate_unitary,
)
from distinguon.models import ElementSequence, MixingElement, PhaseShift


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8])
def test_haar_is_unitary(m):
	assert unitarity_residual(haar_random_unitary(m, 42)) < 1e-12


def test_haar_is_seed_deterministic():
	assert np.array_equal(haar_random_unitary(4, 9), haar_random_unitary(4, 9))
	assert not np.allclose(haar_random_unitary(4, 9), haar_random_unitary(4, 10))


def test_haar_first_moment_is_uniform():
	# E|U_ij|^2 = 1/m for Haar measure
	m, trials = 3, 2000
	acc = np.zeros((m, m))
	for seed in range(trials):
		acc += np.abs(haar_random_unitary(m, seed)) ** 2
	assert np.allclose(acc / trials, 1.0 / m, atol=0.03)


def test_rng_streams():
	a = rng_from_seed(5, 0).random(4)
	b = rng_from_seed(5, 1).random(4)
	assert np.array_equal(a, rng_from_seed(5, 0).random(4))
	assert not np.allclose(a, b)
	with pytest.raises(ValidationError):
		rng_from_seed(-1)
	with pytest.raises(ValidationError):
		rng_from_seed(2**64)


def test_validate_unitary_rejects():
	with pytest.raises(ValidationError):
		validate_unitary(np.ones((2, 2)))
	with pytest.raises(ValidationError):
		validate_unitary(np.eye(3)[:, :2])
	assert validate_unitary(balanced_beamsplitter()).shape == (2, 2)


@pytest.mark.parametrize("m", range(1, 9))
def test_reck_round_trip(m):
	u = haar_random_unitary(m, 1000 + m)
	seq = reck_decompose(u)
	assert seq.mixing_count <= m * (m - 1) // 2
	assert np.max(np.abs(recompose(seq) - u)) < 1e-10


def test_reck_on_permutation_and_identity():
	swap = np.array([[0, 1], [1, 0]], dtype=complex)
	assert np.allclose(recompose(reck_decompose(swap)), swap)
	seq = reck_decompose(np.eye(4))
	assert seq.mixing_count == 0
	assert np.allclose(seq.phases, 0.0)


def test_recompose_phase_elements():
	seq = ElementSequence(m=2, elements=(PhaseShift(0, np.pi / 2), MixingElement(0, np.pi / 4, 0.0)))
	expected = np.diag([1j, 1.0]) @ MixingElement(0, np.pi / 4, 0.0).matrix(2)
	assert np.allclose(recompose(seq), expected)
	with pytest.raises(ValidationError):
		recompose(seq, 3)


def test_element_outside_modes():
	with pytest.raises(ValidationError):
		MixingElement(1, 0.1, 0.0).matrix(2)
	with pytest.raises(ValidationError):
		ElementSequence(m=2, phases=(0.0,))


def test_beamsplitter_needs_one_mixing_element(beamsplitter):
	seq = reck_decompose(beamsplitter)
	assert seq.mixing_count == 1
	assert abs(np.cos(seq.elements[0].theta)) == pytest.approx(1 / np.sqrt(2))


def test_recompose_simple_sequences():
	assert np.allclose(recompose(ElementSequence(m=3)), np.eye(3))
	seq = ElementSequence(m=2, elements=(PhaseShift(0, np.pi),))
	assert np.allclose(recompose(seq), np.diag([-1.0, 1.0]))
