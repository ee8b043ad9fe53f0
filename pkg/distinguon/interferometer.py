"""
Interferometer matrices: Haar sampling, validation, and the triangular (Reck) decomposition.

Convention: column i of U is the image of input mode i, so a single boson entering
mode i leaves in mode j with amplitude U[j, i]. Every distribution formula and the
dense oracle (which applies U to each qudit as an ordinary matrix-vector product)
use this one convention.
"""

from __future__ import annotations

import logging

import numpy as np
from scipy.linalg import qr

from .config import UNITARY_ATOL
from .errors import ValidationError
from .models import ElementSequence, MixingElement, PhaseShift
from .permanent import as_complex_matrix


log = logging.getLogger(__name__)

_MAX_SEED = 2**64
_NULL_ATOL = 1e-15


def rng_from_seed(seed: int, counter: int = 0) -> np.random.Generator:
	"""
	Philox (counter-based) stream keyed by the 64-bit seed. counter selects an
	independent block of the stream (placed in the high word so blocks never overlap).
	"""
	seed = int(seed)
	if not 0 <= seed < _MAX_SEED:
		raise ValidationError(f"seed must be a 64-bit unsigned integer, got {seed}")
	return np.random.Generator(np.random.Philox(key=seed, counter=int(counter) << 192))


def unitarity_residual(u: np.ndarray) -> float:
	mat = np.asarray(u, dtype=complex)
	return float(np.max(np.abs(mat.conj().T @ mat - np.eye(mat.shape[0]))))


def validate_unitary(u: np.ndarray | list, atol: float = UNITARY_ATOL, name: str = "unitary") -> np.ndarray:
	mat = as_complex_matrix(u, name)
	if mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
		raise ValidationError(f"{name} must be a non-empty square matrix, got shape {mat.shape}")
	residual = unitarity_residual(mat)
	if residual > atol:
		raise ValidationError(f"{name} is not unitary: max|U^dag U - I| = {residual:.3e} > {atol:.0e}")
	return mat


def haar_random_unitary(m: int, seed: int) -> np.ndarray:
	"""
	Ginibre matrix -> QR -> fix the phases of R's diagonal.
	"""
	m = int(m)
	if m < 1:
		raise ValidationError(f"need m >= 1, got {m}")
	rng = rng_from_seed(seed)
	z = (rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))) / np.sqrt(2.0)
	q, r = qr(z)
	d = np.diag(r)
	return q * (d / np.abs(d))


def reck_decompose(u: np.ndarray | list, atol: float = UNITARY_ATOL) -> ElementSequence:
	"""
	Null the sub-diagonal column by column (bottom-up) with adjacent two-mode elements,
	leaving a diagonal of phases. recompose() multiplies the elements back in order.
	"""
	w = validate_unitary(u, atol).copy()
	m = w.shape[0]
	elements: list[MixingElement] = []
	for col in range(m - 1):
		for row in range(m - 1, col, -1):
			a, b = w[row - 1, col], w[row, col]
			if abs(b) <= _NULL_ATOL:
				continue
			theta = float(np.arctan2(abs(b), abs(a)))
			phi = float(np.angle(a) - np.angle(b)) if abs(a) > _NULL_ATOL else 0.0
			element = MixingElement(mode=row - 1, theta=theta, phi=phi)
			w[row - 1 : row + 1, :] = element.block().conj().T @ w[row - 1 : row + 1, :]
			w[row, col] = 0.0
			elements.append(element)
	phases = tuple(float(p) for p in np.angle(np.diag(w)))
	log.debug("decomposed m=%d unitary into %d mixing elements", m, len(elements))
	return ElementSequence(m=m, elements=tuple(elements), phases=phases)


def recompose(seq: ElementSequence, m: int | None = None) -> np.ndarray:
	m = int(seq.m if m is None else m)
	if m != seq.m:
		raise ValidationError(f"sequence is for {seq.m} modes, asked to recompose {m}")
	result = np.eye(m, dtype=complex)
	for element in seq.elements:
		if isinstance(element, (PhaseShift, MixingElement)):
			result = result @ element.matrix(m)
		else:
			raise ValidationError(f"unknown element {element!r}")
	return result @ np.diag(np.exp(1j * np.asarray(seq.phases)))


def balanced_beamsplitter() -> np.ndarray:
	"""
	(1/sqrt 2) [[1, 1], [1, -1]], the Hong-Ou-Mandel interferometer.
	"""
	return np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)
