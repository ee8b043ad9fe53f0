"""
Permanent kernel and the U_{S',S} submatrix construction.

The kernel is Ryser's inclusion-exclusion formula. Columns are split into an inner block
of up to _INNER_BITS columns, whose 2^k subset row sums are precomputed once, and an
outer block walked in Gray-code order with a running row-sum vector (one column added or
removed per step). Each inner block is summed exactly rounded (math.fsum) and the outer
sum is accumulated with compensated summation in a fixed order, so the result does not
depend on how the work is scheduled.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .config import Settings, get_settings
from .errors import ValidationError
from .models import Occupation


_INNER_BITS = 12


def as_complex_matrix(a: np.ndarray | list, name: str = "matrix") -> np.ndarray:
	mat = np.asarray(a, dtype=complex)
	if mat.ndim != 2:
		raise ValidationError(f"{name} must be 2-D, got shape {mat.shape}")
	if not np.all(np.isfinite(mat)):
		raise ValidationError(f"{name} has NaN or infinite entries")
	return mat


def permanent(a: np.ndarray | list, settings: Settings | None = None) -> complex:
	mat = as_complex_matrix(a)
	rows, cols = mat.shape
	if rows != cols:
		raise ValidationError(f"permanent needs a square matrix, got {rows}x{cols}")
	(settings or get_settings()).check_permanent_order(rows)
	if rows == 0:
		return complex(1.0)
	if rows == 1:
		return complex(mat[0, 0])
	return _ryser(mat)


def permanent_bruteforce(a: np.ndarray | list) -> complex:
	"""
	Sum over all n! permutations; reference for small matrices only.
	"""
	mat = as_complex_matrix(a)
	n = mat.shape[0]
	if mat.shape != (n, n):
		raise ValidationError(f"permanent needs a square matrix, got {mat.shape}")
	total = 0j
	rows = range(n)
	for sigma in itertools.permutations(rows):
		total += math.prod((mat[k, sigma[k]] for k in rows), start=1 + 0j)
	return complex(total)


@lru_cache(maxsize=None)
def _inner_subsets(k: int) -> tuple[np.ndarray, np.ndarray]:
	masks = np.arange(1 << k)
	bits = ((masks[:, None] >> np.arange(k)) & 1).astype(float)
	signs = 1.0 - 2.0 * (bits.sum(axis=1) % 2)
	bits.setflags(write=False)
	signs.setflags(write=False)
	return bits.T, signs


class _CompensatedSum:
	"""
	Kahan summation for complex values.
	"""

	__slots__ = ("total", "carry")

	def __init__(self) -> None:
		self.total = 0j
		self.carry = 0j

	def add(self, value: complex) -> None:
		y = value - self.carry
		t = self.total + y
		self.carry = (t - self.total) - y
		self.total = t


def _ryser(mat: np.ndarray) -> complex:
	n = mat.shape[0]
	k = min(n, _INNER_BITS)
	outer_cols = n - k
	bits_t, signs = _inner_subsets(k)
	inner = mat[:, :k] @ bits_t
	outer = mat[:, k:]

	row_sums = np.zeros(n, dtype=complex)
	acc = _CompensatedSum()
	parity = 0
	for step in range(1 << outer_cols):
		if step:
			bit = (step & -step).bit_length() - 1
			if (step ^ (step >> 1)) >> bit & 1:
				row_sums += outer[:, bit]
			else:
				row_sums -= outer[:, bit]
			parity ^= 1
		terms = np.prod(row_sums[:, None] + inner, axis=0) * signs
		block = complex(math.fsum(terms.real), math.fsum(terms.imag))
		acc.add(-block if parity else block)
	return -acc.total if n % 2 else acc.total


def submatrix(u: np.ndarray, s_out: Occupation, s_in: Occupation) -> np.ndarray:
	"""
	U_{S',S}: row i of U taken S'_i times, then column j taken S_j times (mode-ascending).
	"""
	mat = as_complex_matrix(u, "unitary")
	m = mat.shape[0]
	if mat.shape != (m, m):
		raise ValidationError(f"unitary must be square, got {mat.shape}")
	if s_out.m != m or s_in.m != m:
		raise ValidationError(f"occupations must have {m} modes, got {s_out.m} and {s_in.m}")
	if s_out.n != s_in.n:
		raise ValidationError(f"boson count mismatch: output has {s_out.n}, input has {s_in.n}")
	rows = np.repeat(np.arange(m), s_out.counts)
	cols = np.repeat(np.arange(m), s_in.counts)
	return mat[np.ix_(rows, cols)]


def abs_squared(a: np.ndarray) -> np.ndarray:
	mat = np.asarray(a, dtype=complex)
	return (mat.real**2 + mat.imag**2).astype(complex)
