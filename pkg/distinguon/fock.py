"""
Occupation bookkeeping: enumeration, indexing, and conversions between occupations,
mode words, and flattened System-Label modes.

Canonical order everywhere is lexicographically descending on the counts vector,
so (n, 0, ..., 0) comes first.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence

from .config import Settings, get_settings
from .errors import SizeError, ValidationError
from .models import ModeWord, Occupation, SystemLabelOccupation


def basis_size(m: int, n: int) -> int:
	return math.comb(int(m) + int(n) - 1, int(n))


def enumerate_occupations(m: int, n: int, settings: Settings | None = None) -> list[Occupation]:
	m, n = int(m), int(n)
	if m < 1:
		raise ValidationError(f"need at least one mode, got m={m}")
	if n < 0:
		raise ValidationError(f"boson count must be non-negative, got n={n}")
	cfg = settings or get_settings()
	size = basis_size(m, n)
	if size > cfg.max_enumeration:
		raise SizeError(f"enumerating C({m + n - 1},{n}) = {size} occupations exceeds the cap {cfg.max_enumeration}")
	return [Occupation(c) for c in _bounded_compositions(n, (n,) * m)]


def consistent_suboccupations(s0: Occupation, n: int) -> list[Occupation]:
	"""
	All n-boson S with S_i <= S0_i, in canonical order.
	"""
	n = int(n)
	if n < 0 or n > s0.n:
		raise ValidationError(f"need 0 <= n <= {s0.n} for suboccupations of {s0}, got n={n}")
	return [Occupation(c) for c in _bounded_compositions(n, s0.counts)]


def _bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
	if len(caps) == 1:
		if total <= caps[0]:
			yield (total,)
		return
	rest_capacity = sum(caps[1:])
	for first in range(min(total, caps[0]), -1, -1):
		if total - first > rest_capacity:
			break
		for rest in _bounded_compositions(total - first, caps[1:]):
			yield (first,) + rest


def index_occupations(occupations: Sequence[Occupation]) -> dict[Occupation, int]:
	return {occ: i for i, occ in enumerate(occupations)}


def type_of(word: ModeWord, m: int) -> Occupation:
	m = int(m)
	counts = [0] * m
	for letter in word.letters:
		if not 1 <= letter <= m:
			raise ValidationError(f"word letter {letter} outside modes 1..{m}")
		counts[letter - 1] += 1
	return Occupation(tuple(counts))


def multiplicity_of_type(s: Occupation) -> int:
	"""
	Number of words of type S: n! / prod_i S_i! (exact).
	"""
	return math.factorial(s.n) // s.factorial_product()


def canonical_word(s: Occupation) -> ModeWord:
	return s.canonical_word()


def flatten_system_label(t: SystemLabelOccupation) -> Occupation:
	"""
	Pairing map (i, j) -> i * d + j (0-based; d = number of Label modes).
	"""
	d = t.label_modes
	flat = [0] * (t.m * d)
	for i, row in enumerate(t.counts):
		for j, count in enumerate(row):
			flat[i * d + j] = count
	return Occupation(tuple(flat))


def unflatten_system_label(flat: Occupation, label_modes: int) -> SystemLabelOccupation:
	d = int(label_modes)
	if d < 1 or flat.m % d:
		raise ValidationError(f"cannot split {flat.m} flat modes into rows of {d} Label modes")
	rows = tuple(tuple(flat.counts[i * d : (i + 1) * d]) for i in range(flat.m // d))
	return SystemLabelOccupation(rows)
