"""
Representation-theoretic combinatorics: partitions, unitary and symmetric-group irrep
dimensions, the duality dimension identities, symmetric-group characters, and the
symmetric irrep matrix of U built from permanents.

All dimension arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .config import Settings, get_settings
from .distributions.engine import evaluate
from .errors import ValidationError
from .fock import basis_size, enumerate_occupations
from .interferometer import validate_unitary
from .models import Occupation
from .permanent import permanent, submatrix


@dataclass(frozen=True, order=True)
class Partition:
	parts: tuple[int, ...]

	def __post_init__(self) -> None:
		parts = tuple(int(p) for p in self.parts)
		if any(p < 1 for p in parts):
			raise ValidationError(f"partition parts must be positive: {parts}")
		if any(a < b for a, b in zip(parts, parts[1:])):
			raise ValidationError(f"partition parts must be non-increasing: {parts}")
		object.__setattr__(self, "parts", parts)

	@property
	def weight(self) -> int:
		return sum(self.parts)

	@property
	def length(self) -> int:
		return len(self.parts)

	def padded(self, m: int) -> tuple[int, ...]:
		if self.length > m:
			raise ValidationError(f"partition {self} has {self.length} rows, more than {m}")
		return self.parts + (0,) * (m - self.length)

	def conjugate(self) -> "Partition":
		if not self.parts:
			return self
		return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

	def hook_lengths(self) -> list[list[int]]:
		cols = self.conjugate().parts
		return [[(row - j - 1) + (cols[j] - i - 1) + 1 for j in range(row)] for i, row in enumerate(self.parts)]

	def __str__(self) -> str:
		return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions_of(n: int, max_length: int | None = None) -> list[Partition]:
	"""
	Partitions of n with at most max_length rows, reverse-lexicographic: (n) first.
	"""
	n = int(n)
	if n < 0:
		raise ValidationError(f"cannot partition a negative number: {n}")
	limit = n if max_length is None else int(max_length)
	return [Partition(p) for p in _partitions(n, n, limit)]


def _partitions(n: int, largest: int, rows: int) -> Iterator[tuple[int, ...]]:
	if n == 0:
		yield ()
		return
	if rows <= 0:
		return
	for first in range(min(n, largest), 0, -1):
		for rest in _partitions(n - first, first, rows - 1):
			yield (first,) + rest


def unitary_dim(lam: Partition, m: int) -> int:
	"""
	Weyl dimension of the U(m) irrep {lambda}.
	"""
	m = int(m)
	if m < 1:
		raise ValidationError(f"need m >= 1, got {m}")
	padded = lam.padded(m)
	num, den = 1, 1
	for i in range(m):
		for j in range(i + 1, m):
			num *= padded[i] - padded[j] + j - i
			den *= j - i
	return num // den


def symmetric_group_dim(lam: Partition) -> int:
	"""
	Hook-length formula: n! / prod(hooks).
	"""
	hooks = math.prod(h for row in lam.hook_lengths() for h in row)
	return math.factorial(lam.weight) // hooks


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
	"""
	Cycle lengths of a permutation of 0..n-1, largest first.
	"""
	seen = [False] * len(perm)
	lengths: list[int] = []
	for start in range(len(perm)):
		if seen[start]:
			continue
		length = 0
		k = start
		while not seen[k]:
			seen[k] = True
			k = int(perm[k])
			length += 1
		lengths.append(length)
	return tuple(sorted(lengths, reverse=True))


def symmetric_group_character(lam: Partition, cycles: Sequence[int]) -> int:
	"""
	chi_lambda on the class with the given cycle type (Murnaghan-Nakayama rule).
	"""
	cyc = tuple(sorted((int(c) for c in cycles if int(c) > 0), reverse=True))
	if sum(cyc) != lam.weight:
		raise ValidationError(f"cycle type {cyc} does not partition {lam.weight}")
	length = lam.length
	beta = tuple(sorted(p + length - 1 - i for i, p in enumerate(lam.parts)))
	return _mn_character(beta, cyc)


@lru_cache(maxsize=None)
def _mn_character(beta: tuple[int, ...], cycles: tuple[int, ...]) -> int:
	# beta: strictly increasing beta-set; removing an r-rim hook moves one bead down by r
	if not cycles:
		return 1
	r, rest = cycles[0], cycles[1:]
	occupied = set(beta)
	total = 0
	for b in beta:
		target = b - r
		if target < 0 or target in occupied:
			continue
		jumped = sum(1 for x in beta if target < x < b)
		moved = tuple(sorted((occupied - {b}) | {target}))
		total += (-1) ** jumped * _mn_character(moved, rest)
	return total


@dataclass
class IdentityReport:
	"""
	Outcome of one dimension identity: per-partition rows, both sides, pass flag.
	"""

	name: str
	lhs: int
	rhs: int
	rows: list[dict[str, object]] = field(default_factory=list)

	@property
	def passed(self) -> bool:
		return self.lhs == self.rhs


def _check_range(name: str, value: int, upper: int) -> int:
	value = int(value)
	if not 1 <= value <= upper:
		raise ValidationError(f"{name} must be in 1..{upper}, got {value}")
	return value


def schur_weyl_check(m: int, n: int) -> IdentityReport:
	"""
	sum over lambda |- n, l(lambda) <= m of dim{lambda}_U(m) * dim(lambda)_S(n) == m^n.
	"""
	m = _check_range("m", m, 8)
	n = _check_range("n", n, 8) if n else 0
	rows = []
	for lam in partitions_of(n, m):
		du, ds = unitary_dim(lam, m), symmetric_group_dim(lam)
		rows.append({"partition": str(lam), "unitary_dim": du, "symmetric_dim": ds, "term": du * ds})
	return IdentityReport("schur-weyl", sum(r["term"] for r in rows), m**n, rows)


def unitary_unitary_check(m: int, d: int, n: int) -> IdentityReport:
	"""
	sum over lambda of dim{lambda}_U(m) * dim{lambda}_U(d) == C(md + n - 1, n).
	"""
	m = _check_range("m", m, 6)
	d = _check_range("d", d, 6)
	n = _check_range("n", n, 6) if n else 0
	rows = []
	for lam in partitions_of(n, min(m, d)):
		dm, dd = unitary_dim(lam, m), unitary_dim(lam, d)
		rows.append({"partition": str(lam), "system_dim": dm, "label_dim": dd, "term": dm * dd})
	return IdentityReport("unitary-unitary", sum(r["term"] for r in rows), basis_size(m * d, n), rows)


def coincident_dimension_check(n: int) -> IdentityReport:
	n = _check_range("n", n, 7)
	rows = []
	for lam in partitions_of(n):
		ds = symmetric_group_dim(lam)
		rows.append({"partition": str(lam), "symmetric_dim": ds, "term": ds * ds})
	return IdentityReport("coincident", sum(r["term"] for r in rows), math.factorial(n), rows)


def symmetric_irrep_matrix(u: np.ndarray, n: int, settings: Settings | None = None) -> np.ndarray:
	"""
	Matrix of U on the totally symmetric irrep, basis = occupations in canonical order:
	entry [S', S] = per(U_{S',S}) / sqrt(prod S'_i! S_i!).
	"""
	cfg = settings or get_settings()
	mat = validate_unitary(u)
	m, n = mat.shape[0], int(n)
	if n < 0:
		raise ValidationError(f"boson count must be non-negative, got {n}")
	cfg.check_basis_size(basis_size(m, n), "symmetric irrep basis")
	cfg.check_permanent_order(n)
	basis = enumerate_occupations(m, n, cfg)
	roots = [math.sqrt(occ.factorial_product()) for occ in basis]

	def row(out: Occupation) -> list[complex]:
		return [permanent(submatrix(mat, out, s), cfg) / root for s, root in zip(basis, roots)]

	rows = evaluate(basis, row, cfg)
	return np.asarray(rows, dtype=complex) / np.asarray(roots)[:, None]
