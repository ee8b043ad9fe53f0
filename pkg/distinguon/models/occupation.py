from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from ..errors import ValidationError


@dataclass(frozen=True)
class Occupation:
	"""
	Per-mode boson counts (second-quantized basis label). Modes are 0-based here;
	documentation and the CLI count them from 1 only in prose.
	"""

	counts: tuple[int, ...]

	def __post_init__(self) -> None:
		try:
			counts = tuple(int(c) for c in self.counts)
		except (TypeError, ValueError) as e:
			raise ValidationError(f"occupation counts must be integers: {self.counts!r}") from e
		if not counts:
			raise ValidationError("occupation needs at least one mode")
		if any(c < 0 for c in counts):
			raise ValidationError(f"occupation counts must be non-negative: {counts}")
		object.__setattr__(self, "counts", counts)

	@classmethod
	def zeros(cls, m: int) -> "Occupation":
		return cls((0,) * int(m))

	@classmethod
	def parse(cls, text: str) -> "Occupation":
		"""
		Parse the command-line form "1,1,0".
		"""
		parts = [p.strip() for p in str(text or "").split(",")]
		if not parts or any(not p for p in parts):
			raise ValidationError(f"cannot parse occupation {text!r}: expected comma-separated counts")
		return cls(tuple(parts))

	@property
	def m(self) -> int:
		return len(self.counts)

	@property
	def n(self) -> int:
		return sum(self.counts)

	def __len__(self) -> int:
		return len(self.counts)

	def __iter__(self) -> Iterator[int]:
		return iter(self.counts)

	def __getitem__(self, mode: int) -> int:
		return self.counts[mode]

	def __str__(self) -> str:
		return "(" + ",".join(str(c) for c in self.counts) + ")"

	def is_collision_free(self) -> bool:
		return all(c <= 1 for c in self.counts)

	def factorial_product(self) -> int:
		return math.prod(math.factorial(c) for c in self.counts)

	def canonical_word(self) -> "ModeWord":
		"""
		Mode-ascending word, e.g. (1,2,0) -> letters (1,2,2).
		"""
		letters: list[int] = []
		for mode, count in enumerate(self.counts):
			letters.extend([mode + 1] * count)
		return ModeWord(tuple(letters))

	def to_list(self) -> list[int]:
		return list(self.counts)


@dataclass(frozen=True)
class ModeWord:
	"""
	First-quantized label: letter k (1-based) is the mode of particle k.
	"""

	letters: tuple[int, ...]

	def __post_init__(self) -> None:
		try:
			letters = tuple(int(x) for x in self.letters)
		except (TypeError, ValueError) as e:
			raise ValidationError(f"word letters must be integers: {self.letters!r}") from e
		if any(x < 1 for x in letters):
			raise ValidationError(f"word letters are 1-based modes, got {letters}")
		object.__setattr__(self, "letters", letters)

	@classmethod
	def from_indices(cls, indices: Sequence[int]) -> "ModeWord":
		return cls(tuple(int(i) + 1 for i in indices))

	@property
	def n(self) -> int:
		return len(self.letters)

	def indices(self) -> tuple[int, ...]:
		return tuple(x - 1 for x in self.letters)

	def is_collision_free(self) -> bool:
		return len(set(self.letters)) == len(self.letters)

	def __len__(self) -> int:
		return len(self.letters)

	def __iter__(self) -> Iterator[int]:
		return iter(self.letters)


@dataclass(frozen=True)
class SystemLabelOccupation:
	"""
	m x d grid: entry (i, j) counts bosons in System mode i and Label mode j.
	"""

	counts: tuple[tuple[int, ...], ...]

	def __post_init__(self) -> None:
		try:
			rows = tuple(tuple(int(c) for c in row) for row in self.counts)
		except (TypeError, ValueError) as e:
			raise ValidationError(f"System-Label counts must be integers: {self.counts!r}") from e
		if not rows or not rows[0]:
			raise ValidationError("System-Label occupation needs at least one System and one Label mode")
		width = len(rows[0])
		if any(len(row) != width for row in rows):
			raise ValidationError("System-Label occupation must be rectangular")
		if any(c < 0 for row in rows for c in row):
			raise ValidationError(f"System-Label counts must be non-negative: {rows}")
		object.__setattr__(self, "counts", rows)

	@property
	def m(self) -> int:
		return len(self.counts)

	@property
	def label_modes(self) -> int:
		return len(self.counts[0])

	@property
	def n(self) -> int:
		return sum(sum(row) for row in self.counts)

	def system_occupation(self) -> Occupation:
		return Occupation(tuple(sum(row) for row in self.counts))

	def factorial_product(self) -> int:
		return math.prod(math.factorial(c) for row in self.counts for c in row)

	def to_lists(self) -> list[list[int]]:
		return [list(row) for row in self.counts]
