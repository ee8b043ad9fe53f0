"""
File schemas for every JSON artifact. Shape checks live here; numerical checks
(unitarity, normalization, PSD) happen when the builder turns a schema into a value.
"""

from __future__ import annotations

from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class _Strict(BaseModel):
	model_config = ConfigDict(extra="forbid")


class MatrixFile(_Strict):
	m: int = Field(ge=1)
	re: list[list[float]]
	im: list[list[float]]

	@model_validator(mode="after")
	def _square(self) -> "MatrixFile":
		for name, rows in (("re", self.re), ("im", self.im)):
			if len(rows) != self.m or any(len(row) != self.m for row in rows):
				raise ValueError(f"{name} must be {self.m}x{self.m}")
		return self


class PhaseElementFile(_Strict):
	kind: Literal["phase"] = "phase"
	mode: int = Field(ge=0)
	angle: float


class MixingElementFile(_Strict):
	kind: Literal["mixing"] = "mixing"
	mode: int = Field(ge=0)
	theta: float
	phi: float


ElementFile = Annotated[PhaseElementFile | MixingElementFile, Field(discriminator="kind")]


class ElementSequenceFile(_Strict):
	m: int = Field(ge=1)
	elements: list[ElementFile] = Field(default_factory=list)
	phases: list[float] = Field(default_factory=list)


class DistributionEntry(_Strict):
	occupation: list[int]
	p: float = Field(ge=-1e-12)


class DistributionFile(_Strict):
	m: int = Field(ge=1)
	n: int = Field(ge=0)
	model: str = ""
	entries: list[DistributionEntry]

	@model_validator(mode="after")
	def _shapes(self) -> "DistributionFile":
		for entry in self.entries:
			if len(entry.occupation) != self.m or sum(entry.occupation) != self.n:
				raise ValueError(f"entry {entry.occupation} is not an m={self.m}, n={self.n} occupation")
		return self


class LabelEntry(_Strict):
	mode: int = Field(ge=0)
	re: list[float]
	im: list[float] = Field(default_factory=list)

	@model_validator(mode="after")
	def _widths(self) -> "LabelEntry":
		if self.im and len(self.im) != len(self.re):
			raise ValueError(f"Label vector for mode {self.mode}: re and im lengths differ")
		return self


class LabelsFile(_Strict):
	labels: list[LabelEntry] = Field(min_length=1)

	@model_validator(mode="after")
	def _unique(self) -> "LabelsFile":
		modes = [entry.mode for entry in self.labels]
		if len(set(modes)) != len(modes):
			raise ValueError("each mode may carry only one Label vector")
		return self


class RunManifest(BaseModel):
	"""
	Everything needed to re-run a command and check its outputs bit for bit.
	"""

	command: str
	argv: list[str]
	parameters: dict[str, Any] = Field(default_factory=dict)
	seeds: list[int] = Field(default_factory=list)
	version: str
	inputs: dict[str, str] = Field(default_factory=dict)
	outputs: dict[str, str] = Field(default_factory=dict)
	seconds: float = 0.0
