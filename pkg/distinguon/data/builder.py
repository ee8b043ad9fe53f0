from __future__ import annotations

import csv
from pathlib import Path
from typing import Any, TypeVar

import numpy as np
import pydantic

from ..errors import ValidationError
from ..models import (
	ElementSequence,
	LabelConfiguration,
	MixingElement,
	Occupation,
	OccupationDistribution,
	PhaseShift,
	SampleBatch,
)
from .loader import dump_json, dump_jsonl, load_json, load_jsonl
from .schemas import (
	DistributionEntry,
	DistributionFile,
	ElementSequenceFile,
	LabelEntry,
	LabelsFile,
	MatrixFile,
	MixingElementFile,
	PhaseElementFile,
)


M = TypeVar("M", bound=pydantic.BaseModel)


def parse_file(model: type[M], data: Any, source: str = "") -> M:
	"""
	Validate raw JSON against a schema, turning pydantic's error into ours.
	"""
	try:
		return model.model_validate(data)
	except pydantic.ValidationError as e:
		first = e.errors()[0]
		where = ".".join(str(p) for p in first.get("loc", ()))
		raise ValidationError(f"{source or model.__name__}: {where or 'document'}: {first.get('msg', 'invalid')}") from e


# --- Matrices ---


def matrix_from_file(doc: MatrixFile) -> np.ndarray:
	return np.asarray(doc.re, dtype=float) + 1j * np.asarray(doc.im, dtype=float)


def matrix_to_file(mat: np.ndarray) -> MatrixFile:
	arr = np.asarray(mat, dtype=complex)
	return MatrixFile(m=arr.shape[0], re=arr.real.tolist(), im=arr.imag.tolist())


def read_matrix(path: Path) -> np.ndarray:
	return matrix_from_file(parse_file(MatrixFile, load_json(path), str(path)))


def write_matrix(path: Path, mat: np.ndarray) -> None:
	dump_json(path, matrix_to_file(mat).model_dump())


# --- Element sequences ---


def sequence_to_file(seq: ElementSequence) -> ElementSequenceFile:
	elements: list[PhaseElementFile | MixingElementFile] = []
	for e in seq.elements:
		if isinstance(e, PhaseShift):
			elements.append(PhaseElementFile(mode=e.mode, angle=e.angle))
		else:
			elements.append(MixingElementFile(mode=e.mode, theta=e.theta, phi=e.phi))
	return ElementSequenceFile(m=seq.m, elements=elements, phases=list(seq.phases))


def sequence_from_file(doc: ElementSequenceFile) -> ElementSequence:
	elements: list[PhaseShift | MixingElement] = []
	for e in doc.elements:
		if isinstance(e, PhaseElementFile):
			elements.append(PhaseShift(mode=e.mode, angle=e.angle))
		else:
			elements.append(MixingElement(mode=e.mode, theta=e.theta, phi=e.phi))
	return ElementSequence(m=doc.m, elements=tuple(elements), phases=tuple(doc.phases))


def read_sequence(path: Path) -> ElementSequence:
	return sequence_from_file(parse_file(ElementSequenceFile, load_json(path), str(path)))


def write_sequence(path: Path, seq: ElementSequence) -> None:
	dump_json(path, sequence_to_file(seq).model_dump())


# --- Distributions ---


def distribution_to_file(dist: OccupationDistribution) -> DistributionFile:
	entries = [DistributionEntry(occupation=occ.to_list(), p=p) for occ, p in dist.entries()]
	return DistributionFile(m=dist.m, n=dist.n, model=dist.model, entries=entries)


def distribution_from_file(doc: DistributionFile) -> OccupationDistribution:
	occupations = [Occupation(tuple(e.occupation)) for e in doc.entries]
	return OccupationDistribution.from_raw(doc.m, doc.n, occupations, [e.p for e in doc.entries], model=doc.model)


def read_distribution(path: Path) -> OccupationDistribution:
	return distribution_from_file(parse_file(DistributionFile, load_json(path), str(path)))


def write_distribution(path: Path, dist: OccupationDistribution, fmt: str = "json") -> None:
	if fmt == "json":
		dump_json(path, distribution_to_file(dist).model_dump())
		return
	if fmt != "csv":
		raise ValidationError(f"unknown output format {fmt!r} (json or csv)")
	path.parent.mkdir(parents=True, exist_ok=True)
	with path.open("w", encoding="utf-8", newline="") as f:
		writer = csv.writer(f, lineterminator="\n")
		writer.writerow(["occupation", "p"])
		for occ, p in dist.entries():
			writer.writerow([" ".join(str(c) for c in occ.counts), repr(p)])


# --- Labels ---


def labels_from_file(doc: LabelsFile) -> LabelConfiguration:
	vectors = {}
	for entry in doc.labels:
		im = entry.im or [0.0] * len(entry.re)
		vectors[entry.mode] = np.asarray(entry.re, dtype=float) + 1j * np.asarray(im, dtype=float)
	return LabelConfiguration.from_labels(vectors)


def labels_to_file(labels: LabelConfiguration) -> LabelsFile:
	entries = [LabelEntry(mode=mode, re=vec.real.tolist(), im=vec.imag.tolist()) for mode, vec in sorted(labels.labels.items())]
	return LabelsFile(labels=entries)


def read_labels(path: Path) -> LabelConfiguration:
	return labels_from_file(parse_file(LabelsFile, load_json(path), str(path)))


def write_labels(path: Path, labels: LabelConfiguration) -> None:
	if labels.dist_matrix is not None:
		raise ValidationError("a bare dist matrix has no per-mode Label vectors; write it as a matrix file")
	dump_json(path, labels_to_file(labels).model_dump())


def read_dist_matrix(path: Path) -> LabelConfiguration:
	return LabelConfiguration.from_matrix(read_matrix(path))


# --- Samples ---


def write_samples(path: Path, batch: SampleBatch) -> None:
	dump_jsonl(path, (occ.to_list() for occ in batch.samples))


def read_samples(path: Path) -> SampleBatch:
	rows = load_jsonl(path)
	if not rows:
		raise ValidationError(f"{path}: no samples")
	samples = []
	for lineno, row in enumerate(rows, start=1):
		if not isinstance(row, list):
			raise ValidationError(f"{path}:{lineno}: expected an occupation array")
		samples.append(Occupation(tuple(row)))
	first = samples[0]
	return SampleBatch(m=first.m, n=first.n, samples=tuple(samples), seed=0, model=path.name)
