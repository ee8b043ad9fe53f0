from __future__ import annotations

import hashlib
import json
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from ..errors import ValidationError


def load_json(path: Path) -> Any:
	try:
		with path.open("r", encoding="utf-8") as f:
			return json.load(f)
	except FileNotFoundError as e:
		raise ValidationError(f"file not found: {path}") from e
	except json.JSONDecodeError as e:
		raise ValidationError(f"{path}: invalid JSON ({e})") from e


def dump_json(path: Path, data: Any) -> None:
	"""
	Sorted keys and a trailing newline, so equal content gives equal digests.
	"""
	path.parent.mkdir(parents=True, exist_ok=True)
	with path.open("w", encoding="utf-8") as f:
		json.dump(data, f, indent=1, sort_keys=True)
		f.write("\n")


def load_jsonl(path: Path) -> list[Any]:
	rows: list[Any] = []
	try:
		with path.open("r", encoding="utf-8") as f:
			for lineno, line in enumerate(f, start=1):
				if not line.strip():
					continue
				try:
					rows.append(json.loads(line))
				except json.JSONDecodeError as e:
					raise ValidationError(f"{path}:{lineno}: invalid JSON ({e})") from e
	except FileNotFoundError as e:
		raise ValidationError(f"file not found: {path}") from e
	return rows


def dump_jsonl(path: Path, rows: Iterable[Any]) -> None:
	path.parent.mkdir(parents=True, exist_ok=True)
	with path.open("w", encoding="utf-8") as f:
		for row in rows:
			f.write(json.dumps(row, separators=(",", ":")))
			f.write("\n")


def file_digest(path: Path) -> str:
	"""
	SHA-256 hex digest of the file's bytes.
	"""
	h = hashlib.sha256()
	with path.open("rb") as f:
		for block in iter(lambda: f.read(1 << 16), b""):
			h.update(block)
	return h.hexdigest()
