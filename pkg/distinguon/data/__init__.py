"""
JSON artifacts: loader (raw files and digests), schemas (pydantic), builder (schema <-> values).
"""

from .builder import (
	parse_file,
	read_distribution,
	read_dist_matrix,
	read_labels,
	read_matrix,
	read_samples,
	read_sequence,
	write_distribution,
	write_labels,
	write_matrix,
	write_samples,
	write_sequence,
)
from .loader import dump_json, file_digest, load_json
from .schemas import RunManifest

__all__ = [
	"parse_file",
	"read_distribution",
	"read_dist_matrix",
	"read_labels",
	"read_matrix",
	"read_samples",
	"read_sequence",
	"write_distribution",
	"write_labels",
	"write_matrix",
	"write_samples",
	"write_sequence",
	"dump_json",
	"file_digest",
	"load_json",
	"RunManifest",
]
