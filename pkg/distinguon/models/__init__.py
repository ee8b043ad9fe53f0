"""
Value types (one file per concern).
"""

from .dense import DenseState, DensityMatrix, Quantum
from .distribution import OccupationDistribution
from .elements import Element, ElementSequence, MixingElement, PhaseShift
from .labels import LabelConfiguration, validate_dist_matrix
from .occupation import ModeWord, Occupation, SystemLabelOccupation
from .sample_batch import SampleBatch

__all__ = [
	"DenseState",
	"DensityMatrix",
	"Quantum",
	"OccupationDistribution",
	"Element",
	"ElementSequence",
	"MixingElement",
	"PhaseShift",
	"LabelConfiguration",
	"validate_dist_matrix",
	"ModeWord",
	"Occupation",
	"SystemLabelOccupation",
	"SampleBatch",
]
