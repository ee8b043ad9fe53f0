"""
Exact output distributions.

A model is responsible for the formula; ModelInputs carries the parameters.
"""

from .base import DistributionModel, ModelInputs
from .compare import max_abs_difference, total_variation
from .distinguishable import DistinguishableModel, distinguishable_distribution
from .ideal import IdealModel, ideal_distribution
from .lossy import LossyModel, lossy_distribution, lossy_partial_distribution
from .partial import PartialModel, build_dist_matrix, partial_distribution
from .registry import available_models, get_model, register_model

# Default registration
register_model(IdealModel())
register_model(DistinguishableModel())
register_model(PartialModel())
register_model(LossyModel())

__all__ = [
	"DistributionModel",
	"ModelInputs",
	"available_models",
	"get_model",
	"register_model",
	"ideal_distribution",
	"distinguishable_distribution",
	"partial_distribution",
	"build_dist_matrix",
	"lossy_distribution",
	"lossy_partial_distribution",
	"total_variation",
	"max_abs_difference",
	"IdealModel",
	"DistinguishableModel",
	"PartialModel",
	"LossyModel",
]
