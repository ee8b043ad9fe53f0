"""
Brute-force first-quantized oracle on (C^m)^n and (C^m (x) C^d)^n.
"""

from .channels import (
	apply_transversal,
	as_density,
	isotypic_weights,
	partial_transpose,
	partial_transpose_first,
	postselect_irrep,
	postselect_symmetric,
	trace_out_label,
	trace_out_last_qudits,
	trace_out_qudits,
)
from .measures import (
	measurement_distribution,
	min_eigenvalue,
	negativity,
	purity,
	schmidt_coefficients,
	schmidt_rank,
	trace_norm,
)
from .pipelines import oracle_ideal, oracle_lossy, oracle_lossy_partial, oracle_partial, oracle_postselected
from .states import (
	labels_from_dist_matrix,
	superposition_from_labels,
	symmetrize_occupation,
	symmetrize_word,
	system_label_state,
	werner_mixture,
)

__all__ = [
	"apply_transversal",
	"as_density",
	"isotypic_weights",
	"partial_transpose",
	"partial_transpose_first",
	"postselect_irrep",
	"postselect_symmetric",
	"trace_out_label",
	"trace_out_last_qudits",
	"trace_out_qudits",
	"measurement_distribution",
	"min_eigenvalue",
	"negativity",
	"purity",
	"schmidt_coefficients",
	"schmidt_rank",
	"trace_norm",
	"oracle_ideal",
	"oracle_lossy",
	"oracle_lossy_partial",
	"oracle_partial",
	"oracle_postselected",
	"labels_from_dist_matrix",
	"superposition_from_labels",
	"symmetrize_occupation",
	"symmetrize_word",
	"system_label_state",
	"werner_mixture",
]
