from __future__ import annotations


class DistinguonError(Exception):
	"""
	Base class for every error raised by the library.

	exit_code is what the CLI returns when the error reaches the top level.
	"""

	exit_code: int = 1


class ValidationError(DistinguonError, ValueError):
	"""
	Input does not satisfy a precondition (shape, range, normalization, unitarity...).
	"""


class UsageError(ValidationError):
	"""
	Command-line syntax error (unknown subcommand, missing flag).
	"""


class SizeError(DistinguonError):
	"""
	A size cap was exceeded (permanent order, basis size, dense oracle dimension).
	"""

	exit_code = 2


class NumericalError(DistinguonError):
	"""
	An internal consistency bound failed, e.g. a probability below -1e-12.
	"""


class DegeneratePostselectionError(NumericalError):
	"""
	The state has (numerically) no support on the subspace we postselect onto.
	"""


class VerificationFailure(DistinguonError):
	"""
	A verification suite or a manifest replay did not pass.
	"""

	exit_code = 3
