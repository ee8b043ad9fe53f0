"""
Distinguon: exact bosonic sampling with partial distinguishability and loss.
"""

__version__ = "0.3.0"
