"""
Orakelpakke for HammingBand.
"""

from .extensions import count_linear_extensions, hook_length_count
from .solver import ExactSolver, OracleResult

__all__ = [
    'count_linear_extensions',
    'hook_length_count',
    'ExactSolver',
    'OracleResult',
]
