"""
Grensepakke for HammingBand.
"""

from .bounds import (
    BoundsReport,
    bounds_gap,
    compute_report,
    general_lower_bound,
    general_upper_bound,
    hypercube_bandwidth,
    lower_bound,
    lower_bound_2d,
    quadrant_lower_bound_2d,
    upper_bound,
)

__all__ = [
    'BoundsReport',
    'bounds_gap',
    'compute_report',
    'general_lower_bound',
    'general_upper_bound',
    'hypercube_bandwidth',
    'lower_bound',
    'lower_bound_2d',
    'quadrant_lower_bound_2d',
    'upper_bound',
]
