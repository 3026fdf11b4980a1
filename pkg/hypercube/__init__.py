"""
Hyperkubepakke for HammingBand.
"""

from .numbering import (
    HypercubeNumbering,
    align_max_edges_to_dim1,
    code_to_vertex,
    exhaustive_bandwidth,
    harper_numbering,
    order_bandwidth,
    vertex_to_code,
)
from .orthants import OrthantDecomposition, decompose

__all__ = [
    'HypercubeNumbering',
    'align_max_edges_to_dim1',
    'code_to_vertex',
    'exhaustive_bandwidth',
    'harper_numbering',
    'order_bandwidth',
    'vertex_to_code',
    'OrthantDecomposition',
    'decompose',
]
