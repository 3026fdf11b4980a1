"""
Arrangementpakke for HammingBand.
"""

from .shape import Cell, Line, Shape, iter_lines, line_count, normalize_dims
from .arrangement import (
    Arrangement,
    identity_arrangement,
    is_monotonic,
    line_spread,
    monotone_sort,
    random_arrangement,
    reverse_values,
    spread,
)
from .labeling import Labeling, edge_bandwidth, graph_bandwidth, hamming_graph, to_arrangement, to_labeling
from .serialization import (
    arrangement_from_dict,
    arrangement_to_dict,
    dumps,
    from_csv,
    from_json,
    read_arrangement,
    to_csv,
    to_json,
    write_arrangement,
)

__all__ = [
    'Cell',
    'Line',
    'Shape',
    'iter_lines',
    'line_count',
    'normalize_dims',
    'Arrangement',
    'identity_arrangement',
    'is_monotonic',
    'line_spread',
    'monotone_sort',
    'random_arrangement',
    'reverse_values',
    'spread',
    'Labeling',
    'edge_bandwidth',
    'graph_bandwidth',
    'hamming_graph',
    'to_arrangement',
    'to_labeling',
    'arrangement_from_dict',
    'arrangement_to_dict',
    'dumps',
    'from_csv',
    'from_json',
    'read_arrangement',
    'to_csv',
    'to_json',
    'write_arrangement',
]
