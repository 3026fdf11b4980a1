# -*- coding: utf-8 -*-

"""
Merkinger av Hamming-grafer for HammingBand.

En merking av K_{n_1} x ... x K_{n_d} og et arrangement i en
n_1 x ... x n_d matrise er de samme dataene: hjørnene er cellene og hver
klikk er en linje.
"""

import itertools
import logging
from types import MappingProxyType
from typing import Mapping

import networkx as nx
import numpy as np

from arrangement.arrangement import Arrangement
from arrangement.shape import Cell, Shape, iter_lines
from core.exceptions import ArrangementError

logger = logging.getLogger(__name__)

class Labeling:
    """Bijektiv merking f: V -> {1, ..., |V|} av hjørnene i Hamming-grafen."""

    __slots__ = ('shape', '_labels')

    def __init__(self, shape: Shape, labels: Mapping[Cell, int]):
        """
        Initialiserer og validerer en merking.

        Args:
            shape (Shape): Formen til Hamming-grafen
            labels (Mapping[Cell, int]): Merke per hjørne

        Raises:
            ArrangementError: Hvis hjørnene eller merkene ikke stemmer
        """
        labels = {tuple(int(c) for c in cell): int(label) for cell, label in labels.items()}
        if set(labels) != set(shape.cells()):
            raise ArrangementError(f"Merkingen dekker ikke nøyaktig hjørnene i {shape}")
        if sorted(labels.values()) != list(range(1, shape.volume + 1)):
            raise ArrangementError(f"Merkene er ikke en bijeksjon på 1..{shape.volume}")

        self.shape = shape
        self._labels = MappingProxyType(labels)

    @property
    def labels(self) -> Mapping[Cell, int]:
        return self._labels

    def label(self, vertex: Cell) -> int:
        return self._labels[vertex]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return self.shape == other.shape and dict(self._labels) == dict(other._labels)

def to_labeling(a: Arrangement) -> Labeling:
    """
    Oversetter et arrangement til en merking.

    Args:
        a (Arrangement): Arrangementet

    Returns:
        Labeling: Merkingen der cellen er hjørnet og verdien merket
    """
    return Labeling(a.shape, {cell: a.value_at(cell) for cell in a.shape.cells()})

def to_arrangement(lab: Labeling) -> Arrangement:
    """
    Oversetter en merking til et arrangement.

    Args:
        lab (Labeling): Merkingen

    Returns:
        Arrangement: Arrangementet med merkene som verdier
    """
    values = np.zeros(lab.shape.dims, dtype=np.int64)
    for cell, label in lab.labels.items():
        values[tuple(c - 1 for c in cell)] = label
    return Arrangement(lab.shape, values)

def graph_bandwidth(lab: Labeling) -> int:
    """
    Største merkeforskjell over alle kanter i Hamming-grafen.

    Kantene telles implisitt: hvert uordnet par på en linje er en kant.

    Args:
        lab (Labeling): Merkingen

    Returns:
        int: B_f(G)
    """
    best = 0
    for line in iter_lines(lab.shape):
        labels = [lab.label(cell) for cell in line.cells(lab.shape)]
        for u, v in itertools.combinations(labels, 2):
            best = max(best, abs(u - v))
    return best

def hamming_graph(shape: Shape) -> nx.Graph:
    """
    Bygger Hamming-grafen eksplisitt som kartesisk produkt av komplette grafer.

    Args:
        shape (Shape): Klikkordenene

    Returns:
        nx.Graph: Graf med celler (1-baserte tupler) som hjørner
    """
    graph = nx.complete_graph(range(1, shape.dims[0] + 1))
    graph = nx.relabel_nodes(graph, {v: (v,) for v in graph.nodes})
    for n in shape.dims[1:]:
        product = nx.cartesian_product(graph, nx.complete_graph(range(1, n + 1)))
        graph = nx.relabel_nodes(product, {node: node[0] + (node[1],) for node in product.nodes})
    return graph

def edge_bandwidth(graph: nx.Graph, lab: Labeling) -> int:
    """
    B_f over en eksplisitt kantliste.

    Args:
        graph (nx.Graph): Hamming-grafen
        lab (Labeling): Merkingen

    Returns:
        int: Største merkeforskjell over kantene
    """
    return max((abs(lab.label(u) - lab.label(v)) for u, v in graph.edges), default=0)
