# -*- coding: utf-8 -*-

"""
Former, celler og linjer for HammingBand.

En form (n_1, ..., n_d) beskriver både Hamming-grafen K_{n_1} x ... x K_{n_d}
og matrisen som tallene arrangeres i. Koordinater er 1-baserte utad.
"""

import math
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

import numpy as np

from core.exceptions import InvalidArgumentError, ShapeMismatchError

logger = logging.getLogger(__name__)

Cell = Tuple[int, ...]

_MAX_VOLUME = int(np.iinfo(np.int64).max)

@dataclass(frozen=True)
class Shape:
    """Sorterte klikkordener n_1 <= ... <= n_d, normalisert ved konstruksjon."""

    dims: Tuple[int, ...]

    def __post_init__(self):
        raw = tuple(int(n) for n in self.dims)
        if not raw:
            raise InvalidArgumentError("Formen må ha minst én dimensjon")
        if any(n < 1 for n in raw):
            raise InvalidArgumentError(f"Dimensjonene må være positive heltall: {list(raw)}")

        # K_1-faktorer gir ingen kanter; en ren enhetsform blir enkeltcellen (1,)
        dims = tuple(sorted(n for n in raw if n > 1)) or (1,)

        volume = 1
        for n in dims:
            volume *= n
            if volume > _MAX_VOLUME:
                raise InvalidArgumentError(f"Volumet til formen {list(dims)} er for stort")

        object.__setattr__(self, 'dims', dims)

    @property
    def d(self) -> int:
        """Antall dimensjoner."""
        return len(self.dims)

    @property
    def volume(self) -> int:
        """Antall celler V = prod n_t."""
        return math.prod(self.dims)

    def cells(self) -> Iterator[Cell]:
        """Alle celler i rad-major rekkefølge (siste koordinat raskest)."""
        return itertools.product(*(range(1, n + 1) for n in self.dims))

    def contains(self, cell: Cell) -> bool:
        """
        Sjekker om en celle hører til formen.

        Args:
            cell (Cell): 1-baserte koordinater

        Returns:
            bool: True hvis cellen ligger i matrisen
        """
        return len(cell) == self.d and all(1 <= c <= n for c, n in zip(cell, self.dims))

    def to_list(self):
        return list(self.dims)

    def __str__(self) -> str:
        return 'x'.join(str(n) for n in self.dims)

@dataclass(frozen=True)
class Line:
    """
    En full endimensjonal delmatrise.

    Attributes:
        free_dim (int): Den frie dimensjonen, 1-basert
        fixed (tuple): Koordinatene til alle andre dimensjoner, i rekkefølge
    """

    free_dim: int
    fixed: Tuple[int, ...]

    def validate(self, shape: Shape) -> None:
        """
        Kontrollerer at linjen hører til formen.

        Args:
            shape (Shape): Formen linjen brukes med

        Raises:
            ShapeMismatchError: Hvis linjen ikke passer
        """
        if not 1 <= self.free_dim <= shape.d or len(self.fixed) != shape.d - 1:
            raise ShapeMismatchError(f"Linjen {self} passer ikke til formen {shape}")
        others = shape.dims[:self.free_dim - 1] + shape.dims[self.free_dim:]
        if any(not 1 <= c <= n for c, n in zip(self.fixed, others)):
            raise ShapeMismatchError(f"Linjen {self} ligger utenfor formen {shape}")

    def index(self) -> tuple:
        """0-basert numpy-indeks der den frie dimensjonen er et fullt snitt."""
        fixed = [c - 1 for c in self.fixed]
        fixed.insert(self.free_dim - 1, slice(None))
        return tuple(fixed)

    def cells(self, shape: Shape) -> Iterator[Cell]:
        """Cellene på linjen i stigende fri koordinat."""
        for k in range(1, shape.dims[self.free_dim - 1] + 1):
            cell = list(self.fixed)
            cell.insert(self.free_dim - 1, k)
            yield tuple(cell)

def iter_lines(shape: Shape) -> Iterator[Line]:
    """
    Går gjennom alle linjer i formen nøyaktig én gang.

    Args:
        shape (Shape): Formen

    Yields:
        Line: Linjer sortert etter fri dimensjon og faste koordinater
    """
    for free_dim in range(1, shape.d + 1):
        others = shape.dims[:free_dim - 1] + shape.dims[free_dim:]
        for fixed in itertools.product(*(range(1, n + 1) for n in others)):
            yield Line(free_dim, fixed)

def line_count(shape: Shape) -> int:
    """Antall linjer, sum_j V / n_j."""
    return sum(shape.volume // n for n in shape.dims)

def normalize_dims(dims: Iterable[int]) -> Shape:
    """
    Lager en form fra brukerens dimensjoner og melder fra om omsortering.

    Args:
        dims (Iterable[int]): Dimensjoner slik de ble oppgitt

    Returns:
        Shape: Normalisert form
    """
    raw = [int(n) for n in dims]
    shape = Shape(tuple(raw))
    if list(shape.dims) != raw:
        logger.warning(f"Formen {raw} ble normalisert til {shape.to_list()} (sortert, enhetsdimensjoner fjernet)")
    return shape
