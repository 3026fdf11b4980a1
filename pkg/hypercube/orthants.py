# -*- coding: utf-8 -*-

"""
Ortantoppdeling av matrisen for HammingBand.

Hver dimensjon deles i en lav og en høy halvdel. Bit c i en ortant
velger halvdelen for dimensjon c. I odde modus holdes det sentrale
hyperplanet i_1 = ceil(n_1/2) utenfor.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import numpy as np

from arrangement.shape import Cell, Shape
from core.exceptions import ConstructionError, InvalidArgumentError

logger = logging.getLogger(__name__)

Bits = Tuple[int, ...]

@dataclass(frozen=True)
class OrthantDecomposition:
    """
    Oppdeling av en form i 2^d ortanter.

    Attributes:
        shape (Shape): Formen
        odd_mode (bool): Om det sentrale hyperplanet er holdt utenfor
        halves (tuple): Per dimensjon, (lav, høy) som 1-baserte range-objekter
    """

    shape: Shape
    odd_mode: bool
    halves: Tuple[Tuple[range, range], ...]

    @property
    def central_index(self) -> Optional[int]:
        """1-basert indeks til det sentrale hyperplanet, eller None."""
        return (self.shape.dims[0] + 1) // 2 if self.odd_mode else None

    def ranges(self, bits: Bits) -> Tuple[range, ...]:
        return tuple(self.halves[t][bit] for t, bit in enumerate(bits))

    def sizes(self, bits: Bits) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.ranges(bits))

    def volume(self, bits: Bits) -> int:
        return int(np.prod(self.sizes(bits)))

    def slices(self, bits: Bits) -> Tuple[slice, ...]:
        """0-baserte numpy-snitt for ortanten."""
        return tuple(slice(r.start - 1, r.stop - 1) for r in self.ranges(bits))

    def cells(self, bits: Bits) -> Iterator[Cell]:
        """Cellene i ortanten i telleverkrekkefølge, dimensjon 1 raskest."""
        ranges = self.ranges(bits)
        for flat in range(self.volume(bits)):
            index = np.unravel_index(flat, self.sizes(bits), order='F')
            yield tuple(r[int(i)] for r, i in zip(ranges, index))

def decompose(shape: Shape, odd_mode: bool = False) -> OrthantDecomposition:
    """
    Deler formen i ortanter.

    Args:
        shape (Shape): Form der alle dimensjoner er minst 2
        odd_mode (bool): Hold ut hyperplanet i_1 = ceil(n_1/2); krever odde n_1

    Returns:
        OrthantDecomposition: Oppdelingen
    """
    if shape.dims[0] < 2:
        raise InvalidArgumentError(f"Formen {shape} kan ikke deles i ortanter")
    if odd_mode and shape.dims[0] % 2 == 0:
        raise InvalidArgumentError(f"Odde modus krever odde n_1, fikk {shape}")

    halves = []
    for t, n in enumerate(shape.dims):
        if odd_mode and t == 0:
            middle = (n + 1) // 2
            halves.append((range(1, middle), range(middle + 1, n + 1)))
        else:
            halves.append((range(1, n // 2 + 1), range(n // 2 + 1, n + 1)))
    decomposition = OrthantDecomposition(shape, odd_mode, tuple(halves))

    coverage = np.zeros(shape.dims, dtype=np.int64)
    for code in range(1 << shape.d):
        bits = tuple((code >> (shape.d - 1 - c)) & 1 for c in range(shape.d))
        coverage[decomposition.slices(bits)] += 1
    expected = np.ones(shape.dims, dtype=np.int64)
    if odd_mode:
        expected[decomposition.central_index - 1] = 0
    if not np.array_equal(coverage, expected):
        raise ConstructionError(f"Ortantene dekker ikke formen {shape} nøyaktig én gang")

    return decomposition
