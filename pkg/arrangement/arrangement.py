# -*- coding: utf-8 -*-

"""
Arrangementer og spredning for HammingBand.
"""

import logging
from typing import Optional, Sequence, Union

import numpy as np

from arrangement.shape import Cell, Line, Shape
from core.exceptions import ArrangementError, ConstructionError, ShapeMismatchError

logger = logging.getLogger(__name__)

class Arrangement:
    """
    En bijeksjon mellom matrisecellene og {1, ..., V}.

    Verdiene lagres tett i rad-major rekkefølge som en skrivebeskyttet
    numpy-matrise med formens dimensjoner.
    """

    __slots__ = ('shape', '_values', '_inverse')

    def __init__(self, shape: Shape, values: Union[np.ndarray, Sequence]):
        """
        Initialiserer og validerer et arrangement.

        Args:
            shape (Shape): Matrisens form
            values: Nøstet liste, numpy-matrise eller flat liste i rad-major rekkefølge

        Raises:
            ShapeMismatchError: Hvis antall verdier ikke passer formen
            ArrangementError: Hvis verdiene ikke er en bijeksjon på 1..V
        """
        array = np.array(values, dtype=np.int64)
        if array.size != shape.volume:
            raise ShapeMismatchError(f"Forventet {shape.volume} verdier for formen {shape}, fikk {array.size}")
        if array.shape != shape.dims:
            if array.ndim != 1 and tuple(n for n in array.shape if n > 1) != tuple(n for n in shape.dims if n > 1):
                raise ShapeMismatchError(f"Matrisen har form {list(array.shape)}, forventet {shape.to_list()}")
            array = array.reshape(shape.dims)

        flat = array.ravel()
        if not np.array_equal(np.sort(flat), np.arange(1, shape.volume + 1)):
            raise ArrangementError(f"Verdiene er ikke en bijeksjon på 1..{shape.volume}")

        array.flags.writeable = False
        self.shape = shape
        self._values = array
        self._inverse: Optional[np.ndarray] = None

    @property
    def values(self) -> np.ndarray:
        """Skrivebeskyttet verdimatrise."""
        return self._values

    def value_at(self, cell: Cell) -> int:
        """
        Returnerer verdien i en celle.

        Args:
            cell (Cell): 1-baserte koordinater

        Returns:
            int: Verdien A^{-1}(cell)
        """
        if not self.shape.contains(cell):
            raise ShapeMismatchError(f"Cellen {cell} ligger utenfor formen {self.shape}")
        return int(self._values[tuple(c - 1 for c in cell)])

    def cell_of(self, value: int) -> Cell:
        """
        Returnerer cellen som holder en verdi (A(value)).

        Args:
            value (int): Verdi i 1..V

        Returns:
            Cell: 1-baserte koordinater
        """
        if not 1 <= value <= self.shape.volume:
            raise ArrangementError(f"Verdien {value} ligger utenfor 1..{self.shape.volume}")
        if self._inverse is None:
            self._inverse = np.argsort(self._values.ravel(), kind='stable')
        flat_index = int(self._inverse[value - 1])
        return tuple(int(i) + 1 for i in np.unravel_index(flat_index, self.shape.dims))

    def to_nested(self) -> list:
        return self._values.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._values, other._values)

    def __hash__(self) -> int:
        return hash((self.shape, self._values.tobytes()))

    def __repr__(self) -> str:
        return f"Arrangement(shape={self.shape.to_list()}, values={self.to_nested()})"

def spread(a: Arrangement) -> int:
    """
    Største forskjell mellom høyeste og laveste verdi over alle linjer.

    Args:
        a (Arrangement): Arrangementet

    Returns:
        int: Spredningen (0 for en enkeltcelle)
    """
    values = a.values
    best = 0
    for axis in range(values.ndim):
        # Hver reduksjon langs en akse behandler hver linje i den retningen én gang
        span = values.max(axis=axis) - values.min(axis=axis)
        best = max(best, int(span.max()))
    return best

def line_spread(a: Arrangement, line: Line) -> int:
    """
    Spredningen på én linje.

    Args:
        a (Arrangement): Arrangementet
        line (Line): Linjen

    Returns:
        int: Maks minus min av verdiene på linjen
    """
    line.validate(a.shape)
    values = a.values[line.index()]
    return int(values.max() - values.min())

def is_monotonic(a: Arrangement) -> bool:
    """Sann hvis verdiene stiger strengt langs hver linje."""
    values = a.values
    return all(bool(np.all(np.diff(values, axis=axis) > 0)) for axis in range(values.ndim))

def monotone_sort(a: Arrangement) -> Arrangement:
    """
    Sorterer arrangementet monotont, én dimensjon og én linje om gangen.

    Spredningen øker aldri; sortering langs en senere dimensjon bevarer
    monotonien langs de tidligere.

    Args:
        a (Arrangement): Arrangementet

    Returns:
        Arrangement: Monotont arrangement med de samme verdiene
    """
    values = np.array(a.values)
    for axis in range(values.ndim):
        values = np.sort(values, axis=axis)

    result = Arrangement(a.shape, values)
    if not is_monotonic(result):
        raise ConstructionError(f"Sorteringen av {a.shape} ga et ikke-monotont arrangement")

    logger.debug(f"Monoton sortering av {a.shape}: spredning {spread(a)} -> {spread(result)}")
    return result

def reverse_values(a: Arrangement) -> Arrangement:
    """Speiler verdiene, v -> V + 1 - v."""
    return Arrangement(a.shape, a.shape.volume + 1 - a.values)

def identity_arrangement(shape: Shape) -> Arrangement:
    """Rad-major nummerering 1..V."""
    return Arrangement(shape, np.arange(1, shape.volume + 1))

def random_arrangement(shape: Shape, rng: np.random.Generator) -> Arrangement:
    """
    Trekker et tilfeldig arrangement.

    Args:
        shape (Shape): Formen
        rng (np.random.Generator): Tilfeldighetskilde

    Returns:
        Arrangement: Uniformt trukket bijeksjon
    """
    return Arrangement(shape, rng.permutation(shape.volume) + 1)
