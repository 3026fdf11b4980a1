# -*- coding: utf-8 -*-

"""
Grenseformler for båndbredden til Hamming-grafer.

Todimensjonale grenser er skarpe. For d >= 3 gir nedre grense en
hyperkubeinnbygging og øvre grense er spredningen til konstruksjonen.
"""

import math
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from arrangement.shape import Shape
from core.exceptions import ConstructionError, InvalidArgumentError

logger = logging.getLogger(__name__)

def _exact_half(value: int) -> int:
    if value % 2:
        raise ArithmeticError(f"{value} er ikke delelig med 2")
    return value // 2

def _check_pair(n1: int, n2: int) -> None:
    if not (isinstance(n1, int) and isinstance(n2, int)) or not 2 <= n1 <= n2:
        raise InvalidArgumentError(f"Forventet 2 <= n1 <= n2, fikk ({n1}, {n2})")

def _check_dimension(shape: Shape, minimum: int) -> None:
    if shape.d < minimum or shape.dims[0] < 2:
        raise InvalidArgumentError(f"Formen {shape} må ha minst {minimum} dimensjoner av størrelse >= 2")

def hypercube_bandwidth(d: int) -> int:
    """
    Båndbredden til hyperkuben K_2^d.

    Args:
        d (int): Dimensjon, d >= 1

    Returns:
        int: sum_{t=0}^{d-1} C(t, floor(t/2))
    """
    if not isinstance(d, int) or d < 1:
        raise InvalidArgumentError(f"Hyperkubedimensjonen må være >= 1, fikk {d}")
    return sum(math.comb(t, t // 2) for t in range(d))

def lower_bound_2d(n1: int, n2: int) -> int:
    """
    Eksakt båndbredde for K_{n1} x K_{n2}.

    Args:
        n1 (int): Minste klikkorden
        n2 (int): Største klikkorden

    Returns:
        int: (n1+1)n2/2 - 1 for odde n1, ellers n1(n2+1)/2 - 1
    """
    _check_pair(n1, n2)
    if n1 % 2:
        return _exact_half((n1 + 1) * n2) - 1
    return _exact_half(n1 * (n2 + 1)) - 1

def quadrant_lower_bound_2d(n1: int, n2: int) -> int:
    """
    Den svakere kvadrantgrensen, regnet ved opptelling over celler.

    For hver rad (kolonne) tas minimum over cellene av antall celler som må
    ligge mellom cellens første og siste linjenabo; svaret er største slike
    minimum over rader og kolonner.

    Args:
        n1 (int): Minste klikkorden
        n2 (int): Største klikkorden

    Returns:
        int: max(ceil(n1/2) n2 - 1, n1 ceil(n2/2) - 1)
    """
    _check_pair(n1, n2)

    i1, i2 = np.indices((n1, n2)) + 1
    covered = i1 * (n2 - i2 + 1) + (n1 - i1 + 1) * i2 - 2

    rows = np.arange(1, n1 + 1)
    cols = np.arange(1, n2 + 1)
    by_rows = covered.min(axis=1) - np.maximum(rows - 1, n1 - rows)
    by_cols = covered.min(axis=0) - np.maximum(cols - 1, n2 - cols)
    return int(max(by_rows.max(), by_cols.max()))

def _ceil_half_product(dims: Tuple[int, ...]) -> int:
    return math.prod((n + 1) // 2 for n in dims)

def lower_bound(shape: Shape) -> int:
    """
    Nedre grense for båndbredden.

    Args:
        shape (Shape): Form med d >= 2

    Returns:
        int: Skarp 2D-grense, ellers B(K_2^d) prod floor(n_t/2)
    """
    _check_dimension(shape, 2)
    if shape.d == 2:
        return lower_bound_2d(*shape.dims)
    return general_lower_bound(shape)

def general_lower_bound(shape: Shape) -> int:
    """Hyperkubegrensen B(K_2^d) prod floor(n_t/2), også for d = 2."""
    _check_dimension(shape, 2)
    return hypercube_bandwidth(shape.d) * math.prod(n // 2 for n in shape.dims)

def _sub_upper(dims: Tuple[int, ...]) -> int:
    if len(dims) == 1:
        return dims[0] - 1
    if len(dims) == 2:
        return lower_bound_2d(*dims)
    return upper_bound(Shape(dims))

def _upper(shape: Shape, sub_upper) -> int:
    n1 = shape.dims[0]
    b = hypercube_bandwidth(shape.d)
    if n1 % 2 == 0:
        return b * _ceil_half_product(shape.dims) + _exact_half(n1) - 1
    return sub_upper(shape.dims[1:]) + b * (n1 // 2) * _ceil_half_product(shape.dims[1:])

def upper_bound(shape: Shape) -> int:
    """
    Øvre grense som konstruksjonen oppnår.

    For odde n_1 legges båndbredden til den sentrale (d-1)-dimensjonale
    hyperplanet til hyperkubeleddet; rekursjonen bunner ut i den skarpe
    2D-grensen.

    Args:
        shape (Shape): Form med d >= 2

    Returns:
        int: Øvre grense
    """
    _check_dimension(shape, 2)
    if shape.d == 2:
        return lower_bound_2d(*shape.dims)
    return _upper(shape, _sub_upper)

def general_upper_bound(shape: Shape) -> int:
    """Den generelle øvre formelen, brukt også når d = 2."""
    _check_dimension(shape, 2)
    return _upper(shape, lambda dims: dims[0] - 1 if len(dims) == 1 else general_upper_bound(Shape(dims)))

def bounds_gap(shape: Shape) -> int:
    return upper_bound(shape) - lower_bound(shape)

@dataclass(frozen=True)
class BoundsReport:
    """
    Grenser og eventuell konstruksjonsspredning for én form.

    Attributes:
        shape (Shape): Formen
        lower (int): Nedre grense
        upper_formula (int): Øvre grense
        construction_spread (Optional[int]): Målt spredning for konstruksjonen
    """

    shape: Shape
    lower: int
    upper_formula: int
    construction_spread: Optional[int] = None

    def __post_init__(self):
        if self.lower > self.upper_formula:
            raise ConstructionError(f"Nedre grense {self.lower} overstiger øvre {self.upper_formula} for {self.shape}")
        if self.construction_spread is not None and not self.lower <= self.construction_spread <= self.upper_formula:
            raise ConstructionError(
                f"Konstruksjonsspredning {self.construction_spread} ligger utenfor "
                f"[{self.lower}, {self.upper_formula}] for {self.shape}"
            )

    @property
    def gap(self) -> int:
        return self.upper_formula - self.lower

    def to_dict(self) -> Dict[str, Any]:
        return {
            'shape': self.shape.to_list(),
            'lower': self.lower,
            'upper': self.upper_formula,
            'construction_spread': self.construction_spread,
        }

def compute_report(shape: Shape, construction_spread: Optional[int] = None) -> BoundsReport:
    """
    Samler grensene for en form.

    Args:
        shape (Shape): Formen, også d = 1
        construction_spread (Optional[int]): Målt spredning, hvis kjent

    Returns:
        BoundsReport: Grenserapport
    """
    if shape.d == 1:
        # En enkelt klikk K_n har båndbredde n - 1
        exact = shape.dims[0] - 1
        return BoundsReport(shape, exact, exact, construction_spread)
    return BoundsReport(shape, lower_bound(shape), upper_bound(shape), construction_spread)
