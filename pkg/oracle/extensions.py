# -*- coding: utf-8 -*-

"""
Telling av monotone arrangementer (lineære utvidelser av produktordenen).
"""

import math
import logging
from functools import lru_cache
from typing import List, Tuple

from arrangement.shape import Shape
from core.exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)

def predecessors(shape: Shape) -> List[Tuple[int, ...]]:
    """
    Direkte forgjengere for hver celle, som flate rad-major indekser.

    Args:
        shape (Shape): Formen

    Returns:
        List[Tuple[int, ...]]: For hver celle, cellene ett steg lavere i én koordinat
    """
    strides = []
    stride = 1
    for n in reversed(shape.dims):
        strides.append(stride)
        stride *= n
    strides.reverse()

    result = []
    for flat, cell in enumerate(shape.cells()):
        result.append(tuple(flat - strides[t] for t, c in enumerate(cell) if c > 1))
    return result

def count_linear_extensions(shape: Shape, max_volume: int = 24, max_count: int = 2 ** 63 - 1) -> int:
    """
    Antall monotone arrangementer av formen.

    Dynamisk programmering over nedover-lukkede mengder av fylte celler.

    Args:
        shape (Shape): Formen
        max_volume (int): Største tillatte volum
        max_count (int): Metningsverdi for svaret

    Returns:
        int: Antall lineære utvidelser, høyst max_count
    """
    if shape.volume > max_volume:
        raise InvalidArgumentError(f"Telling støttes for volum <= {max_volume}, fikk {shape.volume}")

    preds = predecessors(shape)
    masks = [sum(1 << p for p in cell_preds) for cell_preds in preds]
    full = (1 << shape.volume) - 1

    @lru_cache(maxsize=None)
    def count(filled: int) -> int:
        if filled == full:
            return 1
        total = 0
        for cell, needed in enumerate(masks):
            if not filled >> cell & 1 and filled & needed == needed:
                total += count(filled | 1 << cell)
        return total

    total = count(0)
    logger.debug(f"{shape}: {total} lineære utvidelser, {count.cache_info().currsize} tilstander")
    if total > max_count:
        logger.warning(f"Antallet for {shape} mettes ved {max_count}")
        return max_count
    return total

def hook_length_count(n1: int, n2: int) -> int:
    """
    Antall standard Young-tablåer av rektangulær form n1 x n2.

    Args:
        n1 (int): Antall rader
        n2 (int): Antall kolonner

    Returns:
        int: (n1 n2)! / prod hook(i, j)
    """
    if n1 < 1 or n2 < 1:
        raise InvalidArgumentError(f"Tablåformen må være positiv, fikk ({n1}, {n2})")
    hooks = math.prod((n1 - i) + (n2 - j) - 1 for i in range(n1) for j in range(n2))
    return math.factorial(n1 * n2) // hooks
