# -*- coding: utf-8 -*-

"""
Hyperkubenummerering for HammingBand.

Et hjørne i K_2^d er en bitstreng b_1 ... b_d der tegn c tilsvarer
dimensjon c i matrisen. Internt kodes hjørnet som heltallet med b_1 som
mest signifikante bit.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

import numpy as np

from bounds.bounds import hypercube_bandwidth
from core.exceptions import ConstructionError, InvalidArgumentError

logger = logging.getLogger(__name__)

Vertex = Tuple[int, ...]

def _bit_mask(d: int, char: int) -> int:
    """Maske for tegn char (0-basert fra venstre)."""
    return 1 << (d - 1 - char)

def code_to_vertex(code: int, d: int) -> Vertex:
    return tuple((code >> (d - 1 - c)) & 1 for c in range(d))

def vertex_to_code(vertex: Vertex) -> int:
    code = 0
    for bit in vertex:
        code = (code << 1) | int(bit)
    return code

def order_bandwidth(d: int, codes: np.ndarray) -> int:
    """
    Båndbredden til en nummerering gitt som rekkefølge av hjørnekoder.

    Args:
        d (int): Dimensjon
        codes (np.ndarray): Hjørnekodene i nummereringsrekkefølge

    Returns:
        int: Største posisjonsforskjell over alle kanter
    """
    positions = np.empty(1 << d, dtype=np.int64)
    positions[np.asarray(codes, dtype=np.int64)] = np.arange(1 << d)
    all_codes = np.arange(1 << d)
    best = 0
    for char in range(d):
        mask = _bit_mask(d, char)
        low = all_codes[(all_codes & mask) == 0]
        best = max(best, int(np.abs(positions[low | mask] - positions[low]).max()))
    return best

@dataclass(frozen=True)
class HypercubeNumbering:
    """
    En nummerering av hjørnene i K_2^d.

    Attributes:
        d (int): Dimensjon
        codes (np.ndarray): Hjørnekoder i nummereringsrekkefølge (posisjon 0 først)
    """

    d: int
    codes: np.ndarray = field(repr=False)
    _positions: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        codes = np.array(self.codes, dtype=np.int64)
        if codes.shape != (1 << self.d,) or not np.array_equal(np.sort(codes), np.arange(1 << self.d)):
            raise ConstructionError(f"Rekkefølgen er ikke en permutasjon av hjørnene i K_2^{self.d}")
        codes.flags.writeable = False
        positions = np.empty(1 << self.d, dtype=np.int64)
        positions[codes] = np.arange(1 << self.d)
        positions.flags.writeable = False
        object.__setattr__(self, 'codes', codes)
        object.__setattr__(self, '_positions', positions)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HypercubeNumbering):
            return NotImplemented
        return self.d == other.d and np.array_equal(self.codes, other.codes)

    def __hash__(self) -> int:
        return hash((self.d, self.codes.tobytes()))

    def vertices(self) -> Iterator[Vertex]:
        """Hjørnene som bittupler i nummereringsrekkefølge."""
        for code in self.codes:
            yield code_to_vertex(int(code), self.d)

    def bit_strings(self) -> List[str]:
        return [''.join(str(b) for b in vertex) for vertex in self.vertices()]

    def position(self, vertex: Vertex) -> int:
        """0-basert posisjon til et hjørne."""
        return int(self._positions[vertex_to_code(vertex)])

    def bandwidth(self) -> int:
        return order_bandwidth(self.d, self.codes)

    def max_edges(self) -> List[Tuple[Vertex, Vertex, int]]:
        """
        Kantene som oppnår båndbredden.

        Returns:
            List[Tuple[Vertex, Vertex, int]]: (lavere hjørne, høyere hjørne, tegn),
            sortert etter posisjonen til det lavere hjørnet og så bitstrengen
        """
        width = self.bandwidth()
        edges = []
        for code in range(1 << self.d):
            for char in range(self.d):
                mask = _bit_mask(self.d, char)
                if code & mask:
                    continue
                u, v = code, code | mask
                pu, pv = int(self._positions[u]), int(self._positions[v])
                if abs(pu - pv) != width:
                    continue
                if pu > pv:
                    u, v, pu = v, u, pv
                edges.append((pu, code_to_vertex(u, self.d), code_to_vertex(v, self.d), char))
        edges.sort(key=lambda e: (e[0], e[1], e[2]))
        return [(u, v, char) for _, u, v, char in edges]

def harper_numbering(d: int, max_dimension: int = 20) -> HypercubeNumbering:
    """
    Optimal nummerering av K_2^d.

    Hjørnene ordnes etter antall enere; innenfor samme vekt kommer det
    hjørnet først som har 1 i den siste posisjonen der de to er ulike.

    Args:
        d (int): Dimensjon
        max_dimension (int): Øvre grense for d

    Returns:
        HypercubeNumbering: Nummerering med båndbredde B(K_2^d)
    """
    if not isinstance(d, int) or not 1 <= d <= max_dimension:
        raise InvalidArgumentError(f"Hyperkubedimensjonen må ligge i 1..{max_dimension}, fikk {d}")

    codes = np.arange(1 << d, dtype=np.int64)
    bits = [(codes >> (d - 1 - c)) & 1 for c in range(d)]
    weights = sum(bits)
    # Speilvendt kode: siste tegn blir mest signifikant
    mirrored = sum(bit << c for c, bit in enumerate(bits))
    order = codes[np.lexsort((-mirrored, weights))]

    numbering = HypercubeNumbering(d, order)
    achieved = numbering.bandwidth()
    if achieved != hypercube_bandwidth(d):
        raise ConstructionError(f"Nummereringen av K_2^{d} har båndbredde {achieved}, forventet {hypercube_bandwidth(d)}")

    logger.debug(f"Harper-nummerering for d={d} med båndbredde {achieved}")
    return numbering

def swap_characters(numbering: HypercubeNumbering, first: int, second: int) -> HypercubeNumbering:
    """Bytter to tegn i alle hjørner; posisjonene beholdes."""
    if first == second:
        return numbering
    d = numbering.d
    m1, m2 = _bit_mask(d, first), _bit_mask(d, second)
    codes = numbering.codes
    b1 = (codes & m1) != 0
    b2 = (codes & m2) != 0
    swapped = (codes & ~(m1 | m2)) | np.where(b2, m1, 0) | np.where(b1, m2, 0)
    return HypercubeNumbering(d, swapped)

def align_max_edges_to_dim1(numbering: HypercubeNumbering) -> HypercubeNumbering:
    """
    Sørger for at alle kanter med størst forskjell går langs dimensjon 1.

    Args:
        numbering (HypercubeNumbering): Nummereringen

    Returns:
        HypercubeNumbering: Samme nummerering med tegn omdøpt om nødvendig

    Raises:
        ConstructionError: Hvis de største kantene fordeler seg på flere tegn
    """
    if numbering.d == 1:
        return numbering

    chars = sorted({char for _, _, char in numbering.max_edges()})
    if len(chars) != 1:
        raise ConstructionError(f"Kantene med størst forskjell går langs flere tegn: {[c + 1 for c in chars]}")

    aligned = swap_characters(numbering, 0, chars[0])
    if chars[0] != 0:
        logger.debug(f"Tegn 1 og {chars[0] + 1} byttet for d={numbering.d}")
    return aligned

def exhaustive_bandwidth(d: int) -> int:
    """
    Minste båndbredde over alle nummereringer av K_2^d, ved fullt søk.

    Args:
        d (int): Dimensjon, høyst 3

    Returns:
        int: Minste båndbredde
    """
    if not 1 <= d <= 3:
        raise InvalidArgumentError(f"Fullt søk støttes bare for d <= 3, fikk {d}")
    size = 1 << d
    edges: List[Tuple[int, int]] = [
        (code, code | _bit_mask(d, char))
        for code in range(size)
        for char in range(d)
        if not code & _bit_mask(d, char)
    ]
    best = size
    for order in itertools.permutations(range(size)):
        positions: Dict[int, int] = {code: i for i, code in enumerate(order)}
        best = min(best, max(abs(positions[u] - positions[v]) for u, v in edges))
    return best
