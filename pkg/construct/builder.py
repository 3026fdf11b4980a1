# -*- coding: utf-8 -*-

"""
Konstruksjonsmodul for HammingBand.

Bygger arrangementer med spredning innenfor grensene: eksakte
todimensjonale konstruksjoner, og for d >= 3 en blokkfylling av ortantene
i Harper-rekkefølge.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from arrangement.arrangement import Arrangement, is_monotonic, spread
from arrangement.serialization import arrangement_to_dict
from arrangement.shape import Shape
from bounds.bounds import general_upper_bound, hypercube_bandwidth, lower_bound, lower_bound_2d, upper_bound
from core.exceptions import ConstructionError, InvalidArgumentError
from hypercube.numbering import HypercubeNumbering, align_max_edges_to_dim1, code_to_vertex, harper_numbering
from hypercube.orthants import OrthantDecomposition, decompose

@dataclass(frozen=True)
class ConstructionResult:
    """
    Resultatet av en konstruksjon.

    Attributes:
        arrangement (Arrangement): Det konstruerte arrangementet
        measured_spread (int): Spredning regnet på nytt fra arrangementet
        lower (int): Nedre grense for formen
        upper (int): Øvre grense konstruksjonen er bevist å holde
    """

    arrangement: Arrangement
    measured_spread: int
    lower: int
    upper: int

    @property
    def within_bracket(self) -> bool:
        return self.lower <= self.measured_spread <= self.upper

    def to_dict(self) -> Dict[str, Any]:
        return {
            'arrangement': arrangement_to_dict(self.arrangement),
            'spread': self.measured_spread,
            'lower': self.lower,
            'upper': self.upper,
        }

class ArrangementBuilder:
    """Klasse for konstruksjon av arrangementer i HammingBand."""

    def __init__(self, config: Optional[Dict] = None, max_dimension: int = 20):
        """
        Initialiserer konstruktøren.

        Args:
            config (Dict): 'construction'-delen av konfigurasjonen
            max_dimension (int): Største hyperkubedimensjon
        """
        self.logger = logging.getLogger(__name__)
        self.config = config or {}
        self.verify_bracket = self.config.get('verify_bracket', True)
        self.max_volume = self.config.get('max_volume', 1_000_000)
        self.max_dimension = max_dimension
        self._numberings: Dict[int, HypercubeNumbering] = {}

    def construct(self, shape: Shape) -> ConstructionResult:
        """
        Velger konstruksjon etter dimensjon og paritet til n_1.

        Args:
            shape (Shape): Formen

        Returns:
            ConstructionResult: Arrangement med målt spredning og grenser
        """
        if shape.volume > self.max_volume:
            raise InvalidArgumentError(f"Formen {shape} har volum {shape.volume} over grensen {self.max_volume}")

        if shape.d == 1:
            exact = shape.dims[0] - 1
            return self._finish(shape, np.arange(1, shape.volume + 1), exact, exact)
        if shape.d == 2:
            n1, n2 = shape.dims
            return self.construct_2d_even(n1, n2) if n1 % 2 == 0 else self.construct_2d_odd(n1, n2)
        return self.construct_even(shape) if shape.dims[0] % 2 == 0 else self.construct_odd(shape)

    def construct_2d_even(self, n1: int, n2: int) -> ConstructionResult:
        """
        Optimal konstruksjon for K_{n1} x K_{n2} med partall n1.

        Øvre halvdel fylles kolonne for kolonne før nedre halvdel.

        Args:
            n1 (int): Partall, minste dimensjon
            n2 (int): Største dimensjon

        Returns:
            ConstructionResult: Arrangement med spredning n1(n2+1)/2 - 1
        """
        if n1 % 2:
            raise InvalidArgumentError(f"construct_2d_even krever partall n1, fikk {n1}")
        bound = lower_bound_2d(n1, n2)
        return self._finish(Shape((n1, n2)), self._fill_2d_even(n1, n2), bound, bound)

    def construct_2d_odd(self, n1: int, n2: int) -> ConstructionResult:
        """
        Optimal konstruksjon for K_{n1} x K_{n2} med odde n1.

        Args:
            n1 (int): Odde, minste dimensjon
            n2 (int): Største dimensjon

        Returns:
            ConstructionResult: Arrangement med spredning (n1+1)n2/2 - 1
        """
        if n1 % 2 == 0:
            raise InvalidArgumentError(f"construct_2d_odd krever odde n1, fikk {n1}")
        bound = lower_bound_2d(n1, n2)
        return self._finish(Shape((n1, n2)), self._fill_2d_odd(n1, n2), bound, bound)

    def construct_even(self, shape: Shape) -> ConstructionResult:
        """
        Ortantkonstruksjon for partall n_1.

        Args:
            shape (Shape): Form med d >= 2 og partall n_1

        Returns:
            ConstructionResult: Arrangement innenfor B prod ceil(n_t/2) + n_1/2 - 1
        """
        if shape.d < 2 or shape.dims[0] % 2:
            raise InvalidArgumentError(f"construct_even krever d >= 2 og partall n_1, fikk {shape}")
        upper = upper_bound(shape) if shape.d > 2 else general_upper_bound(shape)
        return self._finish(shape, self._fill_even(shape), lower_bound(shape), upper)

    def construct_odd(self, shape: Shape) -> ConstructionResult:
        """
        Konstruksjon for odde n_1, med det sentrale hyperplanet fylt for seg.

        Args:
            shape (Shape): Form med d >= 2 og odde n_1

        Returns:
            ConstructionResult: Arrangement innenfor upper_bound(shape)
        """
        if shape.d < 2 or shape.dims[0] % 2 == 0:
            raise InvalidArgumentError(f"construct_odd krever d >= 2 og odde n_1, fikk {shape}")
        if shape.d == 2:
            return self.construct_2d_odd(*shape.dims)
        return self._finish(shape, self._fill_odd(shape), lower_bound(shape), upper_bound(shape))

    def _numbering(self, d: int) -> HypercubeNumbering:
        if d not in self._numberings:
            self._numberings[d] = align_max_edges_to_dim1(harper_numbering(d, self.max_dimension))
        return self._numberings[d]

    def _values(self, shape: Shape) -> np.ndarray:
        """Verdimatrisen for en hvilken som helst form, brukt i rekursjonen."""
        if shape.d == 1:
            return np.arange(1, shape.volume + 1, dtype=np.int64)
        if shape.d == 2:
            n1, n2 = shape.dims
            return self._fill_2d_even(n1, n2) if n1 % 2 == 0 else self._fill_2d_odd(n1, n2)
        return self._fill_even(shape) if shape.dims[0] % 2 == 0 else self._fill_odd(shape)

    def _fill_2d_even(self, n1: int, n2: int) -> np.ndarray:
        i1, i2 = np.indices((n1, n2)) + 1
        half = n1 // 2
        top = (i2 - 1) * half + i1
        bottom = n1 * n2 // 2 + (i2 - 1) * half + (i1 - half)
        return np.where(i1 <= half, top, bottom).astype(np.int64)

    def _fill_2d_odd(self, n1: int, n2: int) -> np.ndarray:
        values = np.zeros((n1, n2), dtype=np.int64)
        k = n1 // 2
        middle = k
        left = (n2 + 1) // 2
        top_rows, bottom_rows = range(0, k), range(k + 1, n1)
        left_cols, right_cols = range(0, left), range(left, n2)

        steps = (
            [(r, c) for c in left_cols for r in top_rows],
            [(middle, c) for c in left_cols],
            [(r, c) for c in right_cols for r in top_rows],
            [(r, c) for c in left_cols for r in bottom_rows],
            [(middle, c) for c in right_cols],
            [(r, c) for c in right_cols for r in bottom_rows],
        )
        counter = 0
        for step in steps:
            for cell in step:
                counter += 1
                values[cell] = counter
        return values

    def _fill_orthant(self, values: np.ndarray, decomposition: OrthantDecomposition, code: int, counter: int) -> int:
        bits = code_to_vertex(code, decomposition.shape.d)
        sizes = decomposition.sizes(bits)
        volume = int(np.prod(sizes))
        block = counter + 1 + np.arange(volume, dtype=np.int64)
        values[decomposition.slices(bits)] = block.reshape(sizes, order='F')
        return counter + volume

    def _fill_even(self, shape: Shape) -> np.ndarray:
        numbering = self._numbering(shape.d)
        decomposition = decompose(shape)
        values = np.zeros(shape.dims, dtype=np.int64)
        counter = 0
        for code in numbering.codes:
            counter = self._fill_orthant(values, decomposition, int(code), counter)
        return values

    def _fill_odd(self, shape: Shape) -> np.ndarray:
        """
        Odde n_1: skyggefyllingen beholdes når den holder den øvre grensen,
        ellers brukes den flettede fyllingen.
        """
        values = self._fill_shadow(shape)
        measured = spread(Arrangement(shape, values))
        upper = upper_bound(shape)
        if measured <= upper:
            return values

        interleaved = self._fill_interleaved(shape)
        interleaved_spread = spread(Arrangement(shape, interleaved))
        self.logger.debug(f"Skyggefyllingen for {shape} gir {measured} over {upper}; flettet fylling gir {interleaved_spread}")
        return interleaved if interleaved_spread < measured else values

    def _fill_shadow(self, shape: Shape) -> np.ndarray:
        """
        Skyggen av ortantene til og med u fylles etter u, resten av hyperplanet
        etter v, der (u, v) er den første kanten med størst forskjell.
        """
        numbering = self._numbering(shape.d)
        decomposition = decompose(shape, odd_mode=True)
        u, v, _ = numbering.max_edges()[0]
        u_pos, v_pos = numbering.position(u), numbering.position(v)
        codes = [int(code) for code in numbering.codes]

        sub_values = self._values(Shape(shape.dims[1:]))
        shadow = np.zeros(sub_values.shape, dtype=bool)
        for code in codes[:u_pos + 1]:
            shadow[decomposition.slices(code_to_vertex(code, shape.d))[1:]] = True

        values = np.zeros(shape.dims, dtype=np.int64)
        plane = values[decomposition.central_index - 1]
        counter = 0

        for code in codes[:u_pos + 1]:
            counter = self._fill_orthant(values, decomposition, code, counter)
        counter = self._fill_plane(plane, sub_values, shadow, counter)
        for code in codes[u_pos + 1:v_pos + 1]:
            counter = self._fill_orthant(values, decomposition, code, counter)
        counter = self._fill_plane(plane, sub_values, ~shadow, counter)
        for code in codes[v_pos + 1:]:
            counter = self._fill_orthant(values, decomposition, code, counter)

        self.logger.debug(f"Skyggefylling {shape}: skygge {int(shadow.sum())} av {shadow.size} celler i hyperplanet")
        return values

    def _fill_interleaved(self, shape: Shape) -> np.ndarray:
        """
        Hyperplanet deles i én bit per delortant beta, tatt i den rekkefølgen
        hjørnene (0, beta) har i nummereringen.

        Bit j fylles rett etter ortanten på plass floor(j B_d / B_{d-1}), der
        B_d er båndbredden til K_2^d. Plassen holdes mellom (0, beta) og
        (1, beta), så hver linje langs dimensjon 1 har sin plancelle mellom de
        to ortantcellene, og et vindu på B_d plasser rommer høyst B_{d-1} biter.
        """
        d = shape.d
        numbering = self._numbering(d)
        decomposition = decompose(shape, odd_mode=True)
        codes = [int(code) for code in numbering.codes]
        high_bit = 1 << (d - 1)
        width, sub_width = hypercube_bandwidth(d), hypercube_bandwidth(d - 1)

        slots: Dict[int, List[int]] = {}
        low_codes = [code for code in codes if not code & high_bit]
        for j, code in enumerate(low_codes):
            first = numbering.position(code_to_vertex(code, d))
            second = numbering.position(code_to_vertex(code | high_bit, d))
            slot = min(max(j * width // sub_width, first), second - 1)
            slots.setdefault(slot, []).append(code)

        sub_values = self._values(Shape(shape.dims[1:]))
        values = np.zeros(shape.dims, dtype=np.int64)
        plane = values[decomposition.central_index - 1]
        counter = 0

        for position, code in enumerate(codes):
            counter = self._fill_orthant(values, decomposition, code, counter)
            for low_code in slots.get(position, []):
                mask = np.zeros(sub_values.shape, dtype=bool)
                mask[decomposition.slices(code_to_vertex(low_code, d))[1:]] = True
                counter = self._fill_plane(plane, sub_values, mask, counter)

        return values

    def _fill_plane(self, plane: np.ndarray, sub_values: np.ndarray, mask: np.ndarray, counter: int) -> int:
        """Fyller de maskerte cellene i hyperplanet i rangordenen til delkonstruksjonen."""
        flat = np.flatnonzero(mask.ravel())
        flat = flat[np.argsort(sub_values.ravel()[flat], kind='stable')]
        plane[np.unravel_index(flat, plane.shape)] = counter + 1 + np.arange(flat.size, dtype=np.int64)
        return counter + flat.size

    def _finish(self, shape: Shape, values: np.ndarray, lower: int, upper: int) -> ConstructionResult:
        arrangement = Arrangement(shape, values)
        measured = spread(arrangement)
        result = ConstructionResult(arrangement, measured, lower, upper)

        if not is_monotonic(arrangement):
            self.logger.debug(f"Konstruksjonen for {shape} er ikke monoton")
        if self.verify_bracket and not result.within_bracket:
            self.logger.error(f"Spredning {measured} for {shape} ligger utenfor [{lower}, {upper}]")
            raise ConstructionError(f"Konstruksjonen for {shape} har spredning {measured} utenfor [{lower}, {upper}]")

        self.logger.info(f"Konstruerte {shape}: spredning {measured} i [{lower}, {upper}]")
        return result
