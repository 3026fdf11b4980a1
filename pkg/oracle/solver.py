# -*- coding: utf-8 -*-

"""
Eksakt løser for minste spredning.

Monotone arrangementer er nok: monoton sortering øker aldri spredningen.
Søket plasserer verdiene 1, 2, ... i stigende rekkefølge i celler der alle
forgjengere allerede er fylt, og kutter grener med gren-og-grense.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from arrangement.arrangement import Arrangement, is_monotonic, monotone_sort, spread
from arrangement.serialization import arrangement_to_dict
from arrangement.shape import Shape, iter_lines
from core.exceptions import BudgetExceededError, ConstructionError, InvalidArgumentError
from oracle.extensions import count_linear_extensions, hook_length_count, predecessors

@dataclass(frozen=True)
class OracleResult:
    """
    Resultatet av et eksakt søk.

    Attributes:
        shape (Shape): Formen
        optimum (int): Minste spredning
        witness (Arrangement): Monotont arrangement med spredning optimum
        extensions_visited (int): Fullstendige arrangementer søket nådde
        nodes (int): Besøkte søkenoder
        method (str): 'monotone' eller 'unrestricted'
    """

    shape: Shape
    optimum: int
    witness: Arrangement
    extensions_visited: int
    nodes: int = 0
    method: str = 'monotone'

    def __post_init__(self):
        if spread(self.witness) != self.optimum or not is_monotonic(self.witness):
            raise ConstructionError(f"Vitnet for {self.shape} stemmer ikke med optimum {self.optimum}")

    def to_dict(self) -> Dict:
        return {
            'shape': self.shape.to_list(),
            'optimum': self.optimum,
            'witness': arrangement_to_dict(self.witness),
            'extensions_visited': self.extensions_visited,
            'nodes': self.nodes,
            'method': self.method,
        }

class _Search:
    """Tilstand for ett dybde-først-søk."""

    def __init__(self, shape: Shape, budget: int, monotone: bool, progress_interval: int, logger: logging.Logger):
        self.shape = shape
        self.budget = budget
        self.monotone = monotone
        self.progress_interval = progress_interval
        self.logger = logger

        volume = shape.volume
        self.preds = predecessors(shape)
        self.missing = [len(p) for p in self.preds]
        self.successors: List[List[int]] = [[] for _ in range(volume)]
        for cell, cell_preds in enumerate(self.preds):
            for p in cell_preds:
                self.successors[p].append(cell)

        lines = list(iter_lines(shape))
        self.line_size = [shape.dims[line.free_dim - 1] for line in lines]
        self.cell_lines: List[List[int]] = [[] for _ in range(volume)]
        cell_index = {cell: flat for flat, cell in enumerate(shape.cells())}
        for line_id, line in enumerate(lines):
            for cell in line.cells(shape):
                self.cell_lines[cell_index[cell]].append(line_id)

        self.line_first = [0] * len(lines)
        self.line_filled = [0] * len(lines)
        self.values = [0] * volume

        self.best: Optional[int] = None
        self.best_values: Optional[List[int]] = None
        self.nodes = 0
        self.leaves = 0

    def candidates(self) -> List[int]:
        if self.monotone:
            return [c for c in range(self.shape.volume) if not self.values[c] and self.missing[c] == 0]
        return [c for c in range(self.shape.volume) if not self.values[c]]

    def bound(self, value: int, partial: int) -> int:
        """Spredningen enhver fullføring minst får; påbegynte linjer får verdier over value."""
        pending = max(
            (value + 1 - first for first, filled, size in zip(self.line_first, self.line_filled, self.line_size)
             if 0 < filled < size),
            default=0,
        )
        return max(partial, pending)

    def _pruned(self, reachable: int) -> bool:
        """
        Om en gren kan kuttes. Det monotone søket følger også grener som bare
        kan tangere den beste spredningen, så alle optimale utvidelser telles.
        """
        if self.best is None:
            return False
        return reachable > self.best if self.monotone else reachable >= self.best

    def run(self) -> None:
        self._descend(1, 0)

    def _descend(self, value: int, partial: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(f"Søket for {self.shape} brukte opp budsjettet på {self.budget} noder",
                                      nodes=self.nodes)
        if self.progress_interval and self.nodes % self.progress_interval == 0:
            self.logger.info(f"{self.shape}: {self.nodes} noder, beste spredning {self.best}")

        if value > self.shape.volume:
            self.leaves += 1
            if self.best is None or partial < self.best:
                self.best = partial
                self.best_values = list(self.values)
                self.logger.debug(f"{self.shape}: ny beste spredning {partial}")
            return

        for cell in self.candidates():
            lines = self.cell_lines[cell]
            spread_here = partial
            for line_id in lines:
                if self.line_filled[line_id]:
                    spread_here = max(spread_here, value - self.line_first[line_id])
            if self._pruned(spread_here):
                continue

            self._place(cell, value, lines)
            if not self._pruned(self.bound(value, spread_here)):
                self._descend(value + 1, spread_here)
            self._remove(cell, lines)

    def _place(self, cell: int, value: int, lines: List[int]) -> None:
        self.values[cell] = value
        for line_id in lines:
            if not self.line_filled[line_id]:
                self.line_first[line_id] = value
            self.line_filled[line_id] += 1
        for succ in self.successors[cell]:
            self.missing[succ] -= 1

    def _remove(self, cell: int, lines: List[int]) -> None:
        self.values[cell] = 0
        for line_id in lines:
            self.line_filled[line_id] -= 1
            if not self.line_filled[line_id]:
                self.line_first[line_id] = 0
        for succ in self.successors[cell]:
            self.missing[succ] += 1

class ExactSolver:
    """
    Klasse for eksakt søk etter minste spredning i HammingBand.

    Søket bruker ikke grenseformlene, slik at optimum kan sammenlignes med
    dem uten å være avledet av dem.
    """

    def __init__(self, config: Optional[Dict] = None):
        """
        Initialiserer den eksakte løseren.

        Args:
            config (Dict): 'oracle'-delen av konfigurasjonen
        """
        self.logger = logging.getLogger(__name__)
        self.config = config or {}
        self.budget = self.config.get('budget', 10 ** 8)
        self.max_volume = self.config.get('max_volume', 24)
        self.max_unrestricted_volume = self.config.get('max_unrestricted_volume', 9)
        self.max_count = self.config.get('max_count', 2 ** 63 - 1)
        self.progress_interval = self.config.get('progress_interval', 1_000_000)

    def exact_min_spread(self, shape: Shape, budget: Optional[int] = None) -> OracleResult:
        """
        Minste spredning over alle monotone arrangementer.

        Args:
            shape (Shape): Formen
            budget (Optional[int]): Største antall søkenoder

        Returns:
            OracleResult: Optimum med vitne

        Raises:
            InvalidArgumentError: Hvis formen er for stor til å søkes gjennom
            BudgetExceededError: Hvis budsjettet brukes opp; beste funn legges ved
        """
        budget = self.budget if budget is None else budget
        if shape.volume > self.max_volume:
            if shape.d != 2 or hook_length_count(*shape.dims) > budget:
                raise InvalidArgumentError(
                    f"Formen {shape} har volum {shape.volume} over {self.max_volume} og for mange monotone arrangementer"
                )
        return self._search(shape, budget, monotone=True)

    def exact_min_spread_unrestricted(self, shape: Shape, budget: Optional[int] = None) -> OracleResult:
        """
        Minste spredning over alle arrangementer, uten monotonikrav.

        Brukes til å kontrollere at monotone arrangementer er nok.

        Args:
            shape (Shape): Formen, med lite volum
            budget (Optional[int]): Største antall søkenoder

        Returns:
            OracleResult: Optimum med et monotont vitne
        """
        budget = self.budget if budget is None else budget
        if shape.volume > self.max_unrestricted_volume:
            raise InvalidArgumentError(
                f"Ubegrenset søk støttes for volum <= {self.max_unrestricted_volume}, fikk {shape.volume}"
            )
        return self._search(shape, budget, monotone=False)

    def count_linear_extensions(self, shape: Shape) -> int:
        return count_linear_extensions(shape, self.max_volume, self.max_count)

    def _search(self, shape: Shape, budget: int, monotone: bool) -> OracleResult:
        method = 'monotone' if monotone else 'unrestricted'
        self.logger.info(f"Starter {method} søk for {shape} med budsjett {budget}")

        search = _Search(shape, budget, monotone, self.progress_interval, self.logger)
        try:
            search.run()
        except BudgetExceededError as e:
            best = self._result(shape, search, method) if search.best_values is not None else None
            self.logger.error(f"Budsjettet er brukt opp for {shape}; beste spredning så langt {search.best}")
            raise BudgetExceededError(str(e), best=best, nodes=search.nodes) from e

        result = self._result(shape, search, method)
        self.logger.info(f"{shape}: optimum {result.optimum} etter {search.nodes} noder")
        return result

    def _result(self, shape: Shape, search: _Search, method: str) -> OracleResult:
        found = Arrangement(shape, np.array(search.best_values, dtype=np.int64))
        witness = found if is_monotonic(found) else monotone_sort(found)
        return OracleResult(shape, spread(witness), witness, search.leaves, search.nodes, method)
