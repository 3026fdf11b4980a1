# -*- coding: utf-8 -*-

"""
Feiltyper for HammingBand.
"""

from typing import Any, Optional

class HammingBandwidthError(Exception):
    """Felles basisklasse for alle domenefeil."""

class InvalidArgumentError(HammingBandwidthError, ValueError):
    """Ugyldig argument, f.eks. feil paritet eller usorterte dimensjoner."""

class ShapeMismatchError(HammingBandwidthError, ValueError):
    """En linje eller fil passer ikke til formen den brukes med."""

class ArrangementError(HammingBandwidthError, ValueError):
    """Arrangementet er ikke en bijeksjon eller filen er misdannet."""

class ConstructionError(HammingBandwidthError, RuntimeError):
    """En konstruksjonsinvariant holder ikke."""

class BudgetExceededError(HammingBandwidthError, RuntimeError):
    """
    Søket brukte opp nodebudsjettet.

    Attributes:
        best: Beste resultat funnet så langt (øvre skranke), eller None
        nodes (int): Antall besøkte noder
    """

    def __init__(self, message: str, best: Optional[Any] = None, nodes: int = 0):
        super().__init__(message)
        self.best = best
        self.nodes = nodes
