"""
Konstruksjonspakke for HammingBand.
"""

from .builder import ArrangementBuilder, ConstructionResult

__all__ = [
    'ArrangementBuilder',
    'ConstructionResult',
]
