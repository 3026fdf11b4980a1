# -*- coding: utf-8 -*-

"""
Felles fixtures for HammingBand-testene.
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.config import get_default_config
from construct.builder import ArrangementBuilder
from oracle.solver import ExactSolver

@pytest.fixture
def config():
    return get_default_config()

@pytest.fixture
def builder(config):
    return ArrangementBuilder(config['construction'], config['hypercube']['max_dimension'])

@pytest.fixture
def solver(config):
    return ExactSolver(config['oracle'])

@pytest.fixture
def rng():
    return np.random.default_rng(20240517)
