# -*- coding: utf-8 -*-

"""
Tester for grenseformlene.
"""

import math
import itertools

import pytest

from arrangement import Shape
from bounds import (
    BoundsReport,
    bounds_gap,
    compute_report,
    general_lower_bound,
    general_upper_bound,
    hypercube_bandwidth,
    lower_bound,
    lower_bound_2d,
    quadrant_lower_bound_2d,
    upper_bound,
)
from core.exceptions import ConstructionError, InvalidArgumentError

class TestHypercubeBandwidth:
    @pytest.mark.parametrize("d, expected", [(1, 1), (2, 2), (3, 4), (4, 7), (5, 13), (6, 23)])
    def test_values(self, d, expected):
        assert hypercube_bandwidth(d) == expected

    def test_rejects_zero(self):
        with pytest.raises(InvalidArgumentError):
            hypercube_bandwidth(0)

class TestTwoDimensional:
    @pytest.mark.parametrize("n1, n2, expected", [(2, 2, 2), (3, 4, 7), (2, 3, 3), (4, 4, 9), (3, 3, 5), (2, 11, 11)])
    def test_lower_bound(self, n1, n2, expected):
        assert lower_bound_2d(n1, n2) == expected

    @pytest.mark.parametrize("n1, n2", [(3, 2), (1, 4), (0, 0)])
    def test_requires_sorted_pair(self, n1, n2):
        with pytest.raises(InvalidArgumentError):
            lower_bound_2d(n1, n2)

    @pytest.mark.parametrize("n1, n2, expected", [(3, 4, 7), (4, 4, 7), (2, 2, 1)])
    def test_quadrant_bound(self, n1, n2, expected):
        assert quadrant_lower_bound_2d(n1, n2) == expected

    def test_quadrant_bound_closed_form(self):
        for n1 in range(2, 61):
            for n2 in range(n1, 61):
                closed = max(math.ceil(n1 / 2) * n2 - 1, n1 * math.ceil(n2 / 2) - 1)
                assert quadrant_lower_bound_2d(n1, n2) == closed

    def test_even_sharpening(self):
        for n1 in range(2, 41, 2):
            for n2 in range(n1, 41):
                assert lower_bound_2d(n1, n2) >= quadrant_lower_bound_2d(n1, n2)
                if n2 % 2 == 0:
                    assert lower_bound_2d(n1, n2) == quadrant_lower_bound_2d(n1, n2) + n1 // 2

class TestHigherDimensional:
    @pytest.mark.parametrize("dims, expected", [((2, 2, 2), 4), ((3, 3, 3), 4), ((2, 4, 6), 24), ((4, 4, 4), 32)])
    def test_lower_bound(self, dims, expected):
        assert lower_bound(Shape(dims)) == expected

    @pytest.mark.parametrize("dims, expected", [
        ((2, 2, 2), 4),
        ((4, 4, 4), 33),
        ((3, 3, 3), 21),
        ((3, 4, 4), 25),
        ((2, 4, 6), 24),
    ])
    def test_upper_bound(self, dims, expected):
        assert upper_bound(Shape(dims)) == expected

    def test_two_dimensional_bounds_coincide(self):
        for n1 in range(2, 30):
            for n2 in range(n1, 30):
                shape = Shape((n1, n2))
                assert lower_bound(shape) == upper_bound(shape) == lower_bound_2d(n1, n2)
                assert bounds_gap(shape) == 0

    def test_bracket_is_ordered(self):
        for d in (3, 4):
            for dims in itertools.combinations_with_replacement(range(2, 9), d):
                shape = Shape(dims)
                assert lower_bound(shape) <= upper_bound(shape)

    def test_all_even_gap(self):
        for d in (2, 3, 4):
            for dims in itertools.combinations_with_replacement(range(2, 13, 2), d):
                shape = Shape(dims)
                assert general_upper_bound(shape) - general_lower_bound(shape) == dims[0] // 2 - 1
                if d >= 3:
                    assert bounds_gap(shape) == dims[0] // 2 - 1

    def test_general_form_at_two_dimensions(self):
        shape = Shape((2, 3))
        assert general_upper_bound(shape) == 4
        assert upper_bound(shape) == 3
        assert general_lower_bound(shape) == 2

    def test_rejects_single_dimension(self):
        with pytest.raises(InvalidArgumentError):
            lower_bound(Shape((5,)))
        with pytest.raises(InvalidArgumentError):
            upper_bound(Shape((1,)))

class TestReport:
    def test_layout(self):
        report = compute_report(Shape((3, 4)), 7)
        assert report.to_dict() == {'shape': [3, 4], 'lower': 7, 'upper': 7, 'construction_spread': 7}

    def test_single_clique(self):
        assert compute_report(Shape((5,))).to_dict() == {'shape': [5], 'lower': 4, 'upper': 4, 'construction_spread': None}
        assert compute_report(Shape((1,))).lower == 0

    def test_spread_outside_bracket(self):
        with pytest.raises(ConstructionError):
            BoundsReport(Shape((3, 4)), 7, 7, 8)
