# -*- coding: utf-8 -*-

"""
Tester for konstruksjonene.
"""

import itertools

import pytest

from arrangement import Arrangement, Shape, is_monotonic, spread
from bounds import hypercube_bandwidth, lower_bound, lower_bound_2d, upper_bound
from construct import ArrangementBuilder
from core.exceptions import ConstructionError, InvalidArgumentError

class TestTwoDimensional:
    """Eksakte konstruksjoner for K_{n1} x K_{n2}."""

    def test_even_example(self, builder):
        result = builder.construct_2d_even(2, 3)
        assert result.arrangement.to_nested() == [[1, 2, 3], [4, 5, 6]]
        assert result.measured_spread == 3

    def test_two_by_eleven(self, builder):
        result = builder.construct_2d_even(2, 11)
        assert result.arrangement.to_nested() == [list(range(1, 12)), list(range(12, 23))]
        assert result.measured_spread == 11

    def test_four_by_four(self, builder):
        assert builder.construct_2d_even(4, 4).measured_spread == 9

    def test_odd_example(self, builder):
        result = builder.construct_2d_odd(3, 4)
        assert result.arrangement.to_nested() == [[1, 2, 5, 6], [3, 4, 9, 10], [7, 8, 11, 12]]
        assert result.measured_spread == 7

    def test_odd_square(self, builder):
        result = builder.construct_2d_odd(3, 3)
        assert result.arrangement.to_nested() == [[1, 2, 5], [3, 4, 8], [6, 7, 9]]
        assert result.measured_spread == 5

    def test_parity_is_checked(self, builder):
        with pytest.raises(InvalidArgumentError):
            builder.construct_2d_even(3, 4)
        with pytest.raises(InvalidArgumentError):
            builder.construct_2d_odd(2, 4)

    def test_sweep_is_optimal(self, builder):
        for n1 in range(2, 41):
            for n2 in range(n1, 41):
                result = builder.construct(Shape((n1, n2)))
                assert result.measured_spread == lower_bound_2d(n1, n2)
                assert is_monotonic(result.arrangement)

class TestHigherDimensional:
    def test_cube(self, builder):
        result = builder.construct_even(Shape((2, 2, 2)))
        assert result.measured_spread == 4
        assert result.arrangement.values.ravel().tolist() == [1, 2, 3, 5, 4, 6, 7, 8]

    def test_two_by_two_via_orthants(self, builder):
        result = builder.construct_even(Shape((2, 2)))
        assert result.measured_spread == 2
        assert result.lower == result.upper == 2

    @pytest.mark.parametrize("d", range(1, 7))
    def test_hypercube_matches_bandwidth(self, builder, d):
        assert builder.construct(Shape((2,) * d)).measured_spread == hypercube_bandwidth(d)

    def test_four_cube(self, builder):
        result = builder.construct(Shape((4, 4, 4)))
        assert 32 <= result.measured_spread <= 33

    def test_odd_cube(self, builder):
        result = builder.construct_odd(Shape((3, 3, 3)))
        central = result.arrangement.values[1]
        assert central.tolist() == [[4, 5, 6], [16, 17, 20], [18, 19, 21]]
        assert result.measured_spread == 15
        assert 4 <= result.measured_spread <= 21

    def test_odd_with_even_tail(self, builder):
        result = builder.construct_odd(Shape((3, 4, 4)))
        assert result.upper == 25
        assert result.measured_spread <= 25

    def test_odd_delegates_in_two_dimensions(self, builder):
        assert builder.construct_odd(Shape((3, 3))).measured_spread == 5

    def test_parity_is_checked(self, builder):
        with pytest.raises(InvalidArgumentError):
            builder.construct_even(Shape((3, 4, 4)))
        with pytest.raises(InvalidArgumentError):
            builder.construct_odd(Shape((2, 3, 3)))

    @pytest.mark.parametrize("d", [3, 4])
    def test_bracket_for_every_small_shape(self, builder, d):
        for dims in itertools.combinations_with_replacement(range(2, 7), d):
            shape = Shape(dims)
            result = builder.construct(shape)
            assert lower_bound(shape) <= result.measured_spread <= upper_bound(shape)

    def test_three_dimensional_constructions_are_monotone(self, builder):
        for dims in itertools.combinations_with_replacement(range(2, 7), 3):
            assert is_monotonic(builder.construct(Shape(dims)).arrangement)

class TestOddInterleaved:
    """Odde n_1 med d = 4, der hyperplanet flettes inn bit for bit."""

    @pytest.mark.parametrize("dims", [(3, 4, 4, 4), (3, 4, 4, 6), (3, 4, 6, 6), (3, 5, 6, 6), (3, 6, 6, 6), (5, 6, 6, 6)])
    def test_within_upper_bound(self, builder, dims):
        shape = Shape(dims)
        result = builder.construct_odd(shape)
        assert lower_bound(shape) <= result.measured_spread <= upper_bound(shape)

    def test_even_tail_stays_within_bound(self, builder):
        shape = Shape((3, 4, 4, 4))
        values = builder._fill_interleaved(shape)
        assert spread(Arrangement(shape, values)) <= 89
        assert builder.construct_odd(shape).upper == 89

    def test_plane_lies_between_the_halves(self, builder):
        values = builder._fill_interleaved(Shape((3, 4, 4, 4)))
        assert (values[0] < values[1]).all()
        assert (values[1] < values[2]).all()

    def test_plane_chunks_follow_the_numbering(self, builder):
        values = builder._fill_interleaved(Shape((3, 4, 4, 4)))
        # Første delortant ligger rett etter ortant 0000, neste etter 0001
        assert sorted(values[1, :2, :2, :2].ravel().tolist()) == list(range(9, 17))
        assert sorted(values[1, :2, :2, 2:].ravel().tolist()) == list(range(25, 33))

    def test_shadow_fill_is_kept_when_it_fits(self, builder):
        shape = Shape((3, 3, 3))
        assert (builder._fill_odd(shape) == builder._fill_shadow(shape)).all()

    def test_shadow_fill_alone_breaks_the_bound(self, builder):
        shape = Shape((3, 4, 4, 4))
        assert spread(Arrangement(shape, builder._fill_shadow(shape))) > upper_bound(shape)

class TestDispatch:
    def test_single_clique(self, builder):
        result = builder.construct(Shape((5,)))
        assert result.arrangement.to_nested() == [1, 2, 3, 4, 5]
        assert result.measured_spread == 4

    def test_single_cell(self, builder):
        assert builder.construct(Shape((1, 1))).measured_spread == 0

    def test_two_dimensional(self, builder):
        assert builder.construct(Shape((3, 2))).arrangement.to_nested() == [[1, 2, 3], [4, 5, 6]]

    def test_measured_spread_is_recomputed(self, builder):
        for dims in [(2, 3), (3, 5), (2, 2, 3), (3, 3, 4)]:
            result = builder.construct(Shape(dims))
            assert result.measured_spread == spread(result.arrangement)

    def test_volume_limit(self):
        small = ArrangementBuilder({'max_volume': 10})
        with pytest.raises(InvalidArgumentError):
            small.construct(Shape((4, 4)))

    def test_result_layout(self, builder):
        payload = builder.construct(Shape((2, 3))).to_dict()
        assert payload == {
            'arrangement': {'shape': [2, 3], 'order': 'row-major', 'values': [1, 2, 3, 4, 5, 6]},
            'spread': 3,
            'lower': 3,
            'upper': 3,
        }

    def test_bracket_violation_raises(self, builder, monkeypatch):
        monkeypatch.setattr(builder, '_fill_2d_even', lambda n1, n2: [[1, 3, 5], [2, 4, 6]][::-1])
        with pytest.raises(ConstructionError):
            builder.construct_2d_even(2, 3)
