# -*- coding: utf-8 -*-

"""
Tester for JSON- og CSV-formatene.
"""

import json

import pytest

from arrangement import Arrangement, Shape, from_csv, from_json, read_arrangement, to_csv, to_json, write_arrangement
from arrangement.serialization import arrangement_from_dict, arrangement_to_dict
from core.exceptions import ArrangementError, InvalidArgumentError

class TestJson:
    def test_layout(self):
        a = Arrangement(Shape((2, 3)), [[1, 2, 3], [4, 5, 6]])
        assert arrangement_to_dict(a) == {'shape': [2, 3], 'order': 'row-major', 'values': [1, 2, 3, 4, 5, 6]}
        assert from_json(to_json(a)) == a

    def test_three_dimensional(self):
        a = Arrangement(Shape((2, 2, 2)), list(range(8, 0, -1)))
        assert from_json(to_json(a)) == a

    @pytest.mark.parametrize("payload", [
        {'shape': [2, 2], 'order': 'row-major', 'values': [1, 3, 2, 2]},
        {'shape': [3, 2], 'order': 'row-major', 'values': [1, 2, 3, 4, 5, 6]},
        {'shape': [2, 2], 'order': 'column-major', 'values': [1, 2, 3, 4]},
        {'shape': [2, 2], 'values': [1, 2, 3]},
        {'shape': [2, 2], 'values': [1, 2, 3, 4.5]},
        {'values': [1, 2, 3, 4]},
        {'shape': [0, 2], 'values': []},
        [1, 2, 3, 4],
    ])
    def test_rejects_malformed(self, payload):
        with pytest.raises(ArrangementError):
            arrangement_from_dict(payload)

    def test_rejects_invalid_json(self):
        with pytest.raises(ArrangementError):
            from_json('{"shape": [2, 2],')

class TestCsv:
    def test_writes_rows(self):
        a = Arrangement(Shape((2, 3)), [[1, 2, 3], [4, 5, 6]])
        assert to_csv(a) == "1,2,3\n4,5,6\n"
        assert from_csv(to_csv(a)) == a

    def test_only_two_dimensional(self):
        with pytest.raises(InvalidArgumentError):
            to_csv(Arrangement(Shape((2, 2, 2)), list(range(1, 9))))

    def test_tall_matrix_is_transposed(self):
        a = from_csv("1,4\n2,5\n3,6\n")
        assert a.shape == Shape((2, 3))
        assert a.to_nested() == [[1, 2, 3], [4, 5, 6]]

    def test_single_row_is_a_clique(self):
        a = from_csv("3,1,2\n")
        assert a.shape == Shape((3,))
        assert a.to_nested() == [3, 1, 2]

    @pytest.mark.parametrize("text", ["", "1,2\n3\n", "1,a\n3,4\n", "1,3\n2,2\n"])
    def test_rejects_malformed(self, text):
        with pytest.raises(ArrangementError):
            from_csv(text)

class TestFiles:
    def test_format_from_suffix(self, tmp_path):
        a = Arrangement(Shape((3, 4)), [[1, 2, 5, 6], [3, 4, 9, 10], [7, 8, 11, 12]])
        for name in ('a.json', 'a.csv'):
            path = write_arrangement(a, tmp_path / name)
            assert read_arrangement(path) == a
        assert json.loads((tmp_path / 'a.json').read_text())['shape'] == [3, 4]
        assert (tmp_path / 'a.csv').read_text().splitlines()[0] == "1,2,5,6"

    def test_explicit_format_wins(self, tmp_path):
        a = Arrangement(Shape((2, 2)), [[1, 2], [3, 4]])
        path = write_arrangement(a, tmp_path / 'matrix.txt', 'csv')
        assert path.read_text() == "1,2\n3,4\n"
        assert read_arrangement(path, 'csv') == a
