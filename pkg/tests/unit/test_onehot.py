"""Unit tests for one-hot matrices and their CSV form."""

import numpy as np
import pytest

from src.harness import OneHotError, from_one_hot, to_one_hot
from src.harness.onehot import (
    alphabet_sidecar_path,
    one_hot_csv,
    read_one_hot_csv,
    write_alphabet_sidecar,
)


@pytest.mark.unit
class TestOneHot:
    def test_shape_and_padding(self):
        matrix = to_one_hot([1, 2], 4, 5)
        assert matrix.shape == (4, 5)
        assert matrix.dtype == np.int8
        assert matrix.sum(axis=1).tolist() == [1, 1, 1, 1]
        assert matrix[:, 0].tolist() == [0, 0, 1, 1]

    def test_inverse(self, symbols, chem):
        string = symbols("[C][Branch][C][F][C][Ring][O]")
        assert from_one_hot(to_one_hot(string, 12, chem.size)) == string

    def test_empty_string(self):
        matrix = to_one_hot([], 3, 4)
        assert from_one_hot(matrix) == []

    def test_trailing_nops_read_as_padding(self):
        assert from_one_hot(to_one_hot([1, 0], 3, 4)) == [1]

    def test_too_long(self):
        with pytest.raises(OneHotError, match="exceeds max length"):
            to_one_hot([1, 2, 3], 2, 4)

    def test_index_outside_alphabet(self):
        with pytest.raises(OneHotError):
            to_one_hot([7], 2, 4)

    @pytest.mark.parametrize(
        "matrix",
        [
            np.array([1, 0, 0]),
            np.array([[1, 1, 0]]),
            np.array([[0, 0, 0]]),
            np.array([[2, 0, 0]]),
        ],
    )
    def test_malformed_matrix(self, matrix):
        with pytest.raises(OneHotError):
            from_one_hot(matrix)


@pytest.mark.unit
class TestOneHotCsv:
    def test_csv_rows(self):
        text = one_hot_csv(to_one_hot([2], 2, 3))
        assert text.splitlines() == ["0,0,1", "1,0,0"]

    def test_read_back(self):
        first, second = to_one_hot([1, 2], 3, 4), to_one_hot([3], 3, 4)
        matrices = read_one_hot_csv(one_hot_csv(first) + one_hot_csv(second), 3)
        assert len(matrices) == 2
        assert from_one_hot(matrices[0]) == [1, 2]
        assert from_one_hot(matrices[1]) == [3]

    def test_rows_must_split_evenly(self):
        with pytest.raises(OneHotError, match="do not split"):
            read_one_hot_csv(one_hot_csv(to_one_hot([1], 3, 4)), 2)

    def test_alphabet_sidecar(self, temp_dir, chem):
        target = temp_dir / "strings.csv"
        sidecar = write_alphabet_sidecar(target, chem)
        assert sidecar == alphabet_sidecar_path(target)
        assert sidecar.name == "strings.csv.alphabet.txt"
        lines = sidecar.read_text().splitlines()
        assert lines[0] == "[nop]"
        assert lines == [s.name for s in chem.alphabet]
