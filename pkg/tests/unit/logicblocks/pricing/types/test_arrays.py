import sys

import numpy as np
import pytest

from logicblocks.pricing.types import (
    DEFAULT_TOLERANCES,
    Tolerances,
    as_matrix,
    as_vector,
    frozen,
    matrix_to_lists,
    vector_to_list,
)


class TestAsVector:
    def test_converts_sequences_to_float_vectors(self):
        vector = as_vector([1, 2, 3])

        assert vector.dtype == np.float64
        assert vector.shape == (3,)

    def test_rejects_matrices(self):
        with pytest.raises(ValueError):
            as_vector([[1.0, 2.0]])


class TestAsMatrix:
    def test_converts_nested_sequences_to_float_matrices(self):
        matrix = as_matrix([[1, 0], [0, 1]])

        assert matrix.dtype == np.float64
        assert matrix.shape == (2, 2)

    def test_rejects_vectors(self):
        with pytest.raises(ValueError):
            as_matrix([1.0, 2.0])


class TestFrozen:
    def test_makes_arrays_read_only(self):
        array = frozen(np.zeros(2))

        with pytest.raises(ValueError):
            array[0] = 1.0


class TestCodecHelpers:
    def test_vector_to_list_produces_python_floats(self):
        values = vector_to_list(np.array([0.5, 1.0]))

        assert values == [0.5, 1.0]
        assert all(type(value) is float for value in values)

    def test_matrix_to_lists_produces_nested_python_floats(self):
        assert matrix_to_lists(np.eye(2)) == [[1.0, 0.0], [0.0, 1.0]]


class TestTolerances:
    def test_defaults(self):
        assert DEFAULT_TOLERANCES == Tolerances(
            kernel=1e-10,
            pd_floor_ratio=1e-12,
            residual=1e-9,
            poa=1e-9,
            symmetry=1e-12,
        )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
