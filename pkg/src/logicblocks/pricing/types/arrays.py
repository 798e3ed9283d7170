from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray

type Vector = NDArray[np.float64]
type Matrix = NDArray[np.float64]

type VectorLike = Vector | Sequence[float]
type MatrixLike = Matrix | Sequence[Sequence[float]]


def as_vector(value: VectorLike) -> Vector:
    vector = np.array(value, dtype=np.float64)
    if vector.ndim != 1:
        raise ValueError(f"Expected a vector, got shape {vector.shape}.")
    return vector


def as_matrix(value: MatrixLike) -> Matrix:
    matrix = np.array(value, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError(f"Expected a matrix, got shape {matrix.shape}.")
    return matrix


def frozen[T: np.generic](array: NDArray[T]) -> NDArray[T]:
    array.setflags(write=False)
    return array
