from .arrays import Matrix, Vector


def vector_to_list(vector: Vector) -> list[float]:
    return [float(value) for value in vector]


def matrix_to_lists(matrix: Matrix) -> list[list[float]]:
    return [vector_to_list(row) for row in matrix]
