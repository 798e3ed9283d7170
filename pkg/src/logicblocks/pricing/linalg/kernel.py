from dataclasses import dataclass

import numpy as np
import scipy.linalg

from logicblocks.pricing.exceptions import (
    NotPositiveDefiniteError,
    NotSymmetricError,
)
from logicblocks.pricing.types import (
    DEFAULT_TOLERANCES,
    Matrix,
    MatrixLike,
    Tolerances,
    Vector,
    VectorLike,
    as_matrix,
    as_vector,
    frozen,
)


@dataclass(frozen=True)
class SymmetricEigen:
    """Eigendecomposition `QΛQᵀ` of a real symmetric matrix.

    Eigenvalues are ascending; eigenvectors are the orthonormal columns
    of `eigenvectors`, each signed so that its first non-negligible
    component is positive.
    """

    eigenvalues: Vector
    eigenvectors: Matrix

    @property
    def smallest(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def largest(self) -> float:
        return float(self.eigenvalues[-1])

    def vector(self, index: int) -> Vector:
        return self.eigenvectors[:, index]

    def reconstruct(self) -> Matrix:
        q = self.eigenvectors
        return (q * self.eigenvalues) @ q.T


def max_abs(matrix: Matrix) -> float:
    return float(np.max(np.abs(matrix))) if matrix.size else 0.0


def asymmetry(matrix: Matrix) -> float:
    return max_abs(matrix - matrix.T)


def symmetrise(matrix: Matrix) -> Matrix:
    return (matrix + matrix.T) / 2.0


def _assert_symmetric(matrix: Matrix, tolerances: Tolerances) -> None:
    if matrix.shape[0] != matrix.shape[1]:
        raise NotSymmetricError(float("inf"), tolerances.kernel)
    limit = tolerances.kernel * max(1.0, max_abs(matrix))
    measured = asymmetry(matrix)
    if measured > limit:
        raise NotSymmetricError(measured, limit)


def _fix_signs(vectors: Matrix, threshold: float) -> Matrix:
    signed = vectors.copy()
    for column in range(signed.shape[1]):
        significant = np.flatnonzero(np.abs(signed[:, column]) > threshold)
        if significant.size and signed[significant[0], column] < 0:
            signed[:, column] = -signed[:, column]
    return signed


def eig_sym(
    m: MatrixLike, *, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> SymmetricEigen:
    matrix = as_matrix(m)
    _assert_symmetric(matrix, tolerances)

    eigenvalues, eigenvectors = scipy.linalg.eigh(symmetrise(matrix))

    return SymmetricEigen(
        eigenvalues=frozen(np.asarray(eigenvalues, dtype=np.float64)),
        eigenvectors=frozen(
            _fix_signs(
                np.asarray(eigenvectors, dtype=np.float64),
                tolerances.kernel,
            )
        ),
    )


def _positive_spectrum(
    matrix: Matrix, tolerances: Tolerances
) -> SymmetricEigen:
    eigen = eig_sym(matrix, tolerances=tolerances)
    floor = tolerances.pd_floor_ratio * max(eigen.largest, 0.0)
    if eigen.largest <= 0.0 or eigen.smallest <= floor:
        raise NotPositiveDefiniteError(eigen.smallest, floor)
    return eigen


def _spectral_function(eigen: SymmetricEigen, values: Vector) -> Matrix:
    q = eigen.eigenvectors
    return symmetrise((q * values) @ q.T)


def spd_sqrt(
    m: MatrixLike, *, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Matrix:
    """Unique symmetric positive definite square root `QΛ^{1/2}Qᵀ`."""
    eigen = _positive_spectrum(as_matrix(m), tolerances)
    return _spectral_function(eigen, np.sqrt(eigen.eigenvalues))


def spd_inverse_sqrt(
    m: MatrixLike, *, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Matrix:
    eigen = _positive_spectrum(as_matrix(m), tolerances)
    return _spectral_function(eigen, 1.0 / np.sqrt(eigen.eigenvalues))


def _cholesky(
    matrix: Matrix, tolerances: Tolerances
) -> tuple[Matrix, bool]:
    _assert_symmetric(matrix, tolerances)
    try:
        factor, lower = scipy.linalg.cho_factor(symmetrise(matrix))
    except np.linalg.LinAlgError:
        smallest = float(scipy.linalg.eigvalsh(symmetrise(matrix))[0])
        raise NotPositiveDefiniteError(smallest, 0.0) from None
    return np.asarray(factor, dtype=np.float64), bool(lower)


def solve_spd(
    m: MatrixLike,
    rhs: VectorLike,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Vector:
    """Solve `m x = rhs` through a Cholesky factorisation of `m`."""
    matrix = as_matrix(m)
    factor = _cholesky(matrix, tolerances)
    solution = scipy.linalg.cho_solve(factor, as_vector(rhs))
    return np.asarray(solution, dtype=np.float64)


def spd_inverse(
    m: MatrixLike, *, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Matrix:
    """Explicit inverse, for matrix-valued formulas only.

    Prefer `solve_spd` whenever a vector is all that is needed.
    """
    matrix = as_matrix(m)
    factor = _cholesky(matrix, tolerances)
    identity = np.eye(matrix.shape[0])
    inverse = scipy.linalg.cho_solve(factor, identity)
    return symmetrise(np.asarray(inverse, dtype=np.float64))
