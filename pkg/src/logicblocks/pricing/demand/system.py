from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any, Self

import numpy as np
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.exceptions import (
    AsymmetryExceedsToleranceError,
    DimensionMismatchError,
    DominanceViolatedError,
    InstanceFormatError,
    NonNegativeOwnEffectError,
)
from logicblocks.pricing.types import (
    DEFAULT_TOLERANCES,
    Matrix,
    MatrixLike,
    Vector,
    VectorLike,
    frozen,
    matrix_to_lists,
    vector_to_list,
)

from .logger import default_logger


@dataclass(frozen=True, eq=False)
class DemandSystem:
    """Linear expected demand `F(p) = a + Bp` over `n` products.

    Instances are only produced by `build_demand_system` (or
    `DemandSystem.deserialise`), which guarantee that `b` is exactly
    symmetric, has a negative diagonal and is strictly diagonally
    dominant.
    """

    n: int
    a: Vector
    b: Matrix

    def with_intercept(self, a: VectorLike) -> "DemandSystem":
        return build_demand_system(a, self.b, symmetry_tol=0.0)

    def serialise(self) -> Mapping[str, Any]:
        return {
            "n": self.n,
            "a": vector_to_list(self.a),
            "b": matrix_to_lists(self.b),
        }

    @classmethod
    def deserialise(cls, value: Mapping[str, Any]) -> Self:
        match value:
            case {"n": int() as n, "a": list() as a, "b": list() as b}:
                pass
            case _:
                raise InstanceFormatError(
                    'Instance must be an object with integer "n" and '
                    'array fields "a" and "b".'
                )

        a_values = _floats(a, "a")
        b_rows = [_floats(row, f"b[{i}]") for i, row in enumerate(b)]

        if len(a_values) != n:
            raise DimensionMismatchError(
                f'"n" is {n} but "a" has {len(a_values)} entries'
            )
        if len(b_rows) != n:
            raise DimensionMismatchError(
                f'"n" is {n} but "b" has {len(b_rows)} rows'
            )

        system = build_demand_system(
            a_values, b_rows, symmetry_tol=DEFAULT_TOLERANCES.symmetry
        )
        return cls(n=system.n, a=system.a, b=system.b)

    def __repr__(self) -> str:
        return (
            f"DemandSystem("
            f"n={self.n}, "
            f"a={vector_to_list(self.a)}, "
            f"b={matrix_to_lists(self.b)})"
        )


def _floats(values: Any, field: str) -> list[float]:
    if not isinstance(values, list):
        raise InstanceFormatError(f'Field "{field}" must be an array.')
    result: list[float] = []
    for value in values:  # pyright: ignore[reportUnknownVariableType]
        if isinstance(value, bool) or not isinstance(value, int | float):
            raise InstanceFormatError(
                f'Field "{field}" must contain only numbers.'
            )
        try:
            result.append(float(value))
        except OverflowError:
            raise InstanceFormatError(
                f'Field "{field}" holds a number too large for a float.'
            ) from None
    return result


def _coerce(a: VectorLike, b: MatrixLike) -> tuple[Vector, Matrix]:
    try:
        vector = np.array(a, dtype=np.float64)
        matrix = np.array(b, dtype=np.float64)
    except ValueError as ex:
        raise DimensionMismatchError(str(ex)) from None

    if vector.ndim != 1:
        raise DimensionMismatchError(
            f"intercepts must form a vector, got shape {vector.shape}"
        )
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(
            f"sensitivities must form a square matrix, "
            f"got shape {matrix.shape}"
        )
    if matrix.shape[0] != vector.shape[0]:
        raise DimensionMismatchError(
            f"{vector.shape[0]} intercepts for a "
            f"{matrix.shape[0]}x{matrix.shape[0]} sensitivity matrix"
        )
    if vector.shape[0] == 0:
        raise DimensionMismatchError("at least one product is required")
    if not (np.all(np.isfinite(vector)) and np.all(np.isfinite(matrix))):
        raise InstanceFormatError("Instance entries must be finite.")

    return vector, matrix


def local_mu(b: Matrix) -> Vector:
    d = np.abs(np.diag(b))
    off_diagonal = np.abs(b).sum(axis=1) - d
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(d > 0.0, off_diagonal / d, np.inf)


def build_demand_system(
    a: VectorLike,
    b: MatrixLike,
    symmetry_tol: float = DEFAULT_TOLERANCES.symmetry,
    *,
    logger: FilteringBoundLogger = default_logger,
) -> DemandSystem:
    """Validate `(a, b)` and build a `DemandSystem`.

    The sensitivity matrix is replaced by `(b + bᵀ)/2` when its largest
    asymmetry is within `symmetry_tol` times its largest entry.

    Raises:
        DimensionMismatchError: shapes of `a` and `b` disagree.
        AsymmetryExceedsToleranceError: `b` is too far from symmetric.
        NonNegativeOwnEffectError: some `b_ii >= 0`.
        DominanceViolatedError: some row has `Σ_{j≠i}|b_ij| >= |b_ii|`.
    """
    vector, matrix = _coerce(a, b)
    n = vector.shape[0]

    difference = np.abs(matrix - matrix.T)
    largest_asymmetry = float(difference.max())
    limit = symmetry_tol * float(np.abs(matrix).max())
    if largest_asymmetry > limit:
        i, j = np.unravel_index(int(np.argmax(difference)), difference.shape)
        raise AsymmetryExceedsToleranceError(
            int(min(i, j)), int(max(i, j)), largest_asymmetry, limit
        )
    if largest_asymmetry > 0.0:
        logger.warning(
            "pricing.demand.symmetrised",
            n=n,
            asymmetry=largest_asymmetry,
            tolerance=limit,
        )
        matrix = (matrix + matrix.T) / 2.0

    own_effects = np.diag(matrix)
    non_negative = np.flatnonzero(own_effects >= 0.0)
    if non_negative.size:
        index = int(non_negative[0])
        raise NonNegativeOwnEffectError(index, float(own_effects[index]))

    mu_local = local_mu(matrix)
    violated = np.flatnonzero(mu_local >= 1.0)
    if violated.size:
        index = int(violated[0])
        raise DominanceViolatedError(index, float(mu_local[index]))

    logger.debug("pricing.demand.system-built", n=n)

    return DemandSystem(n=n, a=frozen(vector), b=frozen(matrix))


def expected_demand(s: DemandSystem, p: VectorLike) -> Vector:
    prices = np.asarray(p, dtype=np.float64)
    if prices.shape != (s.n,):
        raise DimensionMismatchError(
            f"{prices.shape} prices for {s.n} products"
        )
    return s.a + s.b @ prices
