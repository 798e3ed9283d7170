from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared by every operation.

    Attributes:
        kernel: absolute tolerance for symmetry, reconstruction and
            orthonormality checks on unit-scaled matrices.
        pd_floor_ratio: smallest admissible eigenvalue of a positive
            definite matrix, relative to its largest eigenvalue.
        residual: tolerance for first-order-condition and stationarity
            residuals, scaled by `1 + ‖a‖∞`.
        poa: absolute tolerance on price-of-anarchy quantities.
        symmetry: largest admissible asymmetry of an input sensitivity
            matrix, relative to its largest entry.
    """

    kernel: float = 1e-10
    pd_floor_ratio: float = 1e-12
    residual: float = 1e-9
    poa: float = 1e-9
    symmetry: float = 1e-12


DEFAULT_TOLERANCES = Tolerances()
