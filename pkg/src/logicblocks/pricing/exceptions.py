class PricingError(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __repr__(self):
        return f"{self.__class__.__name__}({self.message})"


class ValidationError(PricingError):
    pass


class NumericalError(PricingError):
    pass


class InstanceFormatError(PricingError):
    pass


class DimensionMismatchError(ValidationError):
    def __init__(self, detail: str):
        super().__init__(f"DimensionMismatch: {detail}")


class AsymmetryExceedsToleranceError(ValidationError):
    def __init__(self, i: int, j: int, asymmetry: float, tolerance: float):
        super().__init__(
            f"AsymmetryExceedsTolerance at i={i}, j={j}: "
            f"|b_ij - b_ji| = {asymmetry!r} exceeds {tolerance!r}"
        )
        self.i = i
        self.j = j
        self.asymmetry = asymmetry
        self.tolerance = tolerance


class NonNegativeOwnEffectError(ValidationError):
    def __init__(self, index: int, value: float):
        super().__init__(
            f"NonNegativeOwnEffect at i={index}: "
            f"b_ii = {value!r} must be negative"
        )
        self.index = index
        self.value = value


class DominanceViolatedError(ValidationError):
    def __init__(self, index: int, mu_local: float):
        super().__init__(
            f"DominanceViolated at i={index}: "
            f"sum of |b_ij| over |b_ii| is {mu_local!r}, must be below 1"
        )
        self.index = index
        self.mu_local = mu_local


class IndexOutOfRangeError(ValidationError):
    def __init__(self, index: int, n: int):
        super().__init__(
            f"IndexOutOfRange: index {index} outside [0, {n})"
        )
        self.index = index
        self.n = n


class ZeroInterceptError(ValidationError):
    def __init__(self):
        super().__init__(
            "ZeroIntercept: price of anarchy is undefined for a = 0"
        )


class MuOutOfRangeError(ValidationError):
    def __init__(self, mu: float):
        super().__init__(f"MuOutOfRange: mu = {mu!r} must lie in [0, 1)")
        self.mu = mu


class SpecInvalidError(ValidationError):
    def __init__(self, detail: str):
        super().__init__(f"SpecInvalid: {detail}")


class StepSizeTooLargeError(ValidationError):
    def __init__(self, eta: float, eta_max: float):
        super().__init__(
            f"StepSizeTooLarge: eta = {eta!r} exceeds eta_max = {eta_max!r}"
        )
        self.eta = eta
        self.eta_max = eta_max


class NotSymmetricError(NumericalError):
    def __init__(self, asymmetry: float, tolerance: float):
        super().__init__(
            f"NotSymmetric: max asymmetry {asymmetry!r} exceeds "
            f"{tolerance!r}"
        )
        self.asymmetry = asymmetry


class NotPositiveDefiniteError(NumericalError):
    def __init__(self, smallest: float, floor: float):
        super().__init__(
            f"NotPositiveDefinite: smallest eigenvalue {smallest!r} "
            f"is not above {floor!r}"
        )
        self.smallest = smallest
        self.floor = floor


class ResidualExceedsToleranceError(NumericalError):
    def __init__(self, quantity: str, residual: float, limit: float):
        super().__init__(
            f"ResidualExceedsTolerance: {quantity} residual {residual!r} "
            f"exceeds {limit!r}"
        )
        self.quantity = quantity
        self.residual = residual
        self.limit = limit


class NonFinitePricesError(NumericalError):
    def __init__(self):
        super().__init__("NonFinitePrices: price vectors must be finite")
