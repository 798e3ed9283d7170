import math
from dataclasses import dataclass
from enum import StrEnum

from logicblocks.pricing.exceptions import SpecInvalidError


class SignMode(StrEnum):
    SUBSTITUTES = "substitutes"
    COMPLEMENTS = "complements"
    MIXED = "mixed"


def _require(condition: bool, detail: str) -> None:
    if not condition:
        raise SpecInvalidError(detail)


@dataclass(frozen=True)
class SymmetricModelSpec:
    """Exchangeable model: `b_ii = -1` and `b_ij = rho` for `i ≠ j`."""

    n: int
    rho: float
    a_scalar: float = 1.0

    def __post_init__(self):
        _require(self.n >= 1, f"n = {self.n} must be at least 1")
        _require(
            math.isfinite(self.rho) and self.rho >= 0.0,
            f"rho = {self.rho!r} must be finite and non-negative",
        )
        _require(
            math.isfinite(self.a_scalar),
            f"a = {self.a_scalar!r} must be finite",
        )
        _require(
            self.mu < 1.0,
            f"(n - 1) * rho = {self.mu!r} must be below 1",
        )

    @property
    def mu(self) -> float:
        return (self.n - 1) * self.rho


@dataclass(frozen=True)
class StarSpec:
    """Hub product 0 coupled by `rho` to each of `n - 1` spokes."""

    n: int
    rho: float
    a_scalar: float = 1.0

    def __post_init__(self):
        _require(self.n >= 2, f"n = {self.n} must be at least 2")
        _require(
            math.isfinite(self.rho) and self.rho > 0.0,
            f"rho = {self.rho!r} must be finite and positive",
        )
        _require(
            math.isfinite(self.a_scalar),
            f"a = {self.a_scalar!r} must be finite",
        )
        _require(
            (self.n - 1) * self.rho < 1.0,
            f"hub row sum (n - 1) * rho = {(self.n - 1) * self.rho!r} "
            f"must be below 1",
        )


@dataclass(frozen=True)
class RandomSpec:
    n: int
    mu_target: float
    sign_mode: SignMode = SignMode.MIXED
    seed: int = 0

    def __post_init__(self):
        _require(self.n >= 1, f"n = {self.n} must be at least 1")
        _require(
            math.isfinite(self.mu_target) and 0.0 <= self.mu_target < 1.0,
            f"mu_target = {self.mu_target!r} must lie in [0, 1)",
        )
        _require(
            not (self.n == 1 and self.mu_target > 0.0),
            "a single product cannot carry cross effects, "
            "mu_target must be 0 when n = 1",
        )
        _require(self.seed >= 0, f"seed = {self.seed} must be non-negative")
