from dataclasses import dataclass

import numpy as np

from logicblocks.pricing.demand import DemandSystem
from logicblocks.pricing.exceptions import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    NonFinitePricesError,
)
from logicblocks.pricing.types import (
    Matrix,
    Vector,
    VectorLike,
    frozen,
    vector_to_list,
)


@dataclass(frozen=True, eq=False)
class PriceVector:
    p: Vector

    def __init__(self, p: VectorLike):
        prices = np.array(p, dtype=np.float64)
        if prices.ndim != 1:
            raise DimensionMismatchError(
                f"prices must form a vector, got shape {prices.shape}"
            )
        if not np.all(np.isfinite(prices)):
            raise NonFinitePricesError()
        object.__setattr__(self, "p", frozen(prices))

    def __len__(self) -> int:
        return self.p.shape[0]

    def distance_to(self, other: "PriceVector") -> float:
        return float(np.max(np.abs(self.p - other.p), initial=0.0))

    def serialise(self) -> list[float]:
        return vector_to_list(self.p)

    def __repr__(self) -> str:
        return f"PriceVector(p={vector_to_list(self.p)})"


type Prices = PriceVector | VectorLike


def price_array(s: DemandSystem, p: Prices) -> Vector:
    prices = (
        p.p if isinstance(p, PriceVector) else np.asarray(p, np.float64)
    )
    if prices.shape != (s.n,):
        raise DimensionMismatchError(
            f"{prices.shape} prices for {s.n} products"
        )
    return prices


def _check_index(s: DemandSystem, i: int) -> None:
    if not 0 <= i < s.n:
        raise IndexOutOfRangeError(i, s.n)


def total_revenue(s: DemandSystem, p: Prices) -> float:
    """Firm revenue `R(p) = aᵀp + pᵀBp`."""
    prices = price_array(s, p)
    return float(s.a @ prices + prices @ s.b @ prices)


def player_payoff(s: DemandSystem, p: Prices, i: int) -> float:
    """Revenue of product `i` alone, `p_i F_i(p)`."""
    _check_index(s, i)
    prices = price_array(s, p)
    return float(prices[i] * (s.a[i] + s.b[i] @ prices))


def best_response(s: DemandSystem, p_others: VectorLike, i: int) -> float:
    """Unique maximiser of `u_i` with opponents' prices held fixed.

    `p_others` lists the `n - 1` opponent prices in product order with
    slot `i` omitted.
    """
    _check_index(s, i)
    others = np.asarray(p_others, dtype=np.float64)
    if others.shape != (s.n - 1,):
        raise DimensionMismatchError(
            f"{others.shape} opponent prices for {s.n} products"
        )
    cross = float(np.delete(s.b[i], i) @ others)
    return (-float(s.a[i]) - cross) / (2.0 * float(s.b[i, i]))


def best_responses(s: DemandSystem, p: Prices) -> Vector:
    """Every player's best response to `p`, computed simultaneously."""
    prices = price_array(s, p)
    own = np.diag(s.b)
    cross = s.b @ prices - own * prices
    return (-s.a - cross) / (2.0 * own)


def payoff_gradient(s: DemandSystem, p: Prices) -> Vector:
    """Each player's derivative of its own payoff, `∂u_i/∂p_i`."""
    prices = price_array(s, p)
    return s.a + s.b @ prices + np.diag(s.b) * prices


def build_ane(s: DemandSystem) -> Matrix:
    """Nash equilibrium matrix: `B` with its diagonal doubled."""
    return frozen(s.b + np.diag(np.diag(s.b)))
