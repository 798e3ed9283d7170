from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import Any

import numpy as np

from logicblocks.pricing.types import Vector, frozen, vector_to_list

from .system import DemandSystem, local_mu


@dataclass(frozen=True, eq=False)
class DominanceProfile:
    d: Vector
    mu_local: Vector
    mu: float

    def serialise(self) -> Mapping[str, Any]:
        return {
            "d": vector_to_list(self.d),
            "mu_local": vector_to_list(self.mu_local),
            "mu": self.mu,
        }


def dominance_profile(s: DemandSystem) -> DominanceProfile:
    """Own-effect magnitudes and local dominance parameters of `s`.

    `mu` is the smallest scalar satisfying the dominance condition for
    every row; absolute values are used for cross effects so that the
    profile remains a valid certificate when complements are present.
    """
    d = np.abs(np.diag(s.b))
    mu_local = local_mu(s.b)
    return DominanceProfile(
        d=frozen(d),
        mu_local=frozen(mu_local),
        mu=float(mu_local.max()),
    )


class InteractionKind(StrEnum):
    SUBSTITUTES = "substitutes"
    COMPLEMENTS = "complements"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class ProductPair:
    i: int
    j: int
    kind: InteractionKind


@dataclass(frozen=True)
class InteractionSummary:
    pairs: Sequence[ProductPair]

    def count(self, kind: InteractionKind) -> int:
        return sum(1 for pair in self.pairs if pair.kind == kind)

    @property
    def substitutes(self) -> int:
        return self.count(InteractionKind.SUBSTITUTES)

    @property
    def complements(self) -> int:
        return self.count(InteractionKind.COMPLEMENTS)

    @property
    def independent(self) -> int:
        return self.count(InteractionKind.INDEPENDENT)

    def serialise(self) -> Mapping[str, Any]:
        return {
            "substitutes": self.substitutes,
            "complements": self.complements,
            "independent": self.independent,
        }


def interaction_kind(value: float) -> InteractionKind:
    if value > 0.0:
        return InteractionKind.SUBSTITUTES
    if value < 0.0:
        return InteractionKind.COMPLEMENTS
    return InteractionKind.INDEPENDENT


def classify_interactions(s: DemandSystem) -> InteractionSummary:
    return InteractionSummary(
        pairs=tuple(
            ProductPair(i=i, j=j, kind=interaction_kind(float(s.b[i, j])))
            for i in range(s.n)
            for j in range(i + 1, s.n)
        )
    )


@dataclass(frozen=True, eq=False)
class GershgorinDiscs:
    centres: Vector
    radii: Vector

    @property
    def right_endpoints(self) -> Vector:
        return self.centres + self.radii

    @property
    def max_right_endpoint(self) -> float:
        return float(self.right_endpoints.max())


def gershgorin_discs(s: DemandSystem) -> GershgorinDiscs:
    """Discs `[b_ii - r_i, b_ii + r_i]` containing the spectrum of `B`.

    For a valid system every disc lies strictly left of zero.
    """
    centres = np.diag(s.b).copy()
    radii = np.abs(s.b).sum(axis=1) - np.abs(centres)
    return GershgorinDiscs(centres=frozen(centres), radii=frozen(radii))
