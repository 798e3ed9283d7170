import math

import numpy as np
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.demand import (
    DemandSystem,
    build_demand_system,
    dominance_profile,
)
from logicblocks.pricing.exceptions import SpecInvalidError
from logicblocks.pricing.types import Matrix, Vector

from .logger import default_logger
from .specs import RandomSpec, SignMode

OWN_EFFECT_RANGE = (0.5, 2.0)
INTERCEPT_RANGE = (0.5, 2.0)
MU_SLACK = 1e-6
MAX_BISECTIONS = 60


def _mu(d: Vector, offdiagonal: Matrix, scale: float) -> float:
    return float(np.max(scale * np.abs(offdiagonal).sum(axis=1) / d))


def _signs(
    rng: np.random.Generator, n: int, sign_mode: SignMode
) -> Matrix:
    match sign_mode:
        case SignMode.SUBSTITUTES:
            return np.ones((n, n))
        case SignMode.COMPLEMENTS:
            return -np.ones((n, n))
        case SignMode.MIXED:
            return rng.choice(np.array([-1.0, 1.0]), size=(n, n))


def _scale_to_target(
    d: Vector, offdiagonal: Matrix, mu_target: float
) -> float:
    ratios = np.abs(offdiagonal).sum(axis=1) / d
    largest = float(np.max(ratios))
    if mu_target == 0.0 or largest == 0.0:
        return 0.0

    scale = mu_target / largest
    mu = _mu(d, offdiagonal, scale)
    if mu_target - MU_SLACK <= mu <= mu_target:
        return scale

    low, high = 0.0, scale * (1.0 + MU_SLACK)
    for _ in range(MAX_BISECTIONS):
        middle = (low + high) / 2.0
        if _mu(d, offdiagonal, middle) <= mu_target:
            low = middle
        else:
            high = middle
        if _mu(d, offdiagonal, low) >= mu_target - MU_SLACK:
            return low

    raise SpecInvalidError(
        f"could not scale cross effects to mu = {mu_target!r}"
    )


def make_random(
    n: int,
    mu_target: float,
    sign_mode: SignMode = SignMode.MIXED,
    seed: int = 0,
    *,
    logger: FilteringBoundLogger = default_logger,
) -> DemandSystem:
    """Seeded random system with dominance parameter hitting `mu_target`.

    Draws, in order from a PCG64 stream: own-effect magnitudes
    log-uniform in `[0.5, 2]`, intercepts uniform in `[0.5, 2]`,
    off-diagonal magnitudes uniform in `[0, 1)` for `i < j`, then signs
    when mixed. The symmetric off-diagonal block is scaled by a single
    factor so that `max_i μ_i` lands in `[mu_target - 1e-6, mu_target]`.
    """
    spec = RandomSpec(
        n=n, mu_target=mu_target, sign_mode=sign_mode, seed=seed
    )
    rng = np.random.Generator(np.random.PCG64(spec.seed))

    d = np.exp(
        rng.uniform(
            math.log(OWN_EFFECT_RANGE[0]), math.log(OWN_EFFECT_RANGE[1]), n
        )
    )
    a = rng.uniform(INTERCEPT_RANGE[0], INTERCEPT_RANGE[1], n)
    magnitudes = rng.uniform(0.0, 1.0, (n, n))
    signs = _signs(rng, n, spec.sign_mode)

    upper = np.triu(magnitudes * signs, k=1)
    offdiagonal = upper + upper.T

    scale = _scale_to_target(d, offdiagonal, spec.mu_target)
    b = scale * offdiagonal - np.diag(d)

    system = build_demand_system(a, b, logger=logger)
    mu = dominance_profile(system).mu

    logger.debug(
        "pricing.instances.random-generated",
        n=n,
        seed=spec.seed,
        sign_mode=spec.sign_mode.value,
        mu_target=spec.mu_target,
        mu=mu,
    )

    return system
