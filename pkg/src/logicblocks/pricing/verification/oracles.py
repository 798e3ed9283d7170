import itertools

import numpy as np
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.anarchy import (
    PoaMatrices,
    build_poa_matrices,
    exact_poa_min,
    rayleigh_poa,
)
from logicblocks.pricing.demand import DemandSystem
from logicblocks.pricing.dynamics import iterate_best_responses
from logicblocks.pricing.equilibrium import (
    PriceVector,
    centralized_optimum,
    nash_equilibrium,
    player_payoff,
    total_revenue,
)
from logicblocks.pricing.exceptions import SpecInvalidError
from logicblocks.pricing.linalg import eig_sym
from logicblocks.pricing.types import Vector, VectorLike, as_vector

from .logger import default_logger
from .result import OracleQuantity, OracleResult, log_result

ARMIJO = 1e-4
MAX_HALVINGS = 60
GRADIENT_FLOOR = 1e-12


def _ascent_step(s: DemandSystem, p: Vector, gradient: Vector) -> Vector:
    current = total_revenue(s, p)
    slope = float(gradient @ gradient)
    step = 1.0
    for _ in range(MAX_HALVINGS):
        candidate = p + step * gradient
        if total_revenue(s, candidate) >= current + ARMIJO * step * slope:
            return candidate
        step /= 2.0
    return p


def oracle_centralized(
    s: DemandSystem,
    iters: int = 20_000,
    *,
    tolerance: float = 1e-6,
    logger: FilteringBoundLogger = default_logger,
) -> OracleResult:
    """Maximise revenue by backtracking gradient ascent from `p = 0`.

    The closed-form optimum is consulted only to score the result:
    discrepancy is `|R_ascent - R(p*)| / max(1, R(p*))`.
    """
    p = np.zeros(s.n)
    for _ in range(iters):
        gradient = s.a + (s.b + s.b.T) @ p
        if float(np.max(np.abs(gradient))) <= GRADIENT_FLOOR:
            break
        following = _ascent_step(s, p, gradient)
        if following is p:
            break
        p = following

    value = total_revenue(s, p)
    _, r_star = centralized_optimum(s)
    discrepancy = abs(value - r_star) / max(1.0, abs(r_star))

    result = OracleResult(
        quantity=OracleQuantity.CENTRALIZED_REVENUE,
        value=value,
        discrepancy=discrepancy,
        tolerance=tolerance,
        passed=discrepancy <= tolerance,
    )
    log_result(result, logger.bind(n=s.n))
    return result


def _profitable_deviations(
    s: DemandSystem,
    limit: Vector,
    rng: np.random.Generator,
    deviations: int,
    slack: float,
) -> int:
    profitable = 0
    for i in range(s.n):
        baseline = player_payoff(s, limit, i)
        width = max(1.0, abs(float(limit[i])))
        candidates = limit[i] + rng.uniform(-width, width, deviations)
        for price in candidates:
            deviation = limit.copy()
            deviation[i] = price
            if player_payoff(s, deviation, i) > baseline + slack:
                profitable += 1
    return profitable


def oracle_nash(
    s: DemandSystem,
    *,
    eps: float = 1e-12,
    max_iters: int = 10_000,
    deviations: int = 1000,
    seed: int = 0,
    tolerance: float = 1e-8,
    slack: float = 1e-9,
    logger: FilteringBoundLogger = default_logger,
) -> OracleResult:
    """Fixed-point iteration of best responses, then a deviation sweep.

    Passes when the iteration settles within `eps`, no sampled unilateral
    deviation improves its player's payoff by more than `slack`, and the
    limit is within `tolerance` of the closed-form equilibrium.
    """
    log = logger.bind(n=s.n)
    start = PriceVector(np.zeros(s.n))
    limit = start
    settled = False
    for p in itertools.islice(iterate_best_responses(s, start), max_iters):
        settled = p.distance_to(limit) <= eps
        limit = p
        if settled:
            break

    rng = np.random.Generator(np.random.PCG64(seed))
    profitable = _profitable_deviations(
        s, limit.p.copy(), rng, deviations, slack
    )

    p_ne, _ = nash_equilibrium(s)
    discrepancy = limit.distance_to(p_ne)

    if profitable:
        log.warning(
            "pricing.verification.profitable-deviations", count=profitable
        )

    result = OracleResult(
        quantity=OracleQuantity.NASH_PRICES,
        value=limit,
        discrepancy=discrepancy,
        tolerance=tolerance,
        passed=settled and profitable == 0 and discrepancy <= tolerance,
    )
    log_result(result, log)
    return result


def _descent_step(pm: PoaMatrices, a: Vector) -> Vector:
    weight = float(a @ pm.l_tilde @ a)
    current = float(a @ pm.k_tilde @ a) / weight
    gradient = 2.0 * (pm.k_tilde @ a - current * (pm.l_tilde @ a)) / weight
    slope = float(gradient @ gradient)
    if slope <= GRADIENT_FLOOR**2:
        return a
    step = 1.0
    for _ in range(MAX_HALVINGS):
        candidate = a - step * gradient
        candidate /= np.linalg.norm(candidate)
        value = float(rayleigh_poa(pm, candidate)[0])
        if value <= current - ARMIJO * step * slope:
            return candidate
        step /= 2.0
    return a


def oracle_poa_min(
    s: DemandSystem,
    samples: int = 1000,
    seed: int = 0,
    *,
    worst_intercept: VectorLike | None = None,
    refinement_steps: int = 50,
    tolerance: float = 1e-9,
    logger: FilteringBoundLogger = default_logger,
) -> OracleResult:
    """Sample the price of anarchy over random unit intercepts.

    `worst_intercept`, by default the one `exact_poa_min` reports, joins
    the samples; the best point is then refined by projected descent on
    the Rayleigh quotient over the unit sphere. Discrepancy is the
    sampled minimum less `λ_min(M)`. A Rayleigh quotient never falls
    below it, and a correct worst intercept reaches it.
    """
    if samples < 1:
        raise SpecInvalidError(f"samples = {samples} must be positive")

    pm = build_poa_matrices(s)
    candidate = (
        exact_poa_min(s).worst_intercept
        if worst_intercept is None
        else as_vector(worst_intercept)
    )
    candidate = candidate / np.linalg.norm(candidate)

    rng = np.random.Generator(np.random.PCG64(seed))
    directions = rng.standard_normal((samples, s.n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    intercepts = np.vstack([directions, candidate])

    values = rayleigh_poa(pm, intercepts)
    best = int(np.argmin(values))
    sampled_min = float(values[best])

    a = intercepts[best].copy()
    for _ in range(refinement_steps):
        following = _descent_step(pm, a)
        if following is a:
            break
        a = following
        sampled_min = min(sampled_min, float(rayleigh_poa(pm, a)[0]))

    discrepancy = sampled_min - eig_sym(pm.m).smallest

    result = OracleResult(
        quantity=OracleQuantity.POA_MIN_SAMPLED,
        value=sampled_min,
        discrepancy=discrepancy,
        tolerance=tolerance,
        passed=-tolerance <= discrepancy <= tolerance,
    )
    log_result(result, logger.bind(n=s.n, samples=samples, seed=seed))
    return result
