from collections.abc import Callable, Iterator

import numpy as np
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.demand import DemandSystem, dominance_profile
from logicblocks.pricing.equilibrium import (
    PriceVector,
    Prices,
    best_response,
    build_ane,
    nash_equilibrium,
    payoff_gradient,
    price_array,
    total_revenue,
)
from logicblocks.pricing.exceptions import (
    SpecInvalidError,
    StepSizeTooLargeError,
)
from logicblocks.pricing.linalg import eig_sym

from .logger import default_logger
from .trajectory import TrajectoryRecord

DEFAULT_EPS = 1e-10
DEFAULT_MAX_ITERS = 10_000


def best_response_contraction(s: DemandSystem) -> float:
    """∞-norm contraction factor of simultaneous best response.

    The update matrix has entries `|b_ij| / (2|b_ii|)`, so the factor is
    its largest row sum, at most `μ/2`.
    """
    own = np.abs(np.diag(s.b))
    cross = np.abs(s.b).sum(axis=1) - own
    return float(np.max(cross / (2.0 * own)))


def eta_max(s: DemandSystem) -> float:
    """Largest gradient-play step size accepted, `1/(2 max|b_ii| (1 + μ))`.

    Below it the iteration matrix `I + ηA^NE` is a contraction.
    """
    mu = dominance_profile(s).mu
    return 1.0 / (2.0 * float(np.max(np.abs(np.diag(s.b)))) * (1.0 + mu))


def gradient_play_contraction(s: DemandSystem, eta: float) -> float:
    """Spectral radius of the gradient-play iteration matrix `I + ηA^NE`."""
    eigen = eig_sym(np.eye(s.n) + eta * build_ane(s))
    return max(abs(eigen.smallest), abs(eigen.largest))


def iterate_best_responses(
    s: DemandSystem, p0: Prices
) -> Iterator[PriceVector]:
    """Endless simultaneous best-response iterates following `p0`."""
    p = price_array(s, p0)
    while True:
        p = np.array(
            [best_response(s, np.delete(p, i), i) for i in range(s.n)]
        )
        yield PriceVector(p)


def iterate_gradient_play(
    s: DemandSystem, p0: Prices, eta: float
) -> Iterator[PriceVector]:
    """Endless iterates of every player ascending its own payoff."""
    p = price_array(s, p0)
    while True:
        p = p + eta * payoff_gradient(s, p)
        yield PriceVector(p)


def _check_run(max_iters: int, eps: float) -> None:
    if max_iters < 1:
        raise SpecInvalidError(f"max_iters = {max_iters} must be positive")
    if not eps > 0.0:
        raise SpecInvalidError(f"eps = {eps!r} must be positive")


def _run(
    s: DemandSystem,
    p0: Prices,
    iterates: Callable[[PriceVector], Iterator[PriceVector]],
    remaining: Callable[[PriceVector, PriceVector], float],
    *,
    max_iters: int,
    eps: float,
    logger: FilteringBoundLogger,
) -> TrajectoryRecord:
    start = PriceVector(price_array(s, p0))
    equilibrium, _ = nash_equilibrium(s)

    trajectory = [start]
    converged = False
    for p in iterates(start):
        bound = remaining(p, trajectory[-1])
        trajectory.append(p)
        if bound <= eps:
            converged = True
            break
        if len(trajectory) > max_iters:
            break

    record = TrajectoryRecord(
        iterates=tuple(trajectory),
        dist_to_ne=np.array([p.distance_to(equilibrium) for p in trajectory]),
        revenues=np.array([total_revenue(s, p) for p in trajectory]),
        converged=converged,
        steps=len(trajectory) - 1,
        equilibrium=equilibrium,
    )

    if converged:
        logger.info(
            "pricing.dynamics.converged",
            steps=record.steps,
            dist_to_ne=float(record.dist_to_ne[-1]),
        )
    else:
        logger.warning(
            "pricing.dynamics.not-converged",
            steps=record.steps,
            dist_to_ne=float(record.dist_to_ne[-1]),
        )

    return record


def best_response_dynamics(
    s: DemandSystem,
    p0: Prices,
    max_iters: int = DEFAULT_MAX_ITERS,
    eps: float = DEFAULT_EPS,
    *,
    logger: FilteringBoundLogger = default_logger,
) -> TrajectoryRecord:
    """Simultaneous best response from `p0`.

    Stops once successive iterates are within `eps` in the ∞-norm or
    after `max_iters` updates; `converged` tells which.
    """
    _check_run(max_iters, eps)
    return _run(
        s,
        p0,
        lambda start: iterate_best_responses(s, start),
        lambda p, previous: p.distance_to(previous),
        max_iters=max_iters,
        eps=eps,
        logger=logger.bind(n=s.n, dynamic="br"),
    )


def gradient_play(
    s: DemandSystem,
    p0: Prices,
    eta: float,
    max_iters: int = DEFAULT_MAX_ITERS,
    eps: float = DEFAULT_EPS,
    *,
    logger: FilteringBoundLogger = default_logger,
) -> TrajectoryRecord:
    """Each player steps along its own payoff gradient with rate `eta`.

    With `r` the spectral radius of `I + ηA^NE`, the last step bounds the
    remaining distance to the equilibrium by `r/(1 - r)` times its
    Euclidean length; iteration stops once that bound is within `eps`.

    Raises:
        StepSizeTooLargeError: `eta` exceeds `eta_max(s)`.
    """
    _check_run(max_iters, eps)
    limit = eta_max(s)
    if not eta > 0.0:
        raise SpecInvalidError(f"eta = {eta!r} must be positive")
    if eta > limit:
        raise StepSizeTooLargeError(eta, limit)

    r = gradient_play_contraction(s, eta)
    amplification = r / (1.0 - r)
    return _run(
        s,
        p0,
        lambda start: iterate_gradient_play(s, start, eta),
        lambda p, previous: (
            amplification * float(np.linalg.norm(p.p - previous.p))
        ),
        max_iters=max_iters,
        eps=eps,
        logger=logger.bind(n=s.n, dynamic="gd", eta=eta),
    )
