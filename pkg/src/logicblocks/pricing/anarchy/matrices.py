from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from structlog.typing import FilteringBoundLogger

from logicblocks.pricing.demand import DemandSystem
from logicblocks.pricing.equilibrium import build_ane
from logicblocks.pricing.exceptions import ResidualExceedsToleranceError
from logicblocks.pricing.linalg import (
    eig_sym,
    max_abs,
    spd_inverse,
    spd_inverse_sqrt,
    spd_sqrt,
    symmetrise,
)
from logicblocks.pricing.types import (
    DEFAULT_TOLERANCES,
    Matrix,
    Tolerances,
    Vector,
    frozen,
)

from .bounds import alpha, beta
from .logger import default_logger


@dataclass(frozen=True, eq=False)
class PoaMatrices:
    """Every matrix of the price-of-anarchy analysis of one system.

    Attributes:
        h: `H = -B`.
        g: `G = -A^NE = H + D`.
        d: own-effect magnitudes, the diagonal of `D`.
        g_inv: `G⁻¹`.
        h_sqrt: `H^{1/2}`.
        k: Nash revenue matrix, `R(p^NE) = -¼ aᵀKa`.
        l_tilde: `L̃ = -B⁻¹ = H⁻¹`.
        k_tilde: `K̃ = -K = 4(G⁻¹ - G⁻¹HG⁻¹)`.
        y: `Y = H^{1/2} G⁻¹ H^{1/2}`, spectrum inside `(0, 1)`.
        m: `M = L̃^{-1/2} K̃ L̃^{-1/2} = 4Y(I - Y)`, spectrum inside
            `(0, 1]`; its Rayleigh quotient in `x = L̃^{1/2}a` is the
            price of anarchy of intercept `a`.
    """

    h: Matrix
    g: Matrix
    d: Vector
    g_inv: Matrix
    h_sqrt: Matrix
    k: Matrix
    l_tilde: Matrix
    k_tilde: Matrix
    y: Matrix
    m: Matrix


def _check(quantity: str, residual: float, limit: float) -> None:
    if not residual <= limit:
        raise ResidualExceedsToleranceError(quantity, residual, limit)


def build_poa_matrices(
    s: DemandSystem,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    logger: FilteringBoundLogger = default_logger,
) -> PoaMatrices:
    h = -s.b
    g = -build_ane(s)
    d = np.diag(h).copy()

    g_inv = spd_inverse(g, tolerances=tolerances)
    l_tilde = spd_inverse(h, tolerances=tolerances)
    h_sqrt = spd_sqrt(h, tolerances=tolerances)

    k_tilde = symmetrise(4.0 * (g_inv - g_inv @ h @ g_inv))
    k = -k_tilde
    y = symmetrise(h_sqrt @ g_inv @ h_sqrt)

    l_tilde_inv_sqrt = spd_inverse_sqrt(l_tilde, tolerances=tolerances)
    m = symmetrise(l_tilde_inv_sqrt @ k_tilde @ l_tilde_inv_sqrt)

    identity = np.eye(s.n)
    _check(
        "G = H + D factorisation",
        max_abs(g - (h + np.diag(d))),
        tolerances.kernel * max(1.0, max_abs(g)),
    )
    _check(
        "M = 4Y(I - Y)",
        max_abs(m - 4.0 * y @ (identity - y)),
        tolerances.poa,
    )

    y_spectrum = eig_sym(y, tolerances=tolerances).eigenvalues
    m_spectrum = eig_sym(m, tolerances=tolerances).eigenvalues
    _check(
        "spectrum of Y inside (0, 1)",
        max(-float(y_spectrum[0]), float(y_spectrum[-1]) - 1.0, -1.0),
        0.0,
    )
    _check(
        "spectrum of M inside (0, 1]",
        max(-float(m_spectrum[0]), float(m_spectrum[-1]) - 1.0, -1.0),
        tolerances.poa,
    )

    logger.debug(
        "pricing.anarchy.matrices-built",
        n=s.n,
        y_spectrum=[float(value) for value in y_spectrum],
    )

    return PoaMatrices(
        h=frozen(h),
        g=frozen(g),
        d=frozen(d),
        g_inv=frozen(g_inv),
        h_sqrt=frozen(h_sqrt),
        k=frozen(k),
        l_tilde=frozen(l_tilde),
        k_tilde=frozen(k_tilde),
        y=frozen(y),
        m=frozen(m),
    )


def rayleigh_poa(pm: PoaMatrices, intercepts: ArrayLike) -> Vector:
    """Price of anarchy `aᵀK̃a / aᵀL̃a` for each row of `intercepts`."""
    rows = np.atleast_2d(np.asarray(intercepts, dtype=np.float64))
    numerators = np.einsum("ij,jk,ik->i", rows, pm.k_tilde, rows)
    denominators = np.einsum("ij,jk,ik->i", rows, pm.l_tilde, rows)
    return numerators / denominators


def loewner_comparison_check(
    pm: PoaMatrices,
    mu: float,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> bool:
    """Whether `β(μ)G⁻¹ ⪯ H⁻¹ ⪯ α(μ)G⁻¹` holds in the Loewner order."""
    upper = alpha(mu) * pm.g_inv - pm.l_tilde
    lower = pm.l_tilde - beta(mu) * pm.g_inv
    limit = tolerances.poa * max(1.0, max_abs(pm.l_tilde))
    return (
        eig_sym(upper, tolerances=tolerances).smallest >= -limit
        and eig_sym(lower, tolerances=tolerances).smallest >= -limit
    )
