"""Fourier coefficients of b/a, where a is the outer completion of b.

Given a pure imaginary, index-symmetric Laurent polynomial b with
|b| <= 1 - eta on the circle, the completion a satisfies a*a^* + b*b^* = 1
and a = exp(G), where G is the one-sided extension of
R = log sqrt(1 - |b|^2).  Everything is evaluated on a power-of-two grid
with two transform passes:

    1. sample R on the grid, transform to r-hat;
    2. keep the zero mode, discard positive frequencies, double negative
       ones to get G-hat;
    3. sample b * exp(-G-hat), transform, keep indices 0..d.

The coefficients of b/a are pure imaginary in exact arithmetic, so the
tiny real residue left by floating point is measured and then projected
away, keeping downstream Hankel blocks exactly anti-Hermitian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    MarginViolationError,
    SingularFactorizationError,
    SizingError,
)
from .fourier import (
    UnitCircleGrid,
    analytic_projection,
    dft_on_roots,
    evaluate_laurent_on_roots,
)
from .laurent import LaurentPoly

#: absolute slack on the sampled margin check (mirrors the construction
#: slack on targets: rounded coefficients must not abort a valid promise)
MARGIN_SLACK = 1e-12

_MAX_GRID = 1 << 62


def select_grid_size(d: int, eta: float, eps: float) -> int:
    """Smallest power-of-two grid meeting the accuracy budget.

    The discretization must satisfy

        N >= (8d/eta) * log(576 d^2 / (eta^4 eps)),

    which guarantees every returned coefficient is within the internal
    budget eps' = eps*eta^2/(12d) of the true one, and in turn every phase
    within eps.  The bound always exceeds 2d/eta, which the error analysis
    also needs.
    """
    d = int(d)
    if d < 1:
        raise DomainError("d must be >= 1")
    if not 0.0 < eta <= 0.5:
        raise DomainError(f"eta must lie in (0, 0.5], got {eta}")
    if not 0.0 < eps < 1.0:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    bound = (8.0 * d / eta) * math.log(576.0 * d * d / (eta**4 * eps))
    if not bound < _MAX_GRID:
        raise SizingError(f"required grid size {bound:.3e} overflows")
    n = 2
    while n < bound or n <= 2.0 * d / eta:
        n *= 2
    return n


@dataclass(frozen=True, eq=False)
class WeissResult:
    """Coefficients c-hat_0..c-hat_d of b/a plus run diagnostics.

    ``residual_real_part`` is the largest |Re| over the returned indices
    *before* the imaginary projection; it should sit at the rounding floor
    (<= 1e-10 relative) for any valid input.
    """

    coeffs: np.ndarray
    grid_size: int
    eta: float
    eps: float
    residual_real_part: float

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    @property
    def eps_prime(self) -> float:
        """Per-coefficient accuracy budget implied by the grid rule."""
        return self.eps * self.eta**2 / (12.0 * max(self.d, 1))


def _symmetric_degree(b: LaurentPoly) -> int:
    if b.lo != -b.hi:
        raise DomainError(
            f"b must have symmetric support [-d, d], got [{b.lo}, {b.hi}]"
        )
    return b.hi


def _validate_b(b: LaurentPoly) -> LaurentPoly:
    d = _symmetric_degree(b)
    scale = float(np.max(np.abs(b.coeffs)))
    if scale == 0.0:
        return b
    if float(np.max(np.abs(b.coeffs.real))) > 1e-12 * scale:
        raise DomainError("b must have pure imaginary coefficients")
    sym = b.coeffs - b.coeffs[::-1]
    if float(np.max(np.abs(sym))) > 1e-12 * scale:
        raise DomainError("b must satisfy the coefficient symmetry b_j = b_-j")
    # exact-project so downstream guarantees (anti-Hermitian blocks) are exact
    imag = 0.5 * (b.coeffs.imag + b.coeffs.imag[::-1])
    return LaurentPoly(-d, 1j * imag)


def weiss_coefficients(b: LaurentPoly, eta: float, eps: float,
                       N_override: int | None = None) -> WeissResult:
    """Run the two-pass construction of the coefficients of b/a.

    Parameters
    ----------
    b : LaurentPoly
        Pure imaginary, index-symmetric, support [-d, d].
    eta : float
        Margin promise: sampled |b| must stay below 1 - eta (+ slack).
    eps : float
        Phase-level accuracy budget used to pick the grid.
    N_override : int, optional
        Explicit power-of-two grid size, bypassing the accuracy rule.

    Raises
    ------
    MarginViolationError
        If a sampled |b(z_l)| exceeds 1 - eta + slack (reports the node).
    SingularFactorizationError
        If |b| >= 1 somewhere, so the log is not finite.
    """
    if not 0.0 < eta <= 0.5:
        raise DomainError(f"eta must lie in (0, 0.5], got {eta}")
    b = _validate_b(b)
    d = b.hi
    if N_override is not None:
        n = int(N_override)
        if n < 2 or (n & (n - 1)) != 0:
            raise SizingError(f"N_override must be a power of two >= 2, got {n}")
        if n <= 2 * d:
            raise SizingError(f"N_override = {n} aliases a degree-{d} input")
    else:
        n = select_grid_size(max(d, 1), eta, eps)
    grid = UnitCircleGrid(n)

    samples = evaluate_laurent_on_roots(b, grid)
    mags = np.abs(samples)
    worst = int(np.argmax(mags))
    if mags[worst] >= 1.0:
        raise SingularFactorizationError(worst, mags[worst])
    limit = 1.0 - eta + MARGIN_SLACK
    if mags[worst] > limit:
        raise MarginViolationError(worst, mags[worst], limit)

    log_modulus = 0.5 * np.log1p(-(mags**2))
    del mags
    r_hat = dft_on_roots(log_modulus)
    del log_modulus
    g_hat = analytic_projection(r_hat)
    del r_hat
    g_samples = evaluate_laurent_on_roots(g_hat, grid)
    del g_hat
    ratio = samples * np.exp(-g_samples)
    del samples, g_samples

    c_hat = dft_on_roots(ratio).slice(0, d)
    del ratio
    scale = float(np.max(np.abs(c_hat)))
    residual = float(np.max(np.abs(c_hat.real)))
    return WeissResult(
        coeffs=1j * c_hat.imag,
        grid_size=n,
        eta=float(eta),
        eps=float(eps),
        residual_real_part=residual if scale > 0.0 else 0.0,
    )


@dataclass(frozen=True, eq=False)
class DecayReport:
    """Per-index slack against the coefficient decay bound r^(d-j)/eta."""

    bounds: np.ndarray
    magnitudes: np.ndarray
    margins: np.ndarray
    growth_rate: float

    @property
    def min_margin(self) -> float:
        return float(np.min(self.margins))


def coefficient_decay_check(result: WeissResult) -> DecayReport:
    """Check |c-hat_j| <= r^(d-j)/eta with r^(2d) = 1/(1 - eta).

    The bound follows from b/a extending analytically to the annulus
    r^-1 < |z| < r with modulus at most r^d/eta.  Margins should all be
    nonnegative up to rounding (>= -1e-9).
    """
    d = result.d
    eta = result.eta
    r = (1.0 - eta) ** (-1.0 / (2.0 * d)) if d >= 1 else 1.0
    j = np.arange(d + 1)
    bounds = r ** (d - j) / eta
    magnitudes = np.abs(result.coeffs)
    return DecayReport(
        bounds=bounds,
        magnitudes=magnitudes,
        margins=bounds - magnitudes,
        growth_rate=r,
    )
