"""Even Chebyshev targets and their norms, integrals and generators.

A target is f(x) = sum_k c_k T_{2k}(x) on [0, 1] with a certified margin
eta: the sup norm of f over a dense Chebyshev grid must not exceed
1 - eta (+ small slack).  The map to the unit circle substitutes
x = cos(theta), z = exp(2i*theta), under which f becomes the pure
imaginary Laurent polynomial b(z) = i*f(x) with b(z) = b(1/z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import chebyshev as _cheb

from .errors import DomainError, SingularFactorizationError
from .laurent import LaurentPoly

#: slack on the construction-time margin check (coefficients are usually
#: rounded versions of an exact object; tiny excursions must not abort)
MARGIN_SLACK = 1e-12

#: largest admissible margin; f == 0.5 has exactly this one
ETA_MAX = 0.5


def _eval_even_series(coeffs: np.ndarray, x) -> np.ndarray:
    # T_{2k}(x) = T_k(2x^2 - 1), so Clenshaw on the half-angle variable
    y = 2.0 * np.asarray(x, dtype=float) ** 2 - 1.0
    return _cheb.chebval(y, coeffs)


def _validation_grid(half_degree: int) -> int:
    return max(2048, 8 * half_degree + 1)


@dataclass(frozen=True, eq=False)
class ChebyshevTarget:
    """Even polynomial target with a certified sup-norm margin.

    Attributes
    ----------
    half_degree : int
        d; the polynomial has degree 2d.
    coeffs : ndarray
        c_0..c_d with f(x) = sum c_k T_{2k}(x).
    eta : float
        Promised margin, ||f||_inf <= 1 - eta, with eta in (0, 0.5].
    """

    half_degree: int
    coeffs: np.ndarray
    eta: float

    def __post_init__(self):
        d = int(self.half_degree)
        if d < 0:
            raise DomainError("half_degree must be nonnegative")
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != (d + 1,):
            raise DomainError(
                f"expected {d + 1} coefficients for half_degree {d}, "
                f"got shape {c.shape}"
            )
        if not np.all(np.isfinite(c)):
            raise DomainError("coefficients must be finite")
        eta = float(self.eta)
        if not 0.0 < eta <= ETA_MAX:
            raise DomainError(f"eta must lie in (0, {ETA_MAX}], got {eta}")
        object.__setattr__(self, "half_degree", d)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "eta", eta)
        estimate = self._grid_sup(_validation_grid(d))
        if estimate > 1.0 - eta + MARGIN_SLACK:
            raise DomainError(
                f"sup-norm estimate {estimate:.17g} exceeds 1 - eta = "
                f"{1.0 - eta:.17g}; margin promise cannot be certified"
            )

    def _grid_sup(self, grid_points: int) -> float:
        j = np.arange(grid_points)
        x = np.cos(np.pi * j / (grid_points - 1))
        x = x[x >= 0.0]
        return float(np.max(np.abs(_eval_even_series(self.coeffs, x))))


def eval_f(t: ChebyshevTarget, x):
    """Evaluate the target at x in [0, 1] (scalar or array), Clenshaw style."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError("evaluation points must lie in [0, 1]")
    out = _eval_even_series(t.coeffs, arr)
    if np.isscalar(x) or arr.ndim == 0:
        return float(out)
    return out


def to_laurent_b(t: ChebyshevTarget) -> LaurentPoly:
    """Map the target to b(z) = i*f(x) under x = cos(theta), z = e^{2i theta}.

    T_{2k}(cos theta) = cos(2k theta) = (z^k + z^-k)/2, so c_0 contributes
    whole at index 0 and each c_k (k >= 1) splits in half onto +-k.  The
    result has exact coefficient symmetry b_j = b_{-j} and exactly zero
    real parts, by construction.
    """
    d = t.half_degree
    coeffs = np.zeros(2 * d + 1, dtype=complex)
    coeffs[d] = 1j * t.coeffs[0]
    for k in range(1, d + 1):
        half = 0.5j * t.coeffs[k]
        coeffs[d + k] = half
        coeffs[d - k] = half
    return LaurentPoly(-d, coeffs)


def szego_norm(t: ChebyshevTarget) -> float:
    """Hilbert-space norm sqrt(c_0^2 + (1/2) sum_{k>=1} c_k^2).

    Equals the weighted L2 norm sqrt((2/pi) * int_0^1 f^2 dx/sqrt(1-x^2)).
    """
    c = t.coeffs
    return math.sqrt(float(c[0] ** 2 + 0.5 * np.sum(c[1:] ** 2)))


def szego_integral(t: ChebyshevTarget, quad_points: int) -> float:
    """-(2/pi) * int_0^1 log|1 - f(x)^2| dx/sqrt(1 - x^2) by quadrature.

    Uses Chebyshev-Gauss nodes, whose weight matches dx/sqrt(1-x^2)
    exactly; since f is even the integral over [0, 1] is half the
    symmetric one and the rule collapses to a plain node average.

    Raises
    ------
    SingularFactorizationError
        If |f| >= 1 at any quadrature node.
    """
    n = int(quad_points)
    if n < 1:
        raise DomainError("quad_points must be positive")
    i = np.arange(1, n + 1)
    x = np.abs(np.cos((2 * i - 1) * np.pi / (2 * n)))
    f = _eval_even_series(t.coeffs, x)
    if np.any(np.abs(f) >= 1.0):
        bad = int(np.argmax(np.abs(f)))
        raise SingularFactorizationError(bad, float(np.abs(f[bad])))
    return float(-np.mean(np.log1p(-(f**2))))


def szego_integral_converged(t: ChebyshevTarget, tol: float = 1e-10,
                             start: int = 4096, max_points: int = 1 << 22) -> float:
    """Szego integral refined by doubling the rule until it stabilizes."""
    n = int(start)
    value = szego_integral(t, n)
    while n < max_points:
        n *= 2
        refined = szego_integral(t, n)
        if abs(refined - value) < tol * max(1.0, abs(refined)):
            return refined
        value = refined
    return value


def sup_norm_estimate(t: ChebyshevTarget, grid_points: int) -> float:
    """Max of |f| over the Chebyshev points cos(pi*j/(grid_points-1)) in [0, 1]."""
    g = int(grid_points)
    if g < _validation_grid(t.half_degree):
        raise DomainError(
            f"grid_points must be at least max(2048, 8d+1) = "
            f"{_validation_grid(t.half_degree)}"
        )
    return t._grid_sup(g)


def _bessel_j_upto(order_max: int, x: float) -> np.ndarray:
    """J_0(x)..J_{order_max}(x) by backward recurrence with normalization.

    Forward recurrence is unstable once the order passes x, so the
    recurrence J_{m-1} = (2m/x) J_m - J_{m+1} is run downward from a
    start order well above both order_max and x, then scaled with the
    identity J_0 + 2*sum_{m>=1} J_{2m} = 1.
    """
    if x == 0.0:
        out = np.zeros(order_max + 1)
        out[0] = 1.0
        return out
    top = max(order_max, int(math.ceil(abs(x))))
    start = top + max(24, int(2.5 * math.sqrt(top)) + 8)
    if start % 2:
        start += 1
    jj = np.zeros(start + 2)
    jj[start + 1] = 0.0
    jj[start] = 1e-300
    for m in range(start, 0, -1):
        jj[m - 1] = (2.0 * m / x) * jj[m] - jj[m + 1]
        if abs(jj[m - 1]) > 1e250:  # rescale before overflow
            jj[: start + 2] /= 1e250
    norm = jj[0] + 2.0 * np.sum(jj[2 : start + 1 : 2])
    return jj[: order_max + 1] / norm


def jacobi_anger_target(tau: float, scale: float, eps0: float) -> ChebyshevTarget:
    """Truncated Chebyshev expansion of scale*cos(tau*x).

    cos(tau*x) = J_0(tau) + 2*sum_{k>=1} (-1)^k J_{2k}(tau) T_{2k}(x), and
    truncating at half-degree d = ceil((e*tau/2 + log(1/eps0)) / 2) keeps
    the error below eps0.  The margin is set to 1 - scale - eps0, capped
    at 0.5.
    """
    tau = float(tau)
    scale = float(scale)
    eps0 = float(eps0)
    if tau <= 0.0:
        raise DomainError("tau must be positive")
    if not 0.0 < scale < 1.0:
        raise DomainError("scale must lie in (0, 1)")
    if not 0.0 < eps0 < 1.0:
        raise DomainError("eps0 must lie in (0, 1)")
    if scale + eps0 >= 1.0:
        raise DomainError("scale + eps0 must stay below 1 for a positive margin")
    d = int(math.ceil((math.e * tau / 2.0 + math.log(1.0 / eps0)) / 2.0))
    bess = _bessel_j_upto(2 * d, tau)
    coeffs = np.empty(d + 1)
    coeffs[0] = scale * bess[0]
    k = np.arange(1, d + 1)
    coeffs[1:] = 2.0 * scale * (-1.0) ** k * bess[2 * k]
    eta = min(1.0 - scale - eps0, ETA_MAX)
    return ChebyshevTarget(d, coeffs, eta)


@dataclass(frozen=True, eq=False)
class PhaseFactors:
    """A finite phase sequence psi_0..psi_d with provenance metadata."""

    values: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1 or vals.size == 0:
            raise DomainError("phase array must be 1-d and nonempty")
        if not np.all(np.isfinite(vals)):
            raise DomainError("phases must be finite")
        if np.any(np.abs(vals) > np.pi / 2):
            raise DomainError("every phase must satisfy |psi| <= pi/2")
        object.__setattr__(self, "values", vals)

    @property
    def d(self) -> int:
        return len(self.values) - 1


def target_from_phases(phases: PhaseFactors) -> ChebyshevTarget:
    """The target a phase sequence generates exactly.

    Forward-evaluates the sequence through the 2x2 scattering product,
    reads the Chebyshev coefficients off the circle polynomial, and sets
    the margin from a dense grid estimate (capped at 0.5).
    """
    from .nlft import nlft_forward, phases_to_sequence

    b = nlft_forward(phases_to_sequence(phases)).b
    d = phases.d
    coeffs = np.zeros(d + 1)
    coeffs[0] = b.coeff(0).imag
    for k in range(1, d + 1):
        coeffs[k] = b.coeff(k).imag + b.coeff(-k).imag

    g = _validation_grid(d)
    x = np.cos(np.pi * np.arange(g) / (g - 1))
    sup = float(np.max(np.abs(_eval_even_series(coeffs, x[x >= 0.0]))))
    eta = min(1.0 - sup, ETA_MAX)
    if eta <= 0.0:
        raise DomainError(
            f"generated target has sup norm {sup:.17g} >= 1; "
            "shrink the phases"
        )
    return ChebyshevTarget(d, coeffs, eta)


def random_phase_target(length: int, seed: int, norm_cap: float,
                        damp_factor: float = 1.0, damp_ranges=()):
    """Draw a random phase sequence and the target it generates exactly.

    Phases are uniform on [-pi/2, pi/2], rescaled so their 1-norm does not
    exceed ``norm_cap``, then each inclusive index range in ``damp_ranges``
    is multiplied by ``damp_factor``.  The target is produced by the
    forward transform of the sequence, so the returned phases are exactly
    its maximal-solution phases (for small enough norm_cap).

    Returns
    -------
    (PhaseFactors, ChebyshevTarget)
    """
    length = int(length)
    if length < 1:
        raise DomainError("length must be >= 1")
    if not norm_cap > 0.0:
        raise DomainError("norm_cap must be positive")
    rng = np.random.default_rng(seed)
    psi = rng.uniform(-np.pi / 2, np.pi / 2, length)
    total = float(np.sum(np.abs(psi)))
    if total > norm_cap:
        psi *= norm_cap / total
    for lo, hi in damp_ranges:
        if not 0 <= lo <= hi <= length - 1:
            raise DomainError(f"damp range ({lo}, {hi}) outside [0, {length - 1}]")
        psi[lo : hi + 1] *= damp_factor

    phases = PhaseFactors(psi, meta={"d": length - 1, "seed": int(seed),
                                     "norm_cap": float(norm_cap)})
    return phases, target_from_phases(phases)
