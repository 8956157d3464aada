"""Forward maps used to validate computed phases.

Two independent routes reconstruct the target from a phase sequence: the
unitary recursion in the x variable, and the ordered 2x2 product over the
tangent sequence F_n = i*tan(psi_|n|) in the z variable.  They are linked
by i*Im[u_d(cos theta)] = b(e^{2i theta}), which the tests sample.  The
nonlinear Plancherel identity supplies a scalar consistency check that
needs no ground-truth phases at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .laurent import LaurentPoly
from .target import (
    ChebyshevTarget,
    PhaseFactors,
    eval_f,
    szego_integral_converged,
)


@dataclass(frozen=True, eq=False)
class SU2LaurentPair:
    """A pair (a, b) of Laurent polynomials with a*a^* + b*b^* = 1 on |z|=1."""

    a: LaurentPoly
    b: LaurentPoly

    def det_residual(self, samples: int = 64, seed: int = 0) -> float:
        """Max deviation of the determinant identity at random circle points."""
        rng = np.random.default_rng(seed)
        z = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, samples))
        det = self.a(z) * self.a.star()(z) + self.b(z) * self.b.star()(z)
        return float(np.max(np.abs(det - 1.0)))


def _unitaries(xs: np.ndarray, psis: np.ndarray) -> np.ndarray:
    """Stacked 2x2 unitaries of the symmetric recursion, one per x."""
    xs = np.asarray(xs, dtype=float)
    w_off = 1j * np.sqrt(1.0 - xs**2)
    ph0 = np.exp(1j * psis[0])
    u11 = np.full_like(xs, ph0, dtype=complex)
    u12 = np.zeros_like(u11)
    u21 = np.zeros_like(u11)
    u22 = np.full_like(xs, np.conj(ph0), dtype=complex)
    for psi in psis[1:]:
        # V = W U W, entrywise for the symmetric W(x)
        v11 = xs * (xs * u11 + w_off * u21) + w_off * (xs * u12 + w_off * u22)
        v12 = w_off * (xs * u11 + w_off * u21) + xs * (xs * u12 + w_off * u22)
        v21 = xs * (w_off * u11 + xs * u21) + w_off * (w_off * u12 + xs * u22)
        v22 = w_off * (w_off * u11 + xs * u21) + xs * (w_off * u12 + xs * u22)
        ph = np.exp(1j * psi)
        u11 = ph * v11 * ph
        u12 = ph * v12 * np.conj(ph)
        u21 = np.conj(ph) * v21 * ph
        u22 = np.conj(ph) * v22 * np.conj(ph)
    out = np.empty(xs.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = u11
    out[..., 0, 1] = u12
    out[..., 1, 0] = u21
    out[..., 1, 1] = u22
    return out


def qsp_unitary(x: float, psis: PhaseFactors) -> np.ndarray:
    """The 2x2 unitary U_d(x) of the symmetric phase recursion.

    U_0 = e^{i psi_0 Z} and U_k = e^{i psi_k Z} W(x) U_{k-1} W(x) e^{i psi_k Z}
    with W(x) = [[x, i*sqrt(1-x^2)], [i*sqrt(1-x^2), x]].  The output is
    unitary and complex symmetric up to rounding.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError("x must lie in [0, 1]")
    return _unitaries(np.array([float(x)]), psis.values)[0]


def reconstruct_f(psis: PhaseFactors, xs) -> np.ndarray:
    """Im of the upper-left unitary entry at each point of xs."""
    arr = np.asarray(xs, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError("evaluation points must lie in [0, 1]")
    return _unitaries(np.atleast_1d(arr), psis.values)[..., 0, 0].imag


def phases_to_sequence(psis: PhaseFactors) -> LaurentPoly:
    """The symmetric tangent sequence F_n = i*tan(psi_|n|), n = -d..d."""
    vals = psis.values
    if np.any(np.abs(vals) >= np.pi / 2):
        bad = int(np.argmax(np.abs(vals)))
        raise PoleError(f"|psi_{bad}| = pi/2 has no finite tangent")
    d = psis.d
    tans = np.tan(vals)
    full = np.concatenate([tans[:0:-1], tans])  # indices -d..d
    return LaurentPoly(-d, 1j * full)


def nlft_forward(f_seq: LaurentPoly) -> SU2LaurentPair:
    """Ordered product of the normalized 2x2 factors of a finite sequence.

    Starting from the identity pair (1, 0), each index n contributes the
    factor (1, F_n z^n; -conj(F_n) z^-n, 1) / sqrt(1 + |F_n|^2), applied
    on the right in ascending n.  Products use direct coefficient
    convolution: this is a validation path, so exact support tracking
    beats speed.
    """
    a = LaurentPoly.one()
    b = LaurentPoly.zero()
    for offset, f_n in enumerate(f_seq.coeffs):
        if f_n == 0.0:
            continue
        n = f_seq.lo + offset
        gamma = 1.0 / math.sqrt(1.0 + abs(f_n) ** 2)
        new_a = (a - b.shift(-n).scale(np.conj(f_n))).scale(gamma)
        new_b = (a.shift(n).scale(f_n) + b).scale(gamma)
        a, b = new_a, new_b
    return SU2LaurentPair(a=a, b=b)


def plancherel_residual(psis: PhaseFactors, target: ChebyshevTarget) -> float:
    """Relative gap in the nonlinear Plancherel identity.

    Left side: sum over all integers of log(1 + tan^2 psi_|k|), i.e. the
    k = 0 term once and each k >= 1 term twice, accumulated in ascending
    k with compensated summation (terms span many magnitudes when the
    phases decay).  Right side: -(2/pi) int_0^1 log|1 - f^2| dx/sqrt(1-x^2).
    """
    vals = psis.values
    if np.any(np.abs(vals) >= np.pi / 2):
        raise PoleError("phases on the boundary have a divergent sum")
    terms = np.log1p(np.tan(vals) ** 2)
    terms[1:] *= 2.0
    lhs = math.fsum(terms)
    rhs = szego_integral_converged(target)
    return abs(lhs - rhs) / max(abs(rhs), 1e-300)


def roundtrip_error(psis: PhaseFactors, target: ChebyshevTarget,
                    nodes: int) -> float:
    """Max |Im u_d(x) - f(x)| over Chebyshev nodes in [0, 1].

    The nodes are x_j = cos(pi*(2j+1)/(4*nodes)), j = 0..nodes-1: the
    positive half of the degree-2*nodes Chebyshev points.
    """
    n = int(nodes)
    if n < 2:
        raise DomainError("nodes must be >= 2")
    j = np.arange(n)
    xs = np.cos(np.pi * (2 * j + 1) / (4 * n))
    recon = reconstruct_f(psis, xs)
    exact = eval_f(target, xs)
    return float(np.max(np.abs(recon - exact)))
