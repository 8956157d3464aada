"""Discrete Fourier machinery on the Nth roots of unity.

Conventions
-----------
The grid nodes are z_l = exp(2*pi*i*l/N) in counterclockwise order.  The
forward transform uses the 1/N normalization

    coeff(j) = (1/N) * sum_l z_l**(-j) * u(z_l),

and coefficients are held in a centered, signed-index view covering
j = -N/2 .. N/2 - 1.  For even N the endpoint frequency is assigned to the
negative side, j = -N/2.  Grid sizes are restricted to powers of two.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AliasingError, SizingError
from .laurent import LaurentPoly

#: samples whose spectrum violates Hermitian symmetry by more than this
#: (relative to the largest coefficient) are rejected by analytic_projection
REALNESS_RTOL = 1e-8


def _require_power_of_two(n: int) -> int:
    n = int(n)
    if n < 2 or (n & (n - 1)) != 0:
        raise SizingError(f"grid size must be a power of two >= 2, got {n}")
    return n


@dataclass(frozen=True)
class UnitCircleGrid:
    """The Nth roots of unity, N a power of two."""

    size: int

    def __post_init__(self):
        object.__setattr__(self, "size", _require_power_of_two(self.size))

    def nodes(self) -> np.ndarray:
        """The nodes exp(2*pi*i*l/N), l = 0..N-1."""
        return np.exp(2j * np.pi * np.arange(self.size) / self.size)


@dataclass(frozen=True, eq=False)
class SpectralCoefficients:
    """Transform output in centered index order.

    ``values[p]`` is the coefficient at signed index ``p - N//2``, so the
    storage runs j = -N/2, ..., -1, 0, 1, ..., N/2 - 1.
    """

    values: np.ndarray
    grid_size: int

    def __post_init__(self):
        n = _require_power_of_two(self.grid_size)
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (n,):
            raise SizingError(
                f"expected {n} coefficients, got shape {vals.shape}"
            )
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "grid_size", n)

    @property
    def index_min(self) -> int:
        return -(self.grid_size // 2)

    @property
    def index_max(self) -> int:
        return self.grid_size // 2 - 1

    def coeff(self, j: int) -> complex:
        if not self.index_min <= j <= self.index_max:
            raise IndexError(f"index {j} outside [{self.index_min}, {self.index_max}]")
        return complex(self.values[j + self.grid_size // 2])

    def slice(self, j_lo: int, j_hi: int) -> np.ndarray:
        """Coefficients j_lo..j_hi inclusive as a contiguous array."""
        if j_lo > j_hi:
            raise IndexError("empty index range")
        if j_lo < self.index_min or j_hi > self.index_max:
            raise IndexError(
                f"range [{j_lo}, {j_hi}] outside [{self.index_min}, {self.index_max}]"
            )
        off = self.grid_size // 2
        return self.values[j_lo + off : j_hi + off + 1].copy()


def dft_on_roots(samples) -> SpectralCoefficients:
    """Forward transform of samples on the roots of unity.

    Parameters
    ----------
    samples : array_like
        Values u(z_l) for l = 0..N-1; N must be a power of two >= 2.

    Returns
    -------
    SpectralCoefficients
        Coefficients under the 1/N-forward normalization, centered order.
    """
    u = np.asarray(samples, dtype=complex)
    if u.ndim != 1:
        raise SizingError("samples must be a 1-d array")
    n = _require_power_of_two(len(u))
    values = np.fft.fftshift(np.fft.fft(u)) / n
    return SpectralCoefficients(values, n)


def idft_to_samples(spec: SpectralCoefficients) -> np.ndarray:
    """Inverse of :func:`dft_on_roots`: recover the samples u(z_l)."""
    return np.fft.ifft(np.fft.ifftshift(spec.values)) * spec.grid_size


def evaluate_laurent_on_roots(p: LaurentPoly, grid: UnitCircleGrid,
                              method: str = "fft") -> np.ndarray:
    """Evaluate a Laurent polynomial at every grid node.

    The evaluation is alias-free when the index span fits in one period,
    i.e. ``p.hi - p.lo < N``; for a symmetric range [-d, d] this is the
    usual requirement N > 2d.

    Parameters
    ----------
    p : LaurentPoly
    grid : UnitCircleGrid
    method : {"fft", "direct"}
        "fft" packs the coefficients into natural transform order and runs
        one inverse FFT (O(N log N)); "direct" is Horner accumulation
        (O(N * len(p))), kept as the cross-checking path.

    Returns
    -------
    ndarray
        p(z_l) for l = 0..N-1.
    """
    n = grid.size
    if p.hi - p.lo >= n:
        raise AliasingError(
            f"index span [{p.lo}, {p.hi}] needs a grid larger than "
            f"{p.hi - p.lo} nodes, got {n}"
        )
    if method == "direct":
        return p(grid.nodes())
    if method != "fft":
        raise ValueError(f"unknown method {method!r}")
    packed = np.zeros(n, dtype=complex)
    idx = np.arange(p.lo, p.hi + 1) % n
    packed[idx] = p.coeffs
    return np.fft.ifft(packed) * n


def analytic_projection(r_hat: SpectralCoefficients) -> LaurentPoly:
    """One-sided completion used by the outer-function construction.

    Given the spectrum of real samples R, returns the Laurent polynomial

        G(z) = r_0 + 2 * sum_{l=1}^{N/2} r_{-l} z**(-l),

    i.e. positive frequencies are discarded, negative ones doubled, and the
    zero mode kept.  On the circle this realizes R - i*H(R) with H the
    Hilbert transform, so exp(G) is the outer function with modulus exp(R).

    Raises
    ------
    ValueError
        If the spectrum is not Hermitian-symmetric to within
        ``REALNESS_RTOL`` (i.e. the samples were not real).
    """
    n = r_hat.grid_size
    half = n // 2
    vals = r_hat.values
    # Hermitian symmetry <=> real samples; the j = -N/2 mode pairs with itself.
    scale = float(np.max(np.abs(vals)))
    if scale > 0.0:
        sym = vals[1:] - np.conj(vals[1:][::-1])
        worst = max(float(np.max(np.abs(sym))), abs(vals[0].imag))
        if worst > REALNESS_RTOL * scale:
            raise ValueError(
                "spectrum is not Hermitian-symmetric "
                f"(residue {worst:.3e} vs scale {scale:.3e}); "
                "analytic_projection requires real-valued samples"
            )
    coeffs = np.zeros(half + 1, dtype=complex)
    coeffs[:half] = 2.0 * vals[:half]  # indices -N/2 .. -1
    coeffs[half] = vals[half]          # index 0
    return LaurentPoly(-half, coeffs)
