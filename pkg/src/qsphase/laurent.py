"""Complex Laurent polynomials on a contiguous integer index range.

A polynomial is stored as the coefficient array for indices ``lo..hi``
inclusive; index ``j`` lives at ``coeffs[j - lo]``.  Instances are treated
as immutable values: operations return new objects.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    lo: int
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficient array must be 1-d and nonempty")
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "lo", int(self.lo))

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(0, np.zeros(1, dtype=complex))

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(0, np.ones(1, dtype=complex))

    @staticmethod
    def monomial(coefficient: complex, index: int) -> "LaurentPoly":
        return LaurentPoly(index, np.array([coefficient], dtype=complex))

    def coeff(self, j: int) -> complex:
        """Coefficient at index ``j`` (zero outside the stored range)."""
        if self.lo <= j <= self.hi:
            return complex(self.coeffs[j - self.lo])
        return 0.0 + 0.0j

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by z**m."""
        return LaurentPoly(self.lo + m, self.coeffs.copy())

    def star(self) -> "LaurentPoly":
        """The involution p*(z) = conj(p(1/conj(z))): conjugate, negate indices."""
        return LaurentPoly(-self.hi, np.conj(self.coeffs[::-1]))

    def scale(self, c: complex) -> "LaurentPoly":
        return LaurentPoly(self.lo, self.coeffs * c)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = np.zeros(hi - lo + 1, dtype=complex)
        out[self.lo - lo : self.lo - lo + len(self.coeffs)] += self.coeffs
        out[other.lo - lo : other.lo - lo + len(other.coeffs)] += other.coeffs
        return LaurentPoly(lo, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + other.scale(-1.0)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(
            self.lo + other.lo, np.convolve(self.coeffs, other.coeffs)
        )

    def trim(self, tol: float = 0.0) -> "LaurentPoly":
        """Drop leading/trailing coefficients with magnitude <= tol."""
        mask = np.abs(self.coeffs) > tol
        if not mask.any():
            return LaurentPoly.zero()
        first = int(np.argmax(mask))
        last = len(mask) - 1 - int(np.argmax(mask[::-1]))
        return LaurentPoly(self.lo + first, self.coeffs[first : last + 1].copy())

    def __call__(self, z):
        """Evaluate at the points ``z`` (scalar or array), Horner style."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z) + self.coeffs[-1]
        for c in self.coeffs[-2::-1]:
            acc = acc * z + c
        return acc * z**self.lo
