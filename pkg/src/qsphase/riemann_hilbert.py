"""Per-index phase extraction from the coefficients of b/a.

For each k the coefficients c-hat_k..c-hat_d fill a Hankel block with
zeros below the secondary diagonal.  The block is pure imaginary and
symmetric, hence anti-Hermitian, so I minus its square is a real
symmetric positive-definite matrix with eigenvalues >= 1.  Solving

    (I - Xi_k^2) [a_k, b_k] = [e_0, Xi_k e_0]

and taking the leading entries gives psi_k = arctan(-i b_k0 / a_k0).
Every index is independent of the others, so the loop over k is
embarrassingly parallel and deterministic for any worker count.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.linalg import hankel
from scipy.linalg.lapack import dpotrf, dpotrs

from .errors import (
    DomainError,
    InvariantViolationError,
    NumericalDegeneracyError,
    PhaseSolveError,
)
from .target import PhaseFactors
from .weiss import WeissResult

#: relative residual each SPD solve must reach (one refinement step is
#: allowed before giving up)
SOLVE_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class HankelSystem:
    """The size-(d-k+1) Hankel block for phase index k.

    Entry (i, j) equals the coefficient at index i+j+k when that is at
    most d and zero otherwise; the block is symmetric with pure imaginary
    entries.
    """

    k: int
    first_column: np.ndarray
    eta: float

    @property
    def n(self) -> int:
        return len(self.first_column)

    def matrix(self) -> np.ndarray:
        """Dense complex block (anti-Hermitian)."""
        return hankel(self.first_column)

    def imag_matrix(self) -> np.ndarray:
        """Real symmetric X with block = i*X."""
        return hankel(self.first_column.imag)


@dataclass(frozen=True, eq=False)
class FactorPair:
    """Leading data of the one-sided factor at index k.

    ``a0`` is real with a0 >= eta up to solver tolerance; ``b0`` is pure
    imaginary with |b0| <= 1 up to tolerance.  The full solution vectors
    are kept for diagnostics.
    """

    a0: float
    b0: complex
    a_vec: np.ndarray
    b_vec: np.ndarray


def build_hankel(coeffs: WeissResult, k: int) -> HankelSystem:
    """Hankel block for phase index k, 0 <= k <= d."""
    k = int(k)
    if not 0 <= k <= coeffs.d:
        raise DomainError(f"k = {k} outside [0, {coeffs.d}]")
    return HankelSystem(k=k, first_column=coeffs.coeffs[k:].copy(),
                        eta=coeffs.eta)


def _spd_solve(spd: np.ndarray, rhs: np.ndarray, k: int):
    """Cholesky solve with a residual gate and one refinement step."""
    chol, info = dpotrf(spd, lower=1, clean=0, overwrite_a=0)
    if info != 0:
        raise NumericalDegeneracyError(
            f"Cholesky failed at phase index {k}: leading minor of order "
            f"{info} is not positive definite",
            phase_index=k, leading_minor=int(info),
        )
    x, info = dpotrs(chol, rhs, lower=1)
    if info != 0:
        raise NumericalDegeneracyError(
            f"triangular solve failed at phase index {k} (info={info})",
            phase_index=k,
        )
    rhs_norm = np.linalg.norm(rhs, axis=0)
    for _ in range(2):
        res = rhs - spd @ x
        res_norm = np.linalg.norm(res, axis=0)
        if np.all(res_norm <= SOLVE_RTOL * rhs_norm):
            return x, chol
        dx, info = dpotrs(chol, res, lower=1)
        if info != 0:
            break
        x = x + dx
    res_norm = np.linalg.norm(rhs - spd @ x, axis=0)
    if not np.all(res_norm <= SOLVE_RTOL * rhs_norm):
        raise NumericalDegeneracyError(
            f"solve at phase index {k} did not reach relative residual "
            f"{SOLVE_RTOL:g} (got {np.max(res_norm / np.maximum(rhs_norm, 1e-300)):.3e})",
            phase_index=k,
        )
    return x, chol


def solve_phase(system: HankelSystem):
    """Solve the reduced SPD system and extract the phase.

    Returns
    -------
    (FactorPair, float)
        Leading factor data and psi_k in (-pi/2, pi/2).
    """
    x_imag = system.imag_matrix()
    n = system.n
    spd = np.eye(n) + x_imag @ x_imag
    rhs = np.empty((n, 2))
    rhs[:, 0] = 0.0
    rhs[0, 0] = 1.0
    rhs[:, 1] = x_imag[:, 0]
    sol, _ = _spd_solve(spd, rhs, system.k)
    a0 = float(sol[0, 0])
    if a0 <= 0.0:
        raise InvariantViolationError(
            f"leading entry a0 = {a0:.17g} at phase index {system.k} is not "
            "positive; the factorization guarantee a0 >= eta is broken"
        )
    # b-column of the complex system is i times the real solve
    b0_imag = float(sol[0, 1])
    psi = math.atan2(b0_imag, a0)
    pair = FactorPair(a0=a0, b0=1j * b0_imag,
                      a_vec=sol[:, 0].copy(), b_vec=1j * sol[:, 1])
    return pair, psi


def all_phases(coeffs: WeissResult, workers: int = 1) -> PhaseFactors:
    """Phases psi_0..psi_d, each solved independently.

    The output is identical for any worker count; per-index failures are
    aggregated into a PhaseSolveError carrying the failing indices.
    """
    workers = int(workers)
    if workers < 1:
        raise DomainError("workers must be >= 1")
    d = coeffs.d

    def solve_k(k):
        return solve_phase(build_hankel(coeffs, k))[1]

    values = np.empty(d + 1)
    failures = []
    if workers == 1:
        for k in range(d + 1):
            try:
                values[k] = solve_k(k)
            except Exception as exc:  # aggregated below, never dropped
                failures.append((k, exc))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {k: pool.submit(solve_k, k) for k in range(d + 1)}
        for k in range(d + 1):
            try:
                values[k] = futures[k].result()
            except Exception as exc:
                failures.append((k, exc))
    if failures:
        raise PhaseSolveError(failures)
    meta = {
        "d": d,
        "eta": coeffs.eta,
        "eps": coeffs.eps,
        "N": coeffs.grid_size,
        "timestamp": time.time(),
    }
    return PhaseFactors(values, meta)


@dataclass(frozen=True, eq=False)
class ConditionReport:
    """Spectral-norm diagnostics for one Hankel block."""

    norm_estimate: float
    norm_bound: float
    spd_eigenvalue_bracket: tuple
    iterations: int


def condition_report(system: HankelSystem, max_iter: int = 200,
                     rtol: float = 1e-6) -> ConditionReport:
    """Power-iteration estimate of ||Xi_k|| plus the implied SPD bracket.

    Diagnostics only; nothing here gates the solve.  The estimate is
    compared against the a-priori bound ||b/a||_inf <= 1/sqrt(eta), and
    the eigenvalues of I - Xi_k^2 lie in [1, 1 + ||Xi_k||^2].
    """
    x_imag = system.imag_matrix()
    rng = np.random.default_rng(0)  # fixed seed: deterministic diagnostics
    v = rng.standard_normal(system.n)
    v /= np.linalg.norm(v)
    estimate = 0.0
    iterations = 0
    for iterations in range(1, max_iter + 1):
        w = x_imag @ (x_imag @ v)
        norm_w = np.linalg.norm(w)
        if norm_w == 0.0:
            estimate = 0.0
            break
        new_estimate = math.sqrt(float(v @ w))
        v = w / norm_w
        if abs(new_estimate - estimate) <= rtol * max(new_estimate, 1e-300):
            estimate = new_estimate
            break
        estimate = new_estimate
    return ConditionReport(
        norm_estimate=estimate,
        norm_bound=1.0 / math.sqrt(system.eta),
        spd_eigenvalue_bracket=(1.0, 1.0 + estimate**2),
        iterations=iterations,
    )
