"""Phase factors for even polynomial targets via spectral factorization.

The pipeline: an even Chebyshev target f maps to the pure imaginary
Laurent polynomial b(z) = i*f(cos theta) on the unit circle; an FFT-based
outer-function construction produces the Fourier coefficients of b/a; a
family of independent symmetric positive-definite Hankel solves then
yields each phase psi_k.  Forward maps (the unitary recursion, the 2x2
scattering product, the nonlinear Plancherel identity) validate the
result.
"""

from .errors import (
    AliasingError,
    DimensionMismatchError,
    DomainError,
    InvariantViolationError,
    MarginViolationError,
    NumericalDegeneracyError,
    PhaseSolveError,
    PoleError,
    QsphaseError,
    SingularFactorizationError,
    SizingError,
)
from .fourier import (
    SpectralCoefficients,
    UnitCircleGrid,
    analytic_projection,
    dft_on_roots,
    evaluate_laurent_on_roots,
    idft_to_samples,
)
from .laurent import LaurentPoly
from .nlft import (
    SU2LaurentPair,
    nlft_forward,
    phases_to_sequence,
    plancherel_residual,
    qsp_unitary,
    reconstruct_f,
    roundtrip_error,
)
from .riemann_hilbert import (
    ConditionReport,
    FactorPair,
    HankelSystem,
    all_phases,
    build_hankel,
    condition_report,
    solve_phase,
)
from .target import (
    ChebyshevTarget,
    PhaseFactors,
    eval_f,
    jacobi_anger_target,
    random_phase_target,
    sup_norm_estimate,
    szego_integral,
    szego_integral_converged,
    szego_norm,
    target_from_phases,
    to_laurent_b,
)
from .weiss import (
    DecayReport,
    WeissResult,
    coefficient_decay_check,
    select_grid_size,
    weiss_coefficients,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
