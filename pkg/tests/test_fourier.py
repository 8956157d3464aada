import numpy as np
import pytest
from numpy.testing import assert_allclose

from qsphase.errors import AliasingError, SizingError
from qsphase.fourier import (
    SpectralCoefficients,
    UnitCircleGrid,
    analytic_projection,
    dft_on_roots,
    evaluate_laurent_on_roots,
    idft_to_samples,
)
from qsphase.laurent import LaurentPoly


def direct_dft(samples):
    """O(N^2) oracle for the 1/N-forward transform, centered order."""
    n = len(samples)
    z = np.exp(2j * np.pi * np.arange(n) / n)
    out = np.empty(n, dtype=complex)
    for p, j in enumerate(range(-n // 2, n // 2)):
        out[p] = np.sum(z ** (-j) * samples) / n
    return out


class TestDftOnRoots:
    def test_constant_is_dc_only(self):
        spec = dft_on_roots(np.ones(16))
        assert spec.coeff(0) == pytest.approx(1.0)
        others = np.delete(spec.values, 16 // 2)
        assert np.max(np.abs(others)) < 1e-15

    def test_single_harmonic(self):
        n = 32
        z = np.exp(2j * np.pi * np.arange(n) / n)
        spec = dft_on_roots(z)
        assert spec.coeff(1) == pytest.approx(1.0)
        assert abs(spec.coeff(0)) < 1e-15
        assert abs(spec.coeff(2)) < 1e-15

    def test_cosine_harmonic_matches_direct_summation(self):
        # expected values computed with the O(N^2) defining formula
        n = 8
        z = np.exp(2j * np.pi * np.arange(n) / n)
        samples = 0.5j * (z + z**-1)
        expected = direct_dft(samples)
        spec = dft_on_roots(samples)
        assert_allclose(spec.values, expected, atol=1e-15)
        assert spec.coeff(1) == pytest.approx(0.5j, abs=1e-14)
        assert spec.coeff(-1) == pytest.approx(0.5j, abs=1e-14)
        mask = np.ones(n, bool)
        mask[[n // 2 - 1, n // 2 + 1]] = False
        assert np.max(np.abs(spec.values[mask])) < 1e-14

    def test_matches_direct_oracle_random(self):
        rng = np.random.default_rng(7)
        for n in (8, 16, 64):
            u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            assert_allclose(dft_on_roots(u).values, direct_dft(u),
                            rtol=1e-12, atol=1e-14)

    @pytest.mark.parametrize("n", [2**k for k in range(3, 21)])
    def test_roundtrip_bijection(self, n):
        rng = np.random.default_rng(n)
        u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        back = idft_to_samples(dft_on_roots(u))
        assert np.max(np.abs(back - u)) <= 1e-13 * np.max(np.abs(u))

    def test_parseval(self):
        rng = np.random.default_rng(11)
        for n in (8, 256, 4096):
            u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            spec = dft_on_roots(u)
            lhs = np.sum(np.abs(spec.values) ** 2)
            rhs = np.sum(np.abs(u) ** 2) / n
            assert lhs == pytest.approx(rhs, rel=1e-12)

    @pytest.mark.parametrize("n", [0, 1, 3, 6, 12, 100])
    def test_rejects_non_power_of_two(self, n):
        with pytest.raises(SizingError):
            dft_on_roots(np.ones(n))


class TestSpectralCoefficients:
    def test_index_range_and_slice(self):
        spec = dft_on_roots(np.arange(8.0))
        assert (spec.index_min, spec.index_max) == (-4, 3)
        assert_allclose(spec.slice(0, 3), spec.values[4:])
        with pytest.raises(IndexError):
            spec.coeff(4)
        with pytest.raises(IndexError):
            spec.slice(-5, 0)

    def test_rejects_wrong_length(self):
        with pytest.raises(SizingError):
            SpectralCoefficients(np.zeros(5), 8)


class TestEvaluateLaurent:
    def test_constant(self):
        grid = UnitCircleGrid(8)
        out = evaluate_laurent_on_roots(LaurentPoly.one(), grid)
        assert_allclose(out, np.ones(8), atol=1e-15)

    def test_cosine_values(self):
        p = LaurentPoly(-1, [1.0, 0.0, 1.0])  # z + z^-1
        out = evaluate_laurent_on_roots(p, UnitCircleGrid(4))
        assert_allclose(out, [2.0, 0.0, -2.0, 0.0], atol=1e-15)

    def test_monomial(self):
        grid = UnitCircleGrid(8)
        p = LaurentPoly.monomial(0.5j, -1)
        out = evaluate_laurent_on_roots(p, grid)
        assert_allclose(out, 0.5j * grid.nodes() ** -1, rtol=1e-14)

    def test_fft_and_direct_paths_agree(self):
        rng = np.random.default_rng(13)
        for _ in range(5):
            d = rng.integers(1, 12)
            p = LaurentPoly(-d, rng.standard_normal(2 * d + 1)
                            + 1j * rng.standard_normal(2 * d + 1))
            grid = UnitCircleGrid(64)
            fft_path = evaluate_laurent_on_roots(p, grid, method="fft")
            direct = evaluate_laurent_on_roots(p, grid, method="direct")
            assert np.max(np.abs(fft_path - direct)) <= \
                1e-12 * np.max(np.abs(direct))

    def test_aliasing_rejected(self):
        p = LaurentPoly(-3, np.ones(7))  # span 6 needs N > 6
        with pytest.raises(AliasingError):
            evaluate_laurent_on_roots(p, UnitCircleGrid(4))
        evaluate_laurent_on_roots(p, UnitCircleGrid(8))  # fine

    def test_grid_validation(self):
        with pytest.raises(SizingError):
            UnitCircleGrid(12)
        assert np.allclose(np.abs(UnitCircleGrid(16).nodes()), 1.0)


class TestAnalyticProjection:
    def test_constant_case(self):
        spec = dft_on_roots(np.full(8, 0.7))
        g = analytic_projection(spec)
        assert g.coeff(0) == pytest.approx(0.7)
        assert np.max(np.abs(g.coeffs[:-1])) < 1e-15

    def test_positive_discarded_negative_doubled(self):
        n = 8
        vals = np.zeros(n, dtype=complex)
        vals[n // 2 - 1] = 0.3   # index -1
        vals[n // 2 + 1] = 0.3   # index +1
        g = analytic_projection(SpectralCoefficients(vals, n))
        assert g.coeff(-1) == pytest.approx(0.6)
        assert g.coeff(0) == 0.0
        assert (g.lo, g.hi) == (-4, 0)

    def test_constant_log_modulus(self):
        # samples log sqrt(1 - 0.25), the constant |b| = 0.5 case
        samples = np.full(16, np.log(np.sqrt(0.75)))
        g = analytic_projection(dft_on_roots(samples))
        assert g.coeff(0) == pytest.approx(np.log(np.sqrt(0.75)), abs=1e-15)
        assert g.coeff(0) == pytest.approx(-0.14384103622589045, abs=1e-10)

    def test_rejects_complex_samples(self):
        spec = dft_on_roots(np.exp(2j * np.pi * np.arange(8) / 8))
        with pytest.raises(ValueError, match="real-valued"):
            analytic_projection(spec)

    def test_idempotent_in_effect(self):
        # redoing the construction from Re(G) must reproduce G: one-sided
        # support means the doubling exactly undoes the halving of Re.
        rng = np.random.default_rng(17)
        n = 64
        samples = rng.uniform(-1.0, -0.1, n)
        g = analytic_projection(dft_on_roots(samples))
        g_samples = evaluate_laurent_on_roots(g, UnitCircleGrid(n))
        again = analytic_projection(dft_on_roots(g_samples.real))
        assert (again.lo, again.hi) == (g.lo, g.hi)
        assert np.max(np.abs(again.coeffs - g.coeffs)) <= \
            1e-13 * np.max(np.abs(g.coeffs))
