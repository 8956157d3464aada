import numpy as np
import pytest
from numpy.testing import assert_allclose

from qsphase.laurent import LaurentPoly


def random_poly(rng, lo=-4, hi=5):
    return LaurentPoly(lo, rng.standard_normal(hi - lo + 1)
                       + 1j * rng.standard_normal(hi - lo + 1))


def test_coeff_indexing():
    p = LaurentPoly(-1, [1.0, 2.0, 3.0])
    assert p.hi == 1
    assert p.coeff(-1) == 1.0
    assert p.coeff(1) == 3.0
    assert p.coeff(7) == 0.0


def test_evaluation_matches_sum():
    rng = np.random.default_rng(1)
    p = random_poly(rng)
    z = np.exp(1j * rng.uniform(0, 2 * np.pi, 16))
    direct = sum(p.coeff(j) * z**j for j in range(p.lo, p.hi + 1))
    assert_allclose(p(z), direct, rtol=1e-13)


def test_arithmetic_agrees_with_pointwise():
    rng = np.random.default_rng(2)
    p, q = random_poly(rng), random_poly(rng, lo=-2, hi=3)
    z = np.exp(1j * rng.uniform(0, 2 * np.pi, 8))
    assert_allclose((p + q)(z), p(z) + q(z), rtol=1e-12)
    assert_allclose((p - q)(z), p(z) - q(z), rtol=1e-12)
    assert_allclose((p * q)(z), p(z) * q(z), rtol=1e-12)
    assert_allclose(p.shift(3)(z), z**3 * p(z), rtol=1e-12)
    assert_allclose(p.scale(2j)(z), 2j * p(z), rtol=1e-12)


def test_star_is_conjugate_reflection():
    rng = np.random.default_rng(3)
    p = random_poly(rng)
    z = np.exp(1j * rng.uniform(0, 2 * np.pi, 8))
    assert_allclose(p.star()(z), np.conj(p(np.conj(1 / z))), rtol=1e-12)
    # on the circle, star is plain conjugation of the values
    assert_allclose(p.star()(z), np.conj(p(z)), rtol=1e-12)


def test_trim():
    p = LaurentPoly(-2, [0.0, 1.0, 0.0, 2.0, 0.0])
    t = p.trim()
    assert (t.lo, t.hi) == (-1, 1)
    assert t.coeff(0) == 0.0
    assert LaurentPoly(0, [0.0]).trim().coeffs.tolist() == [0.0]


def test_rejects_empty():
    with pytest.raises(ValueError):
        LaurentPoly(0, np.array([]))
