import math

import numpy as np
import pytest

from pointweyl import (
    ExpDecay,
    PointConfig,
    RealSequence,
    collinear_config,
    gram_matrix,
    krein_coupling,
    sqrt_branch,
    triplet_matrices,
    weyl_boundary,
    weyl_imag,
    weyl_matrix,
    weyl_zero,
)
from pointweyl.errors import NumericalFailure
from pointweyl.weyl import weyl_matrix_kappa

from conftest import random_config

E1 = math.exp(-1)


def test_sqrt_branch():
    assert sqrt_branch(-1) == 1j
    assert sqrt_branch(-4) == 2j
    for z in [1 + 1j, 1 - 1j, -3 + 0.1j, -3 - 0.1j, -2 - 0.0j]:
        w = sqrt_branch(z)
        assert w.imag > 0
        assert w * w == pytest.approx(z, rel=1e-14)
    with pytest.raises(ValueError):
        sqrt_branch(2.0)
    with pytest.raises(ValueError):
        sqrt_branch(0.0)


def test_weyl_matrix_examples(one_point, two_points):
    np.testing.assert_array_equal(weyl_matrix(one_point, -1), [[-1]])
    np.testing.assert_allclose(weyl_matrix(two_points, -1), [[-1, E1], [E1, -1]], rtol=1e-15)
    np.testing.assert_array_equal(weyl_matrix(one_point, -4), [[-2]])
    with pytest.raises(ValueError, match="weyl_boundary"):
        weyl_matrix(one_point, 3.0)


def test_weyl_boundary_examples(one_point, two_points):
    np.testing.assert_array_equal(weyl_boundary(one_point, 4.0), [[2j]])
    w = weyl_boundary(two_points, math.pi**2)
    np.testing.assert_allclose(np.diag(w), [1j * math.pi] * 2, rtol=1e-15)
    assert w[0, 1] == pytest.approx(-1.0, abs=1e-15)
    assert np.all(np.diag(w).imag > 0)
    with pytest.raises(ValueError):
        weyl_boundary(one_point, 0.0)


def test_boundary_is_limit_from_upper_half_plane(rng):
    cfg = random_config(rng, 5)
    for t in (0.3, 2.0, 9.0):
        np.testing.assert_allclose(weyl_matrix(cfg, t + 1e-10j), weyl_boundary(cfg, t), atol=1e-8)


def test_weyl_zero_examples(one_point, two_points):
    np.testing.assert_array_equal(weyl_zero(two_points), [[0, 1], [1, 0]])
    np.testing.assert_array_equal(weyl_zero(one_point), [[0]])
    cfg = collinear_config(RealSequence([0.0, 1.0, 2.0]))
    np.testing.assert_array_equal(weyl_zero(cfg), [[0, 1, 0.5], [1, 0, 1], [0.5, 1, 0]])


def test_weyl_imag_examples(one_point, two_points):
    np.testing.assert_array_equal(weyl_imag(one_point, 4.0), [[2.0]])
    np.testing.assert_allclose(weyl_imag(two_points, math.pi**2), math.pi * np.eye(2), atol=1e-15)
    assert np.abs(weyl_imag(two_points, 1e-14)).max() < 1e-6
    with pytest.raises(ValueError):
        weyl_imag(one_point, -1.0)


def test_weyl_imag_is_imaginary_part_of_boundary(rng):
    cfg = random_config(rng, 6)
    for t in (0.5, 3.0, 20.0):
        np.testing.assert_allclose(weyl_imag(cfg, t), weyl_boundary(cfg, t).imag, atol=1e-14)


def test_triplet_examples(one_point, two_points):
    tm = triplet_matrices(one_point)
    np.testing.assert_array_equal(tm.T0, [[-1]])
    np.testing.assert_array_equal(tm.T1, [[0.5]])
    tm = triplet_matrices(two_points)
    np.testing.assert_allclose(tm.T0, [[-1, E1], [E1, -1]], rtol=1e-15)
    np.testing.assert_allclose(tm.T1, [[0.5, E1 / 2], [E1 / 2, 0.5]], rtol=1e-15)
    np.testing.assert_allclose(weyl_matrix(two_points, -1).real, tm.T0, rtol=1e-15)


def test_t1_is_scaled_gram_of_exponential(rng):
    cfg = random_config(rng, 7)
    np.testing.assert_allclose(2 * triplet_matrices(cfg).T1, gram_matrix(ExpDecay(1.0), cfg).matrix, rtol=1e-15)


def test_krein_coupling_examples(one_point, two_points):
    np.testing.assert_allclose(krein_coupling(one_point), [[2.0]], rtol=1e-15)
    # 2x2 inverse by hand: T1^-1 = 2/(1-e^-2) [[1, -e^-1], [-e^-1, 1]]
    t1inv = 2 / (1 - E1**2) * np.array([[1, -E1], [-E1, 1]])
    expected = t1inv @ np.array([[1, 1 - E1], [1 - E1, 1]])
    xi = krein_coupling(two_points)
    np.testing.assert_allclose(xi, expected, rtol=1e-13)
    np.testing.assert_allclose(xi, [[1.77516, 0.61121], [0.61121, 1.77516]], atol=1e-4)
    far = PointConfig([[0, 0, 0], [0, 0, 60.0]])
    np.testing.assert_allclose(krein_coupling(far), 2 * np.eye(2), atol=0.05)


def test_krein_coupling_ill_conditioned():
    cfg = PointConfig([[0, 0, 0], [0, 0, 1e-13]])
    with pytest.raises(NumericalFailure):
        krein_coupling(cfg)


def test_conjugation_symmetry_and_real_on_negative_axis(rng):
    cfg = random_config(rng, 8)
    for z in [0.3 + 1.2j, -5 + 0.01j, 4 - 2j]:
        m = weyl_matrix(cfg, z)
        np.testing.assert_array_equal(weyl_matrix(cfg, np.conj(z)), m.conj())
        np.testing.assert_array_equal(m, m.T)
    for kappa in (0.1, 1.0, 3.0):
        m = weyl_matrix(cfg, -(kappa**2))
        assert np.abs(m.imag).max() < 1e-15
        np.testing.assert_allclose(m.real, weyl_matrix_kappa(cfg, kappa), rtol=1e-14, atol=1e-300)


def test_nevanlinna_on_truncations(rng):
    for _ in range(30):
        cfg = random_config(rng, int(rng.integers(1, 13)), min_sep=0.1)
        z = complex(rng.uniform(-10, 10), rng.uniform(1e-3, 5))
        im = weyl_matrix(cfg, z).imag
        assert np.linalg.eigvalsh(im)[0] >= -1e-10


def test_derivative_in_kappa_is_exponential_gram(rng):
    cfg = random_config(rng, 6)
    for kappa in (0.2, 1.0, 2.5):
        h = 1e-6
        deriv = -(weyl_matrix_kappa(cfg, kappa + h) - weyl_matrix_kappa(cfg, kappa - h)) / (2 * h)
        target = gram_matrix(ExpDecay(kappa), cfg).matrix
        np.testing.assert_allclose(deriv, target, atol=1e-8)
        assert np.linalg.eigvalsh(target)[0] > 0


def test_limit_to_weyl_zero(rng):
    cfg = random_config(rng, 6)
    np.testing.assert_allclose(weyl_matrix(cfg, -1e-12), weyl_zero(cfg), atol=1e-5)
