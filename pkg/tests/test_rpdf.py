import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from pointweyl import (
    Bernstein,
    DiscreteMeasure,
    ExpDecay,
    OmegaKernel,
    PointConfig,
    RealSequence,
    Schoenberg,
    bernstein_moment,
    collinear_config,
    eval_radial,
    gram_matrix,
    line_identity,
    line_identity_residual,
    omega3_invertibility_certificate,
    omega_kernel,
    schur_bound,
    strong_pd_profile,
)

from conftest import random_config

E1 = math.exp(-1)


def delta(s, w=1.0):
    return DiscreteMeasure([s], [w])


def random_measure(rng, k=3):
    return DiscreteMeasure(rng.uniform(0.2, 4.0, k), rng.uniform(0.1, 1.0, k))


def test_measure_validation():
    with pytest.raises(ValueError):
        DiscreteMeasure([0.0], [1.0])
    with pytest.raises(ValueError):
        DiscreteMeasure([1.0, 1.0], [1.0, 1.0])
    with pytest.raises(ValueError):
        DiscreteMeasure([1.0], [-1.0])
    assert DiscreteMeasure.from_atoms([(1.0, 0.5), (2.0, 0.25)]).mass == 0.75


def test_eval_radial_examples():
    f = Bernstein(delta(1.0))
    assert eval_radial(f, math.log(2)) == pytest.approx(0.5, rel=1e-15)
    assert eval_radial(f, 0.0) == 1.0
    ts = np.linspace(0, 20, 101)
    r = 1.7
    np.testing.assert_allclose(eval_radial(Schoenberg(3, delta(r)), ts), omega_kernel(3, r * ts), rtol=0, atol=1e-15)
    assert eval_radial(ExpDecay(2.0), 1.5) == pytest.approx(math.exp(-3.0), rel=1e-15)
    assert eval_radial(OmegaKernel(3, 2.0), math.pi / 4) == pytest.approx(2 / math.pi, rel=1e-15)


def test_value_at_zero_is_total_mass(rng):
    tau = random_measure(rng)
    assert eval_radial(Bernstein(tau), 0.0) == pytest.approx(tau.mass, rel=1e-14)
    assert eval_radial(Schoenberg(2, tau), 0.0) == pytest.approx(tau.mass, rel=1e-14)
    assert eval_radial(OmegaKernel(5, 3.0), 0.0) == 1.0


def test_gram_examples(two_points):
    rep = gram_matrix(ExpDecay(1.0), two_points)
    np.testing.assert_allclose(rep.matrix, [[1, E1], [E1, 1]], rtol=1e-15)
    assert rep.lambda_min == pytest.approx(1 - E1, rel=1e-14)
    assert rep.lambda_max == pytest.approx(1 + E1, rel=1e-14)
    assert rep.determinant == pytest.approx(1 - E1**2, rel=1e-14)
    assert rep.condition_number == pytest.approx((1 + E1) / (1 - E1), rel=1e-13)

    cfg = collinear_config(RealSequence([0.0, math.pi]))
    rep = gram_matrix(OmegaKernel(3, 1.0), cfg)
    np.testing.assert_allclose(rep.matrix, np.eye(2), atol=1e-15)

    rep = gram_matrix(Bernstein(delta(1.3)), PointConfig([[1, 2, 3]]))
    np.testing.assert_array_equal(rep.matrix, [[1.0]])


def test_schur_bound_examples():
    a = np.array([[1, E1], [E1, 1]])
    assert schur_bound(a) == pytest.approx(1 + E1, rel=1e-15)
    assert schur_bound(np.eye(5)) == 1.0
    # nonnegative constant row sums: the bound is attained
    assert np.linalg.norm(a, 2) == pytest.approx(schur_bound(a), rel=1e-14)
    with pytest.raises(ValueError):
        schur_bound(np.ones((2, 3)))


def test_strong_pd_profile_examples():
    cfg = collinear_config(RealSequence([0.0, 1.0, 2.0]))
    prof = strong_pd_profile(ExpDecay(1.0), cfg)
    assert [p.m for p in prof] == [1, 2, 3]
    assert prof[0].lambda_min == pytest.approx(1.0)
    assert prof[1].lambda_min == pytest.approx(1 - E1, rel=1e-14)
    # closed form via the (1,0,1)/(0,1,0) reduction: (2 + b - sqrt(b^2 + 8a^2))/2, a=e^-1, b=e^-2
    assert prof[2].lambda_min == pytest.approx(0.5430254052367803, abs=1e-12)
    assert prof[2].lambda_min < prof[1].lambda_min
    assert prof[1].determinant == pytest.approx(1 - E1**2, rel=1e-14)


def test_strong_pd_profile_interlacing(rng):
    for _ in range(20):
        cfg = random_config(rng, 10)
        for f in (ExpDecay(0.7), OmegaKernel(3, 2.0), Bernstein(random_measure(rng))):
            lm = [p.lambda_min for p in strong_pd_profile(f, cfg)]
            assert all(a >= b for a, b in zip(lm, lm[1:]))


@pytest.mark.parametrize(
    "r, certified, nb, inb",
    [(2.0, True, 1.5, 2.0), (1.0, False, None, None), (4.0, True, 1.25, 4.0 / 3.0)],
)
def test_omega3_certificate_examples(two_points, r, certified, nb, inb):
    c = omega3_invertibility_certificate(two_points, r)
    assert c.K == 1.0
    assert c.certified is certified
    if certified:
        assert c.norm_bound == pytest.approx(nb, rel=1e-15)
        assert c.inv_norm_bound == pytest.approx(inb, rel=1e-15)
    else:
        assert c.norm_bound is None and c.inv_norm_bound is None


def test_bernstein_moment_examples():
    assert bernstein_moment(delta(1.0)) == 2.0
    assert bernstein_moment(DiscreteMeasure([1.0, 2.0], [0.5, 0.5])) == pytest.approx(2.0625, rel=1e-15)
    assert bernstein_moment(delta(0.5)) == pytest.approx(8.5, rel=1e-15)


def test_line_identity_examples():
    res = line_identity(RealSequence([2.5]), 3.0, [1.0])
    assert res.lhs == pytest.approx(1.0) and res.rhs == pytest.approx(1.0, abs=1e-14)
    res = line_identity(RealSequence([0.0, math.pi]), 1.0, [1.0, 1.0])
    assert res.lhs.real == pytest.approx(2.0, abs=1e-15)
    assert res.residual < 1e-12
    res = line_identity(RealSequence([0.0, 1.0]), 1.0, [1.0, -1.0])
    assert res.lhs.real == pytest.approx(2 - 2 * math.sin(1.0), abs=1e-15)
    assert res.rhs == pytest.approx(2 - 2 * math.sin(1.0), abs=1e-14)
    with pytest.raises(ValueError):
        line_identity_residual(RealSequence([0.0, 1.0]), 1.0, [1.0])


def test_line_identity_rhs_against_adaptive_quadrature(rng):
    lam = rng.uniform(-3, 3, 4)
    xi = rng.normal(size=4) + 1j * rng.normal(size=4)
    r = 1.3
    amp2 = lambda t: abs(np.exp(1j * lam * t) @ xi) ** 2
    ref, _ = integrate.quad(amp2, -r, r, epsabs=1e-13, limit=200)
    assert line_identity(RealSequence(lam), r, xi).rhs == pytest.approx(ref / (2 * r), rel=1e-11)


def _corpus_function(kind, rng):
    if kind == "exp":
        return ExpDecay(rng.uniform(0.2, 3.0))
    if kind == "omega3":
        return OmegaKernel(3, rng.uniform(0.2, 5.0))
    if kind == "bernstein":
        return Bernstein(random_measure(rng))
    return Schoenberg(3, random_measure(rng))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["exp", "omega3", "bernstein", "schoenberg"]), st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_gram_psd_and_schur_dominance(kind, m, seed):
    rng = np.random.default_rng(seed)
    cfg = random_config(rng, m, min_sep=0.05)
    rep = gram_matrix(_corpus_function(kind, rng), cfg)
    assert rep.lambda_min >= -1e-10
    assert rep.lambda_min <= rep.lambda_max
    assert np.linalg.norm(rep.matrix, 2) <= rep.schur_bound + 1e-10


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_bernstein_is_completely_monotone(seed):
    rng = np.random.default_rng(seed)
    f = Bernstein(random_measure(rng))
    t = 0.05 * 1.3 ** np.arange(25)
    for k in range(1, 5):
        # forward differences with step h at each grid point
        h = 0.01 * t
        vals = np.array([f(t + j * h) for j in range(k + 1)])
        coeffs = np.array([(-1) ** (k - j) * math.comb(k, j) for j in range(k + 1)])
        diffs = coeffs @ vals
        assert np.all((-1) ** k * diffs >= -1e-14)


def test_omega3_envelope(rng):
    for _ in range(50):
        cfg = random_config(rng, int(rng.integers(2, 10)), min_sep=0.5)
        c = omega3_invertibility_certificate(cfg, rng.uniform(0.5, 40))
        if not c.certified:
            continue
        r = c.K / (c.norm_bound - 1.0)
        ev = np.linalg.eigvalsh(gram_matrix(OmegaKernel(3, r), cfg).matrix)
        assert ev[0] >= 1 - c.K / r - 1e-10 and ev[-1] <= 1 + c.K / r + 1e-10
