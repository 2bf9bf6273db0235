import math

import numpy as np
import pytest

from pointweyl import BoundaryOperator, PointConfig, free_resolvent_kernel, resolvent_kernel
from pointweyl.errors import PoleError
from pointweyl.verify import (
    gram_crosscheck,
    gram_crosscheck_matrix,
    helmholtz_order,
    helmholtz_residual,
    mc_convolution,
    run_suite,
)

from conftest import random_config


@pytest.mark.parametrize(
    "a, sep, target",
    [(1.0, 0.0, 0.5), (1.0, 1.0, math.exp(-1) / 2), (2.0, 0.0, 0.25)],
)
def test_mc_convolution_examples(a, sep, target):
    res = mc_convolution(a, [0, 0, 0], [0, 0, sep], 400_000, seed=3)
    assert res.target == pytest.approx(target, rel=1e-15)
    assert res.rel_error < 0.02
    assert res.samples_or_nodes == 400_000 and res.seed == 3


def test_mc_convolution_deterministic():
    a = mc_convolution(1.5, [0, 0, 0], [1, 1, 0], 50_000, seed=11)
    b = mc_convolution(1.5, [0, 0, 0], [1, 1, 0], 50_000, seed=11)
    assert a == b
    with pytest.raises(ValueError):
        mc_convolution(1.0, [0, 0, 0], [0, 0, 1], 100)


def test_mc_convolution_range(rng):
    for i in range(6):
        a = rng.uniform(0.5, 4.0)
        d = rng.uniform(0, 3)
        res = mc_convolution(a, [0, 0, 0], [d, 0, 0], 300_000, seed=i)
        assert res.rel_error < 0.02


def test_gram_crosscheck_examples(two_points):
    for a, j, k, target in [(1.0, 0, 0, 2 * math.pi), (2.0, 1, 1, math.pi), (1.0, 0, 1, 2 * math.pi * math.exp(-1))]:
        res = gram_crosscheck(two_points, a, j, k, 400_000, seed=5)
        assert res.target == pytest.approx(target, rel=1e-15)
        assert res.rel_error < 0.02
    with pytest.raises(IndexError):
        gram_crosscheck(two_points, 1.0, 0, 2)


def test_gram_crosscheck_matrix_matches_t1(rng):
    cfg = random_config(rng, 3, min_sep=0.5, box=1.0)
    est, target = gram_crosscheck_matrix(cfg, 200_000, seed=1)
    np.testing.assert_allclose(est, target, rtol=0.02)


def test_helmholtz_examples():
    y = np.zeros(3)
    free = lambda p: free_resolvent_kernel(p, y, -1.0)
    x = [2.0, 0.0, 0.0]
    r1, r2, order = helmholtz_order(free, -1.0, x, 1e-3)
    assert r1 < 1e-2 * abs(free(np.array(x)))
    assert 3.5 <= r1 / r2 <= 4.5
    assert helmholtz_residual(lambda p: 1.0, 0.0, [1, 2, 3], 0.1) == 0.0

    cfg = PointConfig([[0.0, 0.0, 1.0]])
    B = BoundaryOperator.diagonal([0.0])
    pert = lambda p: resolvent_kernel(cfg, B, -1.0, p, [0, 0, 2.0])
    _, _, order = helmholtz_order(pert, -1.0, [0.4, 0.3, -0.2], 1e-2)
    assert abs(order - 2) < 0.5


def test_helmholtz_pole():
    with pytest.raises(PoleError):
        helmholtz_residual(lambda p: free_resolvent_kernel(p, [0, 0, 0.1], -1), -1, [0, 0, 0], 0.1)


def test_run_suite_passes():
    results = run_suite(seed=7, samples=300_000)
    assert results and all(r["passed"] for r in results)
