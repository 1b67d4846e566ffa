import numpy as np
import pytest

from ppinterp import pchip_1d, pchip_2d
from ppinterp.diagnostics import l2_error_continuum
from ppinterp.testfunctions import TEST_FUNCTIONS

from helpers import random_mesh


class TestPchip1D:
    def test_monotone_data_no_overshoot(self):
        rng = np.random.default_rng(1)
        x = random_mesh(rng, 9)
        u = np.cumsum(rng.uniform(0.1, 1.0, 9))
        for i in range(8):
            s = np.linspace(x[i], x[i + 1], 1000)
            v = pchip_1d(x, u, s)
            assert np.all(np.diff(v) >= -1e-12 * (u.max() - u.min()))
            assert v.min() >= u[i] - 1e-12 and v.max() <= u[i + 1] + 1e-12

    def test_interval_range_bounded(self):
        rng = np.random.default_rng(2)
        x = random_mesh(rng, 11)
        u = rng.uniform(-4, 4, 11)
        tau = 1e-12 * (u.max() - u.min())
        for i in range(10):
            s = np.linspace(x[i], x[i + 1], 1000)
            v = pchip_1d(x, u, s)
            assert v.min() >= min(u[i], u[i + 1]) - tau
            assert v.max() <= max(u[i], u[i + 1]) + tau

    def test_affine_exact(self):
        x = np.linspace(-2, 3, 9)
        u = 0.5 * x + 4.0
        s = np.linspace(-2, 3, 101)
        assert np.allclose(pchip_1d(x, u, s), 0.5 * s + 4.0, rtol=1e-13)

    def test_nodes_exact(self):
        rng = np.random.default_rng(3)
        x = random_mesh(rng, 13)
        u = rng.uniform(1, 3, 13)
        assert np.allclose(pchip_1d(x, u, x), u, rtol=1e-13)

    def test_error_as_published(self):
        f = TEST_FUNCTIONS["f1"].func
        x = np.linspace(-1, 1, 257)
        dense = np.linspace(-1, 1, 10_000)
        err = l2_error_continuum(pchip_1d(x, f(x), dense), f(dense), dense)
        assert 1.17e-4 / 3 <= err <= 1.17e-4 * 3

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="outside"):
            pchip_1d([0, 1], [1, 2], [1.2])


class TestPchip2D:
    def test_constant_in_y_matches_1d(self):
        rng = np.random.default_rng(4)
        x = random_mesh(rng, 9)
        y = random_mesh(rng, 5)
        g = np.sin(x) + 2
        v = np.tile(g[:, None], (1, 5))
        xout = np.linspace(x[0], x[-1], 41)
        yout = np.linspace(y[0], y[-1], 7)
        out = pchip_2d(x, y, v, xout, yout)
        line = pchip_1d(x, g, xout)
        for j in range(7):
            assert np.allclose(out[:, j], line, rtol=1e-14)

    def test_positive_data_nonnegative(self):
        rng = np.random.default_rng(5)
        x = random_mesh(rng, 8)
        y = random_mesh(rng, 8)
        v = rng.uniform(0, 3, (8, 8))
        xo = np.linspace(x[0], x[-1], 60)
        yo = np.linspace(y[0], y[-1], 60)
        assert pchip_2d(x, y, v, xo, yo).min() >= -1e-12 * v.max()

    def test_shape_mismatch(self):
        with pytest.raises(ValueError, match="shape"):
            pchip_2d([0, 1], [0, 1, 2], np.zeros((2, 2)), [0.5], [0.5])

    def test_error_as_published(self):
        from ppinterp.harness import ExperimentSpec, approximation_error

        err = approximation_error(ExperimentSpec("f4", 257, "pchip", 3))
        assert 4.19e-5 / 3 <= err <= 4.19e-5 * 3
