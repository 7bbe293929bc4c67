import os

import numpy as np
import pytest

from quintic_flow import _kernels as kx
from quintic_flow import basins as bs
from quintic_flow.equivariants import f6, restricted_map


@pytest.fixture
def _restore_env():
    saved = {k: os.environ.get(k)
             for k in ("QUINTIC_FLOW_NUMBA", "QUINTIC_FLOW_THREADS")}
    yield
    for k, v in saved.items():
        if v is None:
            os.environ.pop(k, None)
        else:
            os.environ[k] = v


def _render_1d_with(backend, _res=48):
    os.environ["QUINTIC_FLOW_NUMBA"] = backend
    grid = bs.GridSpec(0j, 4.0, 4.0, (_res, _res))
    return bs.render_1d(restricted_map("octahedral5"), grid,
                        bs.octahedral_attractors(), max_iter=40)


def _render_plane_with(backend, _res=32):
    os.environ["QUINTIC_FLOW_NUMBA"] = backend
    grid = bs.GridSpec(0j, 2.5, 2.5, (_res, _res))
    return bs.render_plane(f6, grid, bs.f6_plane_attractors(), max_iter=40)


class TestBackendAgreement:
    def test_1d_labels_identical(self, _restore_env):
        p_np = _render_1d_with("0")
        if not kx._HAVE_NUMBA:
            pytest.skip("numba unavailable")
        p_nb = _render_1d_with("1")
        assert np.array_equal(p_np.labels, p_nb.labels)
        assert np.array_equal(p_np.iterations, p_nb.iterations)

    def test_plane_labels_identical(self, _restore_env):
        p_np = _render_plane_with("0")
        if not kx._HAVE_NUMBA:
            pytest.skip("numba unavailable")
        p_nb = _render_plane_with("1")
        assert np.array_equal(p_np.labels, p_nb.labels)
        assert np.array_equal(p_np.iterations, p_nb.iterations)


class TestEnvFlags:
    def test_backend_forced_off(self, _restore_env):
        os.environ["QUINTIC_FLOW_NUMBA"] = "0"
        assert not kx.use_numba()
        assert kx.backend_name() == "numpy"

    def test_backend_forced_on(self, _restore_env):
        os.environ["QUINTIC_FLOW_NUMBA"] = "1"
        if kx._HAVE_NUMBA:
            assert kx.use_numba()
            assert kx.backend_name() == "numba"

    def test_auto_default(self, _restore_env):
        os.environ.pop("QUINTIC_FLOW_NUMBA", None)
        assert kx.use_numba() == kx._HAVE_NUMBA

    def test_thread_count_parsing(self, _restore_env):
        os.environ["QUINTIC_FLOW_THREADS"] = "3"
        assert kx.thread_count() == 3
        os.environ["QUINTIC_FLOW_THREADS"] = "junk"
        assert kx.thread_count() >= 1
        os.environ.pop("QUINTIC_FLOW_THREADS", None)
        assert kx.thread_count() >= 1


class TestKernelBehavior:
    def test_power4_classification(self, _restore_env):
        # |z|<1 contracts to 0, |z|>1 escapes to infinity under z -> z^4
        os.environ["QUINTIC_FLOW_NUMBA"] = "0"
        m = restricted_map("power4")
        attr = bs.AttractorSet(("zero", "inf"), ((0j,), (float("inf"),)))
        grid = bs.GridSpec(0j, 3.0, 3.0, (41, 41))
        p = bs.render_1d(m, grid, attr, max_iter=60)
        xs, ys = grid.axes()
        for r in range(0, 41, 5):
            for c in range(0, 41, 5):
                z = xs[c] + 1j * ys[r]
                if abs(z) < 0.9:
                    assert p.labels[r, c] == 0
                elif abs(z) > 1.1:
                    assert p.labels[r, c] == 1

    def test_iteration_counts_monotone_near_attractor(self, _restore_env):
        os.environ["QUINTIC_FLOW_NUMBA"] = "0"
        m = restricted_map("power4")
        attr = bs.AttractorSet(("zero",), ((0j,),))
        grid = bs.GridSpec(0j, 1.0, 1.0, (11, 11))
        p = bs.render_1d(m, grid, attr, max_iter=60)
        # the center cell starts at the attractor and resolves fastest
        assert p.iterations[5, 5] == p.iterations.min()
