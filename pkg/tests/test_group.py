import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quintic_flow import group as gp
from quintic_flow.geometry import x_to_u

perms = st.permutations(range(5)).map(tuple)


def test_identity_is_identity_matrix():
    g = gp.element((0, 1, 2, 3, 4))
    assert np.abs(g.matrix - np.eye(4)).max() < 1e-14


def test_order_120_distinct():
    els = gp.all_elements()
    assert len(els) == 120
    keys = {tuple(np.round(g.matrix.ravel(), 9)) for g in els}
    assert len(keys) == 120


@given(perms, perms)
@settings(max_examples=40, deadline=None)
def test_homomorphism(s, t):
    st_ = tuple(s[t[i]] for i in range(5))
    lhs = gp.element(st_).matrix
    rhs = gp.element(s).matrix @ gp.element(t).matrix
    assert np.abs(lhs - rhs).max() < 1e-13


@given(perms)
@settings(max_examples=40, deadline=None)
def test_unitary(p):
    m = gp.element(p).matrix
    assert np.abs(m @ m.conj().T - np.eye(4)).max() < 1e-13


@given(perms)
@settings(max_examples=40, deadline=None)
def test_action_permutes_natural_coordinates(p):
    rng = np.random.default_rng(1)
    x = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    x -= x.mean()
    g = gp.element(p)
    moved = np.empty(5, dtype=complex)
    for i in range(5):
        moved[p[i]] = x[i]
    from quintic_flow.geometry import u_to_x
    assert np.abs(u_to_x(g.matrix @ x_to_u(x)) - moved).max() < 1e-12


def test_parity():
    assert gp.element((0, 1, 2, 3, 4)).sign == 1
    assert gp.element((1, 0, 2, 3, 4)).sign == -1
    assert gp.element((1, 2, 0, 3, 4)).sign == 1


class TestOrbits:
    def test_five_point_orbit(self):
        u = x_to_u(np.array([-4, 1, 1, 1, 1], dtype=complex))
        orb = gp.orbit(u)
        assert len(orb) == 5
        assert gp.stabilizer_order(u) == 24

    def test_generic_orbit_is_regular(self):
        rng = np.random.default_rng(5)
        u = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        assert len(gp.orbit(u)) == 120
        assert gp.stabilizer_order(u) == 1

    def test_orbit_size_divides_group_order(self):
        for desc in ([0, 0, 0, 1, -1], [0, 1, 1, -1, -1], [1, 1, 1, -1.5, -1.5]):
            x = np.asarray(desc, dtype=complex)
            assert 120 % len(gp.orbit(x_to_u(x))) == 0

    def test_bad_permutation_rejected(self):
        with pytest.raises(ValueError):
            gp.element((0, 0, 1, 2, 3))
