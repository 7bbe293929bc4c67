"""The parameter-family layer: the coordinate change tau_v, the parametrized
invariants and their exact gradients, the conjugated degree-6 map, and the
root selector.

For a parameter triple K the degree-2 form is a quadratic form, the degree-3
form a symmetric 3-tensor, and degrees 4/5 come from determinants of the
3-form's (bordered) hessian; all gradients are exact via the adjugate-trace
rule, no numerical differentiation anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ._tables import gammak_form, phi2k_form, phi3k_tensor
from .geometry import HCT, R4, as_complex, x_to_u
from .equivariants import phi_basic
from .invariants import SQ5, phi, psi10

# Uniform constant relating the selector numerator form to its direct
# definition from the quadratic orbit: sum_k Q_k(tau_v w) L_k(v) times this
# equals phi2(v)^5 phi3(v) GammaK(w).  Pinned numerically, kept explicit.
GAMMA_SCALE = SQ5


class SingularTau(ValueError):
    pass


class DegenerateK(ValueError):
    pass


class OnQuadricK(ValueError):
    pass


class SingularHessian(ValueError):
    pass


@dataclass(frozen=True)
class TauMatrix:
    matrix: np.ndarray
    v: np.ndarray

    @property
    def inverse(self) -> np.ndarray:
        return np.linalg.inv(self.matrix)


def tau(v) -> TauMatrix:
    """Parametrized change of coordinates with columns phi_{6-k}(v) * basic
    equivariant of degree k at v."""
    v = as_complex(v)
    n = np.linalg.norm(v)
    vals = {k: phi(v, k) for k in (2, 3, 4, 5)}
    small = [k for k in (2, 3, 4, 5) if abs(vals[k]) / n ** k < 1e-12]
    if small or abs(psi10(v)) / n ** 10 < 1e-12:
        raise SingularTau("a basic invariant vanishes at v; tau is singular")
    cols = [vals[6 - k] * phi_basic(v, k) for k in (1, 2, 3, 4)]
    return TauMatrix(np.column_stack(cols), v)


def t_matrix(k1, k2, k3) -> np.ndarray:
    """The 4x4 parameter matrix whose repose identity tau^r tau = phi2^6 T
    defines it; det gives the discriminant-like scalar t."""
    T = np.array([
        [240*k2*k3**2, 2*k1*(-15+66*k1+40*k2), 2*k2*(-35+46*k1+84*k3),
         (-15+60*k1+12*k1**2+128*k2*k3)],
        [240*k1*k2*k3, 48*k1*k2*(-1+5*k3), 2*k2*(-15+90*k1+16*k2),
         2*k2*(-35+46*k1+84*k3)],
        [240*k1*k2*k3, 48*k1**2*(-1+5*k1), 48*k1*k2*(-1+5*k3),
         2*k1*(-15+66*k1+40*k2)],
        [240*k2*k3**2, 240*k1*k2*k3, 240*k1*k2*k3, 240*k2*k3**2],
    ], dtype=complex)
    return (5.0 / 48.0) * T


@dataclass(frozen=True)
class ParamPolys:
    k: tuple[complex, complex, complex]
    S2: np.ndarray        # quadratic form matrix of the degree-2 invariant
    C3: np.ndarray        # symmetric 3-tensor of the degree-3 invariant
    gamma: np.ndarray     # quadratic form matrix of the selector numerator
    TK: np.ndarray
    TKinv: np.ndarray
    tK: complex
    H3_slices: tuple[np.ndarray, ...]  # d(hessian of the 3-form)/dw_i


def build_param_polys(K: Iterable[complex]) -> ParamPolys:
    k1, k2, k3 = (complex(c) for c in K)
    TK = t_matrix(k1, k2, k3)
    tK = complex(np.linalg.det(TK))
    scale = np.abs(TK).max()
    if scale == 0 or abs(tK) / scale ** 4 < 1e-14:
        raise DegenerateK(f"parameter matrix is singular for K={K!r}")
    C3 = phi3k_tensor(k1, k2, k3)
    return ParamPolys(
        k=(k1, k2, k3),
        S2=phi2k_form(k1, k2, k3),
        C3=C3,
        gamma=gammak_form(k1, k2, k3),
        TK=TK,
        TKinv=np.linalg.inv(TK),
        tK=tK,
        H3_slices=tuple(6 * C3[:, :, i] for i in range(4)),
    )


def _adjugate(M: np.ndarray) -> np.ndarray:
    n = M.shape[0]
    adj = np.empty_like(M)
    rows = np.arange(n)
    for i in range(n):
        for j in range(n):
            minor = M[np.ix_(rows != j, rows != i)]
            adj[i, j] = (-1) ** (i + j) * np.linalg.det(minor)
    return adj


def phi2K(pp: ParamPolys, w) -> complex:
    w = as_complex(w)
    return complex(w @ pp.S2 @ w)


def phi3K(pp: ParamPolys, w) -> complex:
    w = as_complex(w)
    return complex(np.einsum("abc,a,b,c->", pp.C3, w, w, w))


@dataclass(frozen=True)
class ValueGrad:
    value: complex
    gradient: np.ndarray


def invariant_values_grads(pp: ParamPolys, w) -> dict[int, ValueGrad]:
    """Values and exact gradients of the four parametrized invariants at w.

    Degrees 4 and 5 are determinant quotients; their gradients use
    d(det M)/ds = tr(adj(M) dM/ds) with the constant per-coordinate slices of
    the hessian/bordered matrices.
    """
    w = as_complex(w)
    p2 = complex(w @ pp.S2 @ w)
    g2 = 2 * pp.S2 @ w
    p3 = complex(np.einsum("abc,a,b,c->", pp.C3, w, w, w))
    g3 = 3 * np.einsum("abc,b,c->a", pp.C3, w, w)

    Hm = 6 * np.einsum("abc,c->ab", pp.C3, w)
    adjH = _adjugate(Hm)
    detH = complex(np.linalg.det(Hm))
    g4_det = np.array([np.trace(adjH @ S) for S in pp.H3_slices])
    p4 = p2 ** 2 / 2 - 5 * (detH / pp.tK) / 324
    g4 = p2 * g2 - (5 / (324 * pp.tK)) * g4_det

    B = np.zeros((5, 5), dtype=complex)
    B[:4, :4] = Hm
    B[:4, 4] = g2
    B[4, :4] = g2
    detB = complex(np.linalg.det(B))
    adjB = _adjugate(B)
    g5_det = np.empty(4, dtype=complex)
    for i in range(4):
        Bi = np.zeros((5, 5), dtype=complex)
        Bi[:4, :4] = pp.H3_slices[i]
        Bi[:4, 4] = 2 * pp.S2[:, i]
        Bi[4, :4] = 2 * pp.S2[:, i]
        g5_det[i] = np.trace(adjB @ Bi)
    p5 = (720 * p2 * p3 + detB / pp.tK) / 864
    g5 = (720 * (g2 * p3 + p2 * g3) + g5_det / pp.tK) / 864

    return {2: ValueGrad(p2, g2), 3: ValueGrad(p3, g3),
            4: ValueGrad(p4, g4), 5: ValueGrad(p5, g5)}


def phi45K_value_grad(pp: ParamPolys, w) -> tuple[ValueGrad, ValueGrad]:
    vg = invariant_values_grads(pp, w)
    return vg[4], vg[5]


def phiK_map(pp: ParamPolys):
    """The conjugated degree-6 map as a callable on 4-vectors."""
    def _map(w) -> np.ndarray:
        vg = invariant_values_grads(pp, as_complex(w))
        p2, p3, p4, p5 = (vg[k].value for k in (2, 3, 4, 5))
        # reversed gradients, weighted back to the basic-equivariant scale
        e = {k: (-5.0 / (k + 1)) * (R4 @ vg[k + 1].gradient) for k in (1, 2, 3, 4)}
        b = (2 * (9 * p2 * p3 - 10 * p5) * e[1] - 2 * (p2 ** 2 - 5 * p4) * e[2]
             + 20 * p3 * e[3] + 15 * p2 * e[4])
        return pp.TKinv @ b
    return _map


def gammaK(pp: ParamPolys, w) -> complex:
    w = as_complex(w)
    return complex(w @ pp.gamma @ w)


def root_selector_J(pp: ParamPolys, w) -> complex:
    """Degree-0 selector; at a conjugated five-point its value is the
    corresponding root of the resolvent quintic."""
    w = as_complex(w)
    p2 = phi2K(pp, w)
    if abs(p2) / np.linalg.norm(w) ** 2 < 1e-12:
        raise OnQuadricK("selector undefined where the degree-2 form vanishes")
    return gammaK(pp, w) / (15 * p2)


# --- auxiliary point functions ----------------------------------------------

def L_values(v) -> np.ndarray:
    """The five linear forms (an orbit of size 5): -5 times each coordinate."""
    return -5 * (HCT @ as_complex(v))


def Q_values(u) -> np.ndarray:
    """The five quadratic forms; Q_k vanishes at every five-point except the
    k-th."""
    x = HCT @ as_complex(u)
    return 20 * x ** 2 - phi(u, 2)


G_values = Q_values


def S_values(v) -> np.ndarray:
    """The five resolvent roots attached to v (roots of the resolvent built
    from K(v))."""
    v = as_complex(v)
    return SQ5 * phi(v, 2) * L_values(v) / phi(v, 3)


def gamma_v(tv: TauMatrix, w) -> complex:
    """Direct (unparametrized) evaluation of the selector numerator."""
    img = tv.matrix @ as_complex(w)
    return GAMMA_SCALE * complex((Q_values(img) * L_values(tv.v)).sum())


def five_point_u(ell: int) -> np.ndarray:
    """Hyperplane coordinates of the ell-th five-point (0-based)."""
    x = np.ones(5, dtype=complex)
    x[ell] = -4
    return x_to_u(x)


def conjugated_five_points(tv: TauMatrix) -> list[np.ndarray]:
    inv = tv.inverse
    return [inv @ five_point_u(ell) for ell in range(5)]


def random_regular_point(rng: np.random.Generator, rel_floor: float = 1e-6,
                         max_tries: int = 200) -> np.ndarray:
    """A random v at which tau is comfortably nonsingular."""
    for _ in range(max_tries):
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        n = np.linalg.norm(v)
        if all(abs(phi(v, k)) / n ** k > rel_floor for k in (2, 3, 4, 5)) \
                and abs(psi10(v)) / n ** 10 > rel_floor:
            return v
    raise SingularTau("could not sample a regular point")
