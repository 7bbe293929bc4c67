"""End-to-end quintic solver.

Pipeline: depress the quintic, invert the coefficient map onto the parameter
triple K, iterate the conjugated degree-6 map from a random start, read one
root off the limit with the selector, ascend back through the scalings, then
deflate and finish the remaining quartic conventionally.  Degenerate inputs
(where the reduction formulas break) are first moved by a random Moebius
transformation of the roots.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import chordal_distance
from .invariants import SQ5
from . import params as pr


class DegenerateReduction(ValueError):
    pass


class RegularizationFailed(RuntimeError):
    pass


class NoConvergence(RuntimeError):
    pass


@dataclass(frozen=True)
class Quintic:
    """Monic quintic x^5 + a1 x^4 + a2 x^3 + a3 x^2 + a4 x + a5."""
    a: tuple[complex, complex, complex, complex, complex]

    @property
    def coeff_array(self) -> np.ndarray:
        return np.array((1,) + self.a, dtype=complex)

    def __call__(self, x: complex) -> complex:
        acc = 0j
        for c in self.coeff_array:
            acc = acc * x + c
        return acc

    def derivative(self, x: complex) -> complex:
        c = self.coeff_array
        acc = 0j
        for k, ck in enumerate(c[:-1]):
            acc = acc * x + (5 - k) * ck
        return acc

    @classmethod
    def from_roots(cls, roots) -> "Quintic":
        c = np.poly(np.asarray(roots, dtype=complex))
        return cls(tuple(c[1:]))


@dataclass(frozen=True)
class DepressedQuintic:
    """y^5 + b2 y^3 + b3 y^2 + b4 y + b5 with roots = roots of the original
    shifted by -shift (original roots = depressed roots + shift)."""
    b: tuple[complex, complex, complex, complex]
    shift: complex


def depress(p: Quintic) -> DepressedQuintic:
    a1 = p.a[0]
    shift = -a1 / 5
    P = np.polynomial.Polynomial
    shifted = P(p.coeff_array[::-1])(P([shift, 1.0]))
    c = shifted.coef[::-1]
    assert abs(c[1]) < 1e-9 * max(1.0, np.abs(c).max())
    return DepressedQuintic(tuple(c[2:]), shift)


def _root_scale(b) -> float:
    return max(abs(b[k]) ** (1.0 / (k + 2)) for k in range(4)) or 1.0


def reduce_to_K(q: DepressedQuintic) -> tuple[tuple[complex, complex, complex], complex]:
    """Invert the coefficient formulas: parameter triple K and the scaling
    lambda with b_k = lambda^k C_k(K)."""
    b2, b3, b4, b5 = q.b
    s = _root_scale(q.b)
    if abs(b2) < 1e-10 * s ** 2 or abs(b3) < 1e-10 * s ** 3:
        raise DegenerateReduction("reduction undefined when b2 or b3 vanishes")
    K = ((b2 ** 2 - 2 * b4) / (2 * b2 ** 2),
         -9 * b3 ** 2 / (8 * b2 ** 3),
         5 * (b2 * b3 - b5) / (6 * b2 * b3))
    lam = -3 * b3 / (10 * SQ5 * b2)
    return K, lam


def resolvent_RK(K) -> np.ndarray:
    """Monic coefficient array of the degree-5 resolvent attached to K."""
    k1, k2, k3 = K
    if abs(k2) < 1e-14:
        raise pr.DegenerateK("resolvent undefined at K2 = 0")
    return np.array([
        1,
        0,
        -125 / (2 * k2),
        625 * SQ5 / (3 * k2),
        -15625 * (2 * k1 - 1) / (8 * k2 ** 2),
        15625 * SQ5 * (6 * k3 - 5) / (6 * k2 ** 2),
    ], dtype=complex)


@dataclass(frozen=True)
class MobiusMap:
    m: np.ndarray  # 2x2; z -> (m00 z + m01) / (m10 z + m11)

    def __call__(self, z: complex) -> complex:
        a, b, c, d = self.m.ravel()
        return (a * z + b) / (c * z + d)

    def inverse(self, z: complex) -> complex:
        a, b, c, d = self.m.ravel()
        return (d * z - b) / (-c * z + a)


def _conv_pow(base: np.ndarray, k: int) -> np.ndarray:
    out = np.array([1.0 + 0j])
    for _ in range(k):
        out = np.convolve(out, base)
    return out


def apply_mobius(p: Quintic, mob: MobiusMap) -> Quintic:
    """Quintic whose roots are the Moebius images of p's roots."""
    a, b, c, d = mob.m.ravel()
    A = np.array([d, -b])   # d s - b
    B = np.array([-c, a])   # -c s + a
    coeffs = p.coeff_array
    total = np.zeros(6, dtype=complex)
    for k, ak in enumerate(coeffs):
        term = ak * np.convolve(_conv_pow(A, 5 - k), _conv_pow(B, k))
        total += term
    if abs(total[0]) < 1e-12 * np.abs(total).max():
        raise RegularizationFailed("Moebius image sent a root to infinity")
    return Quintic(tuple(total[1:] / total[0]))


def mobius_regularize(p: Quintic, seed: int, max_attempts: int = 10
                      ) -> tuple[Quintic, MobiusMap]:
    """Find a seeded Moebius move of the roots after which the reduction
    succeeds.  The identity is tried first."""
    try:
        reduce_to_K(depress(p))
        return p, MobiusMap(np.eye(2, dtype=complex))
    except DegenerateReduction:
        pass
    rng = np.random.default_rng(seed)
    for _ in range(max_attempts):
        m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        det = np.linalg.det(m)
        if abs(det) < 1e-3:
            continue
        m = m / np.sqrt(det)
        mob = MobiusMap(m)
        try:
            pt = apply_mobius(p, mob)
            reduce_to_K(depress(pt))
            return pt, mob
        except (DegenerateReduction, RegularizationFailed):
            continue
    raise RegularizationFailed("no admissible Moebius transformation found")


def iterate_phiK(pp: pr.ParamPolys, rng: np.random.Generator,
                 tol: float = 1e-13, max_iter: int = 500,
                 max_restarts: int = 25) -> tuple[np.ndarray, int, int]:
    """Iterate the conjugated map to a fixed point.

    Converged means 3 consecutive steps moved less than tol in chordal
    distance, or 10 consecutive steps under 1e-10 (a roundoff plateau: the
    iteration has landed on a fixed point but the parameter matrix is too
    ill-conditioned to push the step below tol).  Limits that land on the
    selector's bad locus trigger a restart.
    """
    fmap = pr.phiK_map(pp)
    plateau_tol = max(tol, 1e-10)
    for restart in range(max_restarts + 1):
        w = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        w /= np.abs(w).max()
        consecutive = 0
        plateau = 0
        for it in range(1, max_iter + 1):
            nxt = fmap(w)
            top = np.abs(nxt).max()
            if not np.isfinite(top) or top < 1e-300:
                break
            nxt = nxt / top
            d = chordal_distance(nxt, w)
            consecutive = consecutive + 1 if d < tol else 0
            plateau = plateau + 1 if d < plateau_tol else 0
            w = nxt
            if consecutive >= 3 or plateau >= 10:
                if abs(pr.phi2K(pp, w)) / np.linalg.norm(w) ** 2 > 1e-10:
                    return w, it, restart
                break  # converged onto the bad quadric locus; restart
    raise NoConvergence(f"no fixed point after {max_restarts} restarts")


@dataclass
class SolveReport:
    roots: list[complex] = field(default_factory=list)
    residuals: list[float] = field(default_factory=list)
    iterations: int = 0
    restarts: int = 0
    converged_point: Optional[np.ndarray] = None
    selected_root_raw: complex = 0j
    regularized: bool = False
    polish_moved: bool = False

    def to_json_dict(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "residuals": self.residuals,
            "iterations": self.iterations,
            "restarts": self.restarts,
            "selected_root_raw": [self.selected_root_raw.real,
                                  self.selected_root_raw.imag],
            "regularized": self.regularized,
            "polish_moved": self.polish_moved,
        }


def newton_polish(p: Quintic, x: complex, steps: int = 10) -> complex:
    for _ in range(steps):
        d = p.derivative(x)
        if d == 0:
            break
        step = p(x) / d
        x = x - step
        if abs(step) < 1e-15 * max(1.0, abs(x)):
            break
    return x


def _deflate(coeffs: np.ndarray, root: complex) -> np.ndarray:
    out = np.empty(len(coeffs) - 1, dtype=complex)
    acc = 0j
    for i, c in enumerate(coeffs[:-1]):
        acc = acc * root + c
        out[i] = acc
    return out


def solve(p: Quintic, seed: int = 0, tol: float = 1e-13, max_iter: int = 500,
          max_restarts: int = 25, attempts: int = 6) -> SolveReport:
    """Full pipeline; returns all five roots with residuals."""
    report = SolveReport()
    work, mob = mobius_regularize(p, seed)
    report.regularized = bool(mob.m[0, 1] != 0 or mob.m[1, 0] != 0
                              or mob.m[0, 0] != mob.m[1, 1])
    dep = depress(work)
    K, lam = reduce_to_K(dep)
    pp = pr.build_param_polys(K)

    rng = np.random.default_rng(seed)
    root = None
    for attempt in range(attempts):
        w, iters, restarts = iterate_phiK(pp, rng, tol=tol, max_iter=max_iter,
                                          max_restarts=max_restarts)
        report.iterations += iters
        report.restarts += restarts + (1 if attempt else 0)
        try:
            s = pr.root_selector_J(pp, w)
        except pr.OnQuadricK:
            continue
        x = lam * s + dep.shift
        cand = mob.inverse(x) if report.regularized else x
        polished = newton_polish(p, cand)
        if abs(polished - cand) > 1e-4 * max(1.0, abs(cand)):
            report.polish_moved = True
        if abs(p(polished)) < 1e-9:
            report.converged_point = w
            report.selected_root_raw = complex(s)
            root = polished
            break
    if root is None:
        raise NoConvergence("dynamics did not deliver a usable root")

    quartic = _deflate(p.coeff_array, root)
    rest = [newton_polish(p, complex(r)) for r in np.roots(quartic)]
    roots = [root] + rest
    report.roots = [complex(r) for r in roots]
    report.residuals = [abs(p(r)) for r in roots]
    return report


# --- JSON surface ------------------------------------------------------------

def quintic_from_json(text: str) -> Quintic:
    data = json.loads(text)
    coeffs = data["coefficients"]
    if len(coeffs) != 5:
        raise ValueError("expected 5 coefficients a1..a5")
    return Quintic(tuple(complex(re, im) for re, im in coeffs))


def report_to_json(report: SolveReport) -> str:
    return json.dumps(report.to_json_dict(), indent=2, sort_keys=True)
