"""Named special orbits: distinguished points, lines, and planes of the
group action, plus incidence checks on the configuration they form.

Descriptors follow a fixed grammar with 1-based coordinate indices, e.g.
``p5_1``, ``p10_45_2``, ``q20_123_1``, ``L1_15_12_34``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import OMEGA3, OMEGA5, as_complex, x_to_u
from . import group

ALPHA = (-3 + np.sqrt(15) * 1j) / 2
BETA = (-2 + np.sqrt(5) * 1j) / 3
GAMMA = -1 + np.sqrt(2) * 1j

MEMBER_TOL = 1e-10


class UnknownDescriptor(ValueError):
    pass


class BadIndices(ValueError):
    pass


@dataclass(frozen=True)
class SpecialPoint:
    descriptor: str
    x: np.ndarray
    orbit_size: int
    stabilizer_order: int

    @property
    def u(self) -> np.ndarray:
        return x_to_u(self.x)


@dataclass(frozen=True)
class SpecialPlane:
    descriptor: str
    normal: np.ndarray  # plane is {normal . x = 0} inside {sum x = 0}

    def contains(self, x, tol: float = MEMBER_TOL) -> bool:
        x = as_complex(x)
        return abs(self.normal @ x) / (np.linalg.norm(self.normal)
                                       * np.linalg.norm(x)) < tol


@dataclass(frozen=True)
class SpecialLine:
    descriptor: str
    span: tuple[np.ndarray, np.ndarray]  # two 5-coordinate spanning points
    orbit_size: int

    def contains(self, x, tol: float = MEMBER_TOL) -> bool:
        x = as_complex(x)
        A = np.column_stack(self.span)
        coef, *_ = np.linalg.lstsq(A, x, rcond=None)
        return np.linalg.norm(A @ coef - x) / np.linalg.norm(x) < tol


def _idx(tok: str) -> list[int]:
    ix = [int(c) - 1 for c in tok]
    if any(i < 0 or i > 4 for i in ix) or len(set(ix)) != len(ix):
        raise BadIndices(f"bad index group {tok!r}")
    return ix


def _fill(pairs) -> np.ndarray:
    x = np.zeros(5, dtype=complex)
    for ix, val in pairs:
        for i in ix:
            x[i] = val
    return x


def _rest(*groups) -> list[int]:
    used = set().union(*groups)
    return [i for i in range(5) if i not in used]


def point(descriptor: str) -> SpecialPoint:
    """Representative of a named special point, indices permuted as asked."""
    toks = descriptor.split("_")
    kind = toks[0]
    try:
        if kind == "p5":
            (i,) = _idx(toks[1])
            x = np.ones(5, dtype=complex)
            x[i] = -4
            return SpecialPoint(descriptor, x, 5, 24)
        if kind == "p10":
            i, j = _idx(toks[1])
            var = toks[2]
            if var == "1":
                x = _fill([((i,), 1), ((j,), -1)])
            elif var == "2":
                x = _fill([((i, j), -3)]) + _fill([(tuple(_rest([i, j])), 2)])
            else:
                raise UnknownDescriptor(descriptor)
            return SpecialPoint(descriptor, x, 10, 12)
        if kind == "p15":
            (i,) = _idx(toks[1])
            jk = _idx(toks[2])
            if i in jk or len(jk) != 2:
                raise BadIndices(descriptor)
            x = _fill([(jk, 1), (tuple(_rest([i], jk)), -1)])
            return SpecialPoint(descriptor, x, 15, 8)
        if kind == "p20":
            (i,) = _idx(toks[1])
            jkl = _idx(toks[2])
            if i in jkl or len(jkl) != 3:
                raise BadIndices(descriptor)
            x = _fill([(jkl, 1), (tuple(_rest([i], jkl)), -3)])
            return SpecialPoint(descriptor, x, 20, 6)
        if kind == "p30":
            ij = _idx(toks[1])
            kl = _idx(toks[2])
            if len(ij) != 2 or len(kl) != 2 or set(ij) & set(kl):
                raise BadIndices(descriptor)
            x = _fill([(kl, 1), (tuple(_rest(ij, kl)), -2)])
            return SpecialPoint(descriptor, x, 30, 4)
        if kind == "q20":
            grp = _idx(toks[1])
            var = toks[2]
            conj = var == "2"
            if len(grp) == 2:
                rest = _rest(grp)
                vals = [1, OMEGA3, OMEGA3 ** 2]
                x = _fill(list(zip([(r,) for r in rest], vals)))
            elif len(grp) == 3:
                rest = _rest(grp)
                x = _fill([(grp, 1), ((rest[0],), ALPHA), ((rest[1],), np.conj(ALPHA))])
            else:
                raise BadIndices(descriptor)
            if conj:
                x = np.conj(x)
            return SpecialPoint(descriptor, x, 20, 6)
        if kind == "q24":
            exps = [int(c) for c in toks[1]] if len(toks) > 1 else [1, 2, 3, 4]
            if sorted(exps) != [1, 2, 3, 4]:
                raise BadIndices(descriptor)
            x = np.array([1] + [OMEGA5 ** e for e in exps], dtype=complex)
            return SpecialPoint(descriptor, x, 24, 5)
        if kind == "q30" and len(toks[1]) == 1:
            (i,) = _idx(toks[1])
            jk = _idx(toks[2])
            if i in jk or len(jk) != 2:
                raise BadIndices(descriptor)
            rest = _rest([i], jk)
            x = _fill([((jk[0],), 1), ((jk[1],), -1),
                       ((rest[0],), 1j), ((rest[1],), -1j)])
            if toks[3] == "2":
                x = np.conj(x)
            return SpecialPoint(descriptor, x, 30, 4)
        if kind == "q30":
            ij = _idx(toks[1])
            kl = _idx(toks[2])
            if set(ij) & set(kl) or len(ij) != 2 or len(kl) != 2:
                raise BadIndices(descriptor)
            b = np.conj(BETA) if toks[3] == "2" else BETA
            x = _fill([(ij, 1), (kl, b), (tuple(_rest(ij, kl)), -2 * (1 + b))])
            return SpecialPoint(descriptor, x, 30, 4)
        if kind == "q60":
            (i,) = _idx(toks[1])
            jk = _idx(toks[2])
            if i in jk or len(jk) != 2:
                raise BadIndices(descriptor)
            rest = _rest([i], jk)
            g = np.conj(GAMMA) if toks[3] == "2" else GAMMA
            x = _fill([(jk, 1), ((rest[0],), g), ((rest[1],), np.conj(g))])
            return SpecialPoint(descriptor, x, 60, 2)
    except (IndexError, ValueError) as exc:
        if isinstance(exc, (UnknownDescriptor, BadIndices)):
            raise
        raise UnknownDescriptor(descriptor) from exc
    raise UnknownDescriptor(descriptor)


def plane(descriptor: str) -> SpecialPlane:
    toks = descriptor.split("_")
    kind = "_".join(toks[:2])
    if kind == "L2_5":
        (i,) = _idx(toks[2])
        n = np.zeros(5)
        n[i] = 1
        return SpecialPlane(descriptor, n)
    if kind in ("L2_10", "M2_10"):
        i, j = _idx(toks[2])
        n = np.zeros(5)
        n[i] = 1
        n[j] = -1 if kind == "L2_10" else 1
        return SpecialPlane(descriptor, n)
    raise UnknownDescriptor(descriptor)


def _span_from_normals(normals) -> tuple[np.ndarray, np.ndarray]:
    """2-dim solution space of {sum x = 0} plus the given linear forms."""
    A = np.vstack([np.ones(5)] + [np.asarray(n, dtype=complex) for n in normals])
    _, s, vh = np.linalg.svd(A)
    null = vh.conj()[len(A):]
    if null.shape[0] < 2:
        raise BadIndices("defining planes do not cut out a line")
    return null[-2], null[-1]


_LINE_ORBIT_SIZES = {"L1_10": 10, "M1_10": 10, "L1_15": 15, "M1_15": 15, "L1_30": 30}


def line(descriptor: str) -> SpecialLine:
    """A special line built as the intersection of its defining planes."""
    toks = descriptor.split("_")
    kind = "_".join(toks[:2])
    if kind == "L1_10":
        i, j = _idx(toks[2])
        normals = [plane(f"L2_5_{i + 1}").normal, plane(f"L2_5_{j + 1}").normal]
    elif kind == "M1_10":
        i, j, k = _idx(toks[2])
        normals = [plane(f"L2_10_{i + 1}{j + 1}").normal,
                   plane(f"L2_10_{i + 1}{k + 1}").normal]
    elif kind in ("L1_15", "M1_15"):
        ij = _idx(toks[2])
        kl = _idx(toks[3])
        if set(ij) & set(kl):
            raise BadIndices(f"index pairs must be disjoint: {descriptor}")
        p = "L2_10" if kind == "L1_15" else "M2_10"
        normals = [plane(f"{p}_{ij[0] + 1}{ij[1] + 1}").normal,
                   plane(f"{p}_{kl[0] + 1}{kl[1] + 1}").normal]
    elif kind == "L1_30":
        (i,) = _idx(toks[2])
        j, k = _idx(toks[3])
        if i in (j, k):
            raise BadIndices(f"plane index must avoid the pair: {descriptor}")
        normals = [plane(f"L2_5_{i + 1}").normal,
                   plane(f"L2_10_{j + 1}{k + 1}").normal]
    else:
        raise UnknownDescriptor(descriptor)
    return SpecialLine(descriptor, _span_from_normals(normals),
                       _LINE_ORBIT_SIZES[kind])


# --- line orbit machinery ---------------------------------------------------

def _line_projector(s0, s1) -> np.ndarray:
    """Rank-2 orthogonal projector identifying the line span{s0, s1} in u."""
    A = np.column_stack([x_to_u(s0), x_to_u(s1)])
    Q, _ = np.linalg.qr(A)
    return Q @ Q.conj().T


def line_orbit_size(ln: SpecialLine, tol: float = 1e-8) -> int:
    projs: list[np.ndarray] = []
    u0, u1 = x_to_u(ln.span[0]), x_to_u(ln.span[1])
    for g in group.all_elements():
        A = np.column_stack([g.matrix @ u0, g.matrix @ u1])
        Q, _ = np.linalg.qr(A)
        P = Q @ Q.conj().T
        if not any(np.abs(P - P2).max() < tol for P2 in projs):
            projs.append(P)
    return len(projs)


def ruling_line_orbit_size(q_descriptor: str) -> int:
    """Size of the orbit of the a-ruling line through a named quadric point."""
    from .equivariants import ruling_coords

    p = point(q_descriptor)
    a, _ = ruling_coords(p.u)
    # the a-line: {a1 u1 + a2 u3 = 0, -a1 u2 + a2 u4 = 0}
    A = np.array([[a[0], 0, a[1], 0], [0, -a[0], 0, a[1]]], dtype=complex)
    _, _, vh = np.linalg.svd(A)
    s0, s1 = vh.conj()[2], vh.conj()[3]
    projs: list[np.ndarray] = []
    for g in group.all_elements():
        M = np.column_stack([g.matrix @ s0, g.matrix @ s1])
        Q, _ = np.linalg.qr(M)
        P = Q @ Q.conj().T
        if not any(np.abs(P - P2).max() < 1e-8 for P2 in projs):
            projs.append(P)
    return len(projs)


def verify_configuration() -> dict[str, bool]:
    """Incidence checks on the special configuration; True means verified."""
    report: dict[str, bool] = {}

    # three 15-lines through each 5-point; the 5-point on a 15-line is the
    # one whose index avoids all four line indices
    ok = True
    p = point("p5_1")
    for desc in ("L1_15_23_45", "L1_15_24_35", "L1_15_25_34"):
        ok &= line(desc).contains(p.x)
    report["three_15_lines_at_5_point"] = ok

    ln = line("L1_15_23_45")
    report["one_5_point_on_15_line"] = (
        ln.contains(point("p5_1").x)
        and not any(ln.contains(point(f"p5_{i}").x) for i in range(2, 6)))

    ok = True
    p = point("p10_12_2")
    for desc in ("L1_15_12_34", "L1_15_12_35", "L1_15_12_45"):
        ok &= line(desc).contains(p.x)
    report["three_15_lines_at_10_point"] = ok

    ln = line("L1_15_12_34")
    report["two_10_points_on_15_line"] = (
        ln.contains(point("p10_12_2").x) and ln.contains(point("p10_34_2").x))

    ln = line("M1_10_123")
    report["m10_line_contains_both_5_points"] = (
        ln.contains(point("p5_4").x) and ln.contains(point("p5_5").x))

    for kind, desc in [("L1_10", "L1_10_12"), ("M1_10", "M1_10_123"),
                       ("L1_15", "L1_15_12_34"), ("M1_15", "M1_15_12_34"),
                       ("L1_30", "L1_30_1_23")]:
        ln = line(desc)
        report[f"orbit_size_{kind}"] = line_orbit_size(ln) == ln.orbit_size

    for desc, size in [("q20_12_1", 40), ("q24", 24), ("q30_1_24_1", 60)]:
        report[f"quadric_line_orbit_{desc}"] = ruling_line_orbit_size(desc) == size

    return report
