"""The 2-circulant block matrix H and its dephased two-parameter family X6."""
from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

from .cubic import PAIR_ORDER, double_root, falpha, solve_falpha
from .linalg import circulant, phase
from .region import BOUNDARY_BAND, discriminant, in_region, phi

QUADRUPLE_TOL = 1e-6


class FamilyVariant(str, enum.Enum):
    STANDARD = "standard"
    TRANSPOSE = "transpose"


class BlockParams(NamedTuple):
    a: complex
    b: complex
    c: complex
    d: complex
    e: complex
    f: complex

    @classmethod
    def from_quadruple(cls, x, y, u, v) -> "BlockParams":
        xc, yc, uc, vc = (np.conj(complex(z)) for z in (x, y, u, v))
        return cls(1.0 + 0j, xc, xc * yc, 1.0 + 0j, uc, uc * vc)

    def orthogonality_scalar(self) -> float:
        a, b, c, d, e, f = self
        return abs(a / b + b / c + c / a + d / e + e / f + f / d)


class Quadruple(NamedTuple):
    x: complex
    y: complex
    u: complex
    v: complex

    def defect(self) -> float:
        """|phi(x, y) + phi(u, v)|; zero exactly for Hadamard-generating quadruples."""
        return abs(phi(self.x, self.y) + phi(self.u, self.v))


def h_block(p) -> np.ndarray:
    """[[A, B], [B*, -A*]] with A = circ(a, b, c), B = circ(d, e, f)."""
    a, b, c, d, e, f = (phase(z) for z in p)
    A = circulant([a, b, c])
    B = circulant([d, e, f])
    return np.block([[A, B], [B.conj().T, -A.conj().T]])


def x6_from_quadruple(q, tol: float = QUADRUPLE_TOL) -> np.ndarray:
    x, y, u, v = (phase(z, tol) for z in q)
    defect = Quadruple(x, y, u, v).defect()
    if defect > tol:
        raise ValueError(f"quadruple does not satisfy phi(x,y) + phi(u,v) = 0: |sum| = {defect:.3e}")
    xy, uv = x * y, u * v
    return np.array([
        [1, 1, 1, 1, 1, 1],
        [1, x * x * y, x * y * y, xy / uv, u * xy, v * xy],
        [1, x / y, x * x * y, x / u, x / v, uv * x],
        [1, uv * x, u * xy, -1, -u * xy, -uv * x],
        [1, x / u, v * xy, -x / u, -1, -v * xy],
        [1, x / v, xy / uv, -xy / uv, -x / v, -1],
    ], dtype=complex)


def _double_root_estimate(alpha: complex) -> complex:
    """Double root of f_alpha on the boundary, as the critical point where |f| is smallest."""
    a = complex(alpha)
    sq = np.sqrt(complex(4 * a * a - 12 * a.conjugate()))
    crit = [(2 * a + sq) / 6, (2 * a - sq) / 6]
    r = min(crit, key=lambda z: abs(falpha(a, z)))
    return r / abs(r)


def _root_pair(alpha: complex, on_boundary: bool) -> tuple[complex, complex]:
    if on_boundary:
        r = _double_root_estimate(alpha)
        return r, 1.0 / (r * r)
    roots = solve_falpha(alpha)
    return roots[0], roots[1]


def quadruple_from_alpha(alpha) -> Quadruple:
    """Deterministic root choice for ``alpha``.

    Simple roots: x, y are the first two roots of f_alpha and u, v the first
    two of f_{-alpha}.  On a boundary side (discriminant within the band, or
    roots closer than ``DOUBLE_ROOT_TOL``) the double root r is used as
    (r, 1/r^2).  When only the -alpha side degenerates the two halves are
    swapped so that the self-adjoint circulant block sits in the upper-left
    corner; swapping the blocks of H is itself an equivalence.
    """
    a = complex(alpha)
    if not in_region(a):
        raise ValueError(f"alpha outside region: D[a]={discriminant(a):.17g}, D[-a]={discriminant(-a):.17g}")
    plus_edge = abs(discriminant(a)) <= BOUNDARY_BAND or double_root(solve_falpha(a)) is not None
    minus_edge = abs(discriminant(-a)) <= BOUNDARY_BAND or double_root(solve_falpha(-a)) is not None
    x, y = _root_pair(a, plus_edge)
    u, v = _root_pair(-a, minus_edge)
    if minus_edge and not plus_edge:
        return Quadruple(u, v, x, y)
    return Quadruple(x, y, u, v)


def x6_from_alpha(alpha, variant=FamilyVariant.STANDARD) -> np.ndarray:
    m = x6_from_quadruple(quadruple_from_alpha(alpha))
    if FamilyVariant(variant) is FamilyVariant.TRANSPOSE:
        m = m.T.copy()
    return m


def h_block_from_alpha(alpha) -> np.ndarray:
    return h_block(BlockParams.from_quadruple(*quadruple_from_alpha(alpha)))


def all_quadruples(alpha) -> list[Quadruple]:
    a = complex(alpha)
    if not in_region(a):
        raise ValueError(f"alpha={a} is outside the region")
    r = solve_falpha(a)
    q = solve_falpha(-a)
    return [Quadruple(r[i], r[j], q[k], q[l]) for i, j in PAIR_ORDER for k, l in PAIR_ORDER]


def all_variants(alpha) -> list[np.ndarray]:
    """The 36 matrices over ordered distinct-root pairs, x-pair index major."""
    return [x6_from_quadruple(q) for q in all_quadruples(alpha)]
