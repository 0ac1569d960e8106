"""MUB triplets from 2-circulant unitaries (Zauner's construction)."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .family import h_block_from_alpha
from .linalg import blocks, fourier_matrix, is_two_circulant, max_entry_dist, phase
from .region import discriminant, in_region

BRANCH_TOL = 1e-8
LEAKAGE_TOL = 1e-7


class TwoByTwoFactors(NamedTuple):
    u: complex
    v: complex
    x: complex
    y: complex


def compose_2x2(f) -> np.ndarray:
    """(1/2) [[u+v, y(u-v)], [(u-v)/x, y(u+v)/x]]."""
    u, v, x, y = (phase(z, 1e-9) for z in f)
    return 0.5 * np.array([[u + v, y * (u - v)], [(u - v) / x, y * (u + v) / x]])


def _unit(z: complex) -> complex:
    return z / abs(z)


def decompose_2x2(m, tol: float = 1e-9) -> TwoByTwoFactors:
    """Unit-modulus (u, v, x, y) with compose_2x2(u, v, x, y) = M."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {m.shape}")
    if max_entry_dist(m @ m.conj().T, np.eye(2)) > tol:
        raise ValueError("matrix is not unitary at the requested tolerance")
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    if abs(b) <= BRANCH_TOL:
        u = _unit(a)
        return TwoByTwoFactors(complex(u), complex(u), complex(_unit(u / d)), 1.0 + 0j)
    if abs(a) <= BRANCH_TOL:
        # u - v = 2, so y = b and x = 1/c
        return TwoByTwoFactors(1.0 + 0j, -1.0 + 0j, complex(_unit(1.0 / c)), complex(_unit(b)))
    # u, v solve z^2 - 2az + uv = 0; with |u| = |v| = 1 they are e^{i(theta +- psi)}
    # where a = e^{i theta} cos(psi) and |b| = sin(psi)
    rot = a / abs(a)
    psi = math.atan2(abs(b), abs(a))
    u = rot * cmath.exp(1j * psi)
    v = rot * cmath.exp(-1j * psi)
    half_diff = 1j * rot * math.sin(psi)
    y = b / half_diff
    # take x from whichever of c, d is larger to keep its phase well conditioned
    x = y * a / d if abs(a) >= abs(b) else half_diff / c
    return TwoByTwoFactors(*(complex(_unit(z)) for z in (u, v, x, y)))


def _diag_of_conjugated(block: np.ndarray) -> np.ndarray:
    """Diagonal of F C F^{-1}, so that C = F^{-1} diag F as in Z1^{-1} Z2."""
    f = fourier_matrix(block.shape[0])
    d = f @ block @ f.conj().T
    off = d - np.diag(np.diag(d))
    if np.abs(off).max(initial=0.0) > LEAKAGE_TOL:
        raise ValueError(f"block not diagonalized by the Fourier matrix (leakage {np.abs(off).max():.2e})")
    return np.diag(d).copy()


def block_diagonal_form(t):
    t = np.asarray(t, dtype=complex)
    if not is_two_circulant(t, 1e-9):
        raise ValueError("matrix is not 2-circulant")
    return tuple(_diag_of_conjugated(b) for b in blocks(t))


def zauner_z(U, V, X, Y):
    """Z1 = [[F, XF], [F, -XF]]/sqrt2 and Z2 = [[UF, UYF], [VF, -VYF]]/sqrt2."""
    m = len(U)
    f = fourier_matrix(m)
    U, V, X, Y = (np.diag(np.asarray(d, dtype=complex)) for d in (U, V, X, Y))
    z1 = np.block([[f, X @ f], [f, -X @ f]]) / np.sqrt(2)
    z2 = np.block([[U @ f, U @ Y @ f], [V @ f, -V @ Y @ f]]) / np.sqrt(2)
    return z1, z2


@dataclass
class MubReport:
    n: int
    unitarity: list[float]
    pairs: dict[tuple[int, int], float] = field(default_factory=dict)

    @property
    def max_deviation(self) -> float:
        return max(self.unitarity + list(self.pairs.values()), default=0.0)

    def passes(self, tol: float) -> bool:
        return self.max_deviation <= tol

    def lines(self, names=None) -> list[str]:
        names = names or [f"B{i}" for i in range(len(self.unitarity))]
        out = [f"unitarity {names[i]}: {dev:.3e}" for i, dev in enumerate(self.unitarity)]
        out += [f"unbiased {names[i]}-{names[j]}: {dev:.3e}" for (i, j), dev in self.pairs.items()]
        return out


def verify_mub(bases, tol: float = 1e-8, include_standard: bool = False) -> MubReport:
    """Unitarity of each basis and | |<e, f>| - 1/sqrt(n) | over every cross pair of columns."""
    bases = [np.asarray(b, dtype=complex) for b in bases]
    if not bases:
        raise ValueError("no bases given")
    n = bases[0].shape[0]
    for b in bases:
        if b.shape != (n, n):
            raise ValueError(f"dimension mismatch: {b.shape} vs {(n, n)}")
    if include_standard:
        bases = [np.eye(n, dtype=complex)] + bases
    target = 1.0 / np.sqrt(n)
    report = MubReport(n, [max_entry_dist(b.conj().T @ b, np.eye(n)) for b in bases])
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            g = bases[i].conj().T @ bases[j]
            report.pairs[(i, j)] = float(np.abs(np.abs(g) - target).max())
    return report


@dataclass
class MubTriplet:
    z1: np.ndarray
    z2: np.ndarray
    factors: list[TwoByTwoFactors]
    report: MubReport
    reconstruction_error: float

    def is_valid(self, tol: float = 1e-7) -> bool:
        return self.report.passes(tol) and self.reconstruction_error <= tol


def zauner_bases(t, tol: float = 1e-8) -> MubTriplet:
    t = np.asarray(t, dtype=complex)
    n = t.shape[0]
    if max_entry_dist(t @ t.conj().T, np.eye(n)) > tol:
        raise ValueError("seed is not unitary")
    a, b, c, d = block_diagonal_form(t)
    factors = [decompose_2x2(np.array([[a[k], b[k]], [c[k], d[k]]]), max(tol, 1e-9)) for k in range(n // 2)]
    U, V, X, Y = (np.array(col) for col in zip(*factors))
    z1, z2 = zauner_z(U, V, X, Y)
    err = max_entry_dist(z1.conj().T @ z2, t)
    if err > 1e-7:
        raise ValueError(f"decomposition failed: |Z1^-1 Z2 - T| = {err:.3e}")
    report = verify_mub([z1, z2], include_standard=True)
    return MubTriplet(z1, z2, factors, report, err)


def mub_from_alpha(alpha) -> MubTriplet:
    a = complex(alpha)
    if not in_region(a):
        raise ValueError(f"alpha outside region: D[a]={discriminant(a):.17g}, D[-a]={discriminant(-a):.17g}")
    return zauner_bases(h_block_from_alpha(a) / np.sqrt(6))
