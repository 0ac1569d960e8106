"""Known order-6 matrices and their 2-circulant representations."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .equivalence import EquivalenceWitness
from .linalg import blocks, fourier_matrix, is_circulant, load_matrix, max_entry_dist, phase

__all__ = [
    "CirculantRepWitness", "dita_D", "dita_f32", "dita_circulant_witness",
    "bn_B", "bn_31re", "bn_circulant_witness", "principal_cbrt",
    "fourier6", "generalized_fourier", "load_matrix",
]

# (PB)[i] = B[_BN_ROWS[i]] for P = [e1, e4, e2, e5, e3, e6]
_BN_ROWS = (0, 2, 4, 1, 3, 5)
# (BQ)[:, j] = B[:, _BN_COLS[j]] for Q = [e5, e1, e3, e4, e6, e2]
_BN_COLS = (4, 0, 2, 3, 5, 1)


@dataclass(frozen=True)
class CirculantRepWitness(EquivalenceWitness):
    expected: np.ndarray = None

    def holds(self, m, tol: float = 1e-10, block_tol: float = 1e-12) -> bool:
        return (max_entry_dist(self.apply(m), self.expected) <= tol
                and all(is_circulant(b, block_tol) for b in blocks(self.expected)))


def principal_cbrt(z) -> complex:
    """Cube root of a unit-modulus z with argument in (-pi/3, pi/3]."""
    z = phase(z)
    t = cmath.phase(z)
    if t <= -math.pi + 1e-15:
        t = math.pi
    return cmath.exp(1j * t / 3)


def dita_D(t) -> np.ndarray:
    t = phase(t)
    i = 1j
    t3 = t ** 3
    return np.array([
        [1, 1, 1, 1, 1, 1],
        [1, -1, -i / t3, i, -i, i / t3],
        [1, -i * t3, -1, -i, i * t3, i],
        [1, i, -i, -1, i, -i],
        [1, -i, i / t3, i, -1, -i / t3],
        [1, i * t3, i, -i, -i * t3, -1],
    ], dtype=complex)


def dita_f32(t) -> np.ndarray:
    t = phase(t)
    i = 1j
    return np.array([
        [1, i / t, i * t, 1, 1 / t, -t],
        [i * t, 1, i / t, -t, 1, 1 / t],
        [i / t, i * t, 1, 1 / t, -t, 1],
        [1, -1 / t, t, -1, i / t, i * t],
        [t, 1, -1 / t, i * t, -1, i / t],
        [-1 / t, t, 1, i / t, i * t, -1],
    ], dtype=complex)


def dita_circulant_witness(t) -> CirculantRepWitness:
    t = phase(t)
    i = 1j
    return CirculantRepWitness(
        row_perm=tuple(range(6)),
        col_perm=tuple(range(6)),
        left_diag=np.array([1, i * t, i / t, 1, t, -1 / t], dtype=complex),
        right_diag=np.array([1, i / t, i * t, 1, 1 / t, -t], dtype=complex),
        expected=dita_f32(t),
    )


def bn_B(x, y, z) -> np.ndarray:
    """The self-adjoint pattern; Hadamard only for suitable (x, y, z)."""
    x, y, z = phase(x), phase(y), phase(z)
    w = x * y * z
    return np.array([
        [1, 1, 1, 1, 1, 1],
        [1, -1, -1 / x, -y, y, 1 / x],
        [1, -x, 1, y, 1 / z, -1 / w],
        [1, -1 / y, 1 / y, -1, -1 / w, 1 / w],
        [1, 1 / y, z, -w, 1, -1 / x],
        [1, x, -w, w, -x, -1],
    ], dtype=complex)


def bn_31re(x, y, z) -> np.ndarray:
    x, y, z = phase(x), phase(y), phase(z)
    c = principal_cbrt(z)
    c2 = c * c
    return np.array([
        [1, 1 / c, 1 / c2, 1, -x * y * c2, y * c],
        [1 / c2, 1, 1 / c, y * c, 1, -x * y * c2],
        [1 / c, 1 / c2, 1, -x * y * c2, y * c, 1],
        [1, 1 / (y * c), -1 / (x * y * c2), -1, -c2, -c],
        [-1 / (x * y * c2), 1, 1 / (y * c), -c, -1, -c2],
        [1 / (y * c), -1 / (x * y * c2), 1, -c2, -c, -1],
    ], dtype=complex)


def bn_circulant_witness(x, y, z) -> CirculantRepWitness:
    x, y, z = phase(x), phase(y), phase(z)
    c = principal_cbrt(z)
    c2 = c * c
    return CirculantRepWitness(
        row_perm=_BN_ROWS,
        col_perm=_BN_COLS,
        left_diag=np.array([1, c, 1 / c, 1 / y, c, -1 / (x * y * c)], dtype=complex),
        right_diag=np.array([1, 1 / c, 1 / c2, 1, -x * y * c2, y * c], dtype=complex),
        expected=bn_31re(x, y, z),
    )


def fourier6() -> np.ndarray:
    """F6 with unimodular entries."""
    return np.sqrt(6) * fourier_matrix(6)


def generalized_fourier(a_phase: float, b_phase: float) -> np.ndarray:
    """[[F3, W F3], [F3, -W F3]] with W = diag(1, e^{ia}, e^{ib}), entries unimodular."""
    f3 = np.sqrt(3) * fourier_matrix(3)
    w = np.diag([1.0, cmath.exp(1j * a_phase), cmath.exp(1j * b_phase)])
    return np.block([[f3, w @ f3], [f3, -w @ f3]])
