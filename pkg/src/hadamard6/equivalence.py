"""Hadamard equivalence H = D1 P K Q D2 by exhaustive permutation search.

Permutations are index arrays: ``row_perm`` p and ``col_perm`` q act as
``(P K Q)[i, j] = K[p[i], q[j]]``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .linalg import dephase, hadamard_residual, max_entry_dist

log = logging.getLogger(__name__)

EQUIV_TOL = 1e-7
FINGERPRINT_TOL = 1e-6
_CHUNK = 40


@dataclass(frozen=True)
class EquivalenceWitness:
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    left_diag: np.ndarray
    right_diag: np.ndarray

    def apply(self, k) -> np.ndarray:
        """D1 P K Q D2."""
        k = np.asarray(k, dtype=complex)
        pkq = k[np.ix_(self.row_perm, self.col_perm)]
        return self.left_diag[:, None] * pkq * self.right_diag[None, :]

    def error(self, h, k) -> float:
        return max_entry_dist(self.apply(k), h)


@lru_cache(maxsize=None)
def _all_perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.intp)


def canonical_dephased(m, row_perm, col_perm) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    return dephase(m[np.ix_(list(row_perm), list(col_perm))])[0]


def _check_input(m, tol, name):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got {m.shape}")
    if m.shape[0] > 7:
        raise ValueError("exhaustive search is limited to order <= 7")
    res = hadamard_residual(m)
    if res > tol:
        log.warning("%s is not Hadamard at tol=%g (residual %.3e); searching anyway", name, tol, res)
    return m


def are_equivalent(h, k, tol: float = EQUIV_TOL):
    """Search all (P, Q) in lexicographic order for dephase(PKQ) = dephase(H).

    Returns the first witness found, or None.  Because the search is
    exhaustive, None certifies inequivalence at ``tol``.
    """
    h = _check_input(h, tol, "H")
    k = _check_input(k, tol, "K")
    if h.shape != k.shape:
        raise ValueError(f"shape mismatch: {h.shape} vs {k.shape}")
    n = h.shape[0]
    nh, e1, e2 = dephase(h)
    perms = _all_perms(n)
    for start in range(0, len(perms), _CHUNK):
        rows = perms[start:start + _CHUNK]
        # cand[a, b] = K[rows[a]][:, perms[b]]
        kp = k[rows]                                   # (c, n, n)
        cand = kp[:, :, perms]                         # (c, n, P, n)
        cand = np.moveaxis(cand, 2, 1)                 # (c, P, n, n)
        col0 = cand[:, :, :, :1]
        row0 = cand[:, :, :1, :]
        deph = cand * (cand[:, :, :1, :1] / (col0 * row0))
        err = np.abs(deph[:, :, 1:, 1:] - nh[None, None, 1:, 1:]).max(axis=(2, 3))
        hits = np.argwhere(err <= tol)
        if hits.size:
            a, b = hits[0]
            return _witness(h, k, rows[a], perms[b], e1, e2)
    return None


def _witness(h, k, p, q, e1, e2) -> EquivalenceWitness:
    _, g1, g2 = dephase(k[np.ix_(p, q)])
    # dephase(PKQ) = G1 PKQ G2 and dephase(H) = E1 H E2
    left = g1 / e1
    right = g2 / e2
    s = left[0]
    left, right = left / s, right * s
    return EquivalenceWitness(tuple(int(i) for i in p), tuple(int(j) for j in q), left, right)


def fingerprint(m) -> np.ndarray:
    """Sorted phases in [0, 2pi) of m_ij m_kl conj(m_il) conj(m_kj) over all i, j, k, l."""
    m = np.asarray(m, dtype=complex)
    if np.any(m == 0):
        raise ValueError("fingerprint needs nonzero entries")
    q = np.einsum("ij,kl,il,kj->ijkl", m, m, m.conj(), m.conj())
    ph = np.mod(np.angle(q), 2 * np.pi).ravel()
    ph[ph >= 2 * np.pi] = 0.0
    return np.sort(ph)


def fingerprints_match(f1, f2, tol: float = FINGERPRINT_TOL) -> bool:
    """Multiset equality on the circle, allowing the 0 / 2pi cut to move."""
    f1, f2 = np.asarray(f1), np.asarray(f2)
    if f1.shape != f2.shape:
        return False
    near_cut = int(np.sum((f1 < tol) | (f1 > 2 * np.pi - tol))
                   + np.sum((f2 < tol) | (f2 > 2 * np.pi - tol)))
    for shift in range(-near_cut, near_cut + 1):
        d = np.abs(f1 - np.roll(f2, shift))
        d = np.minimum(d, 2 * np.pi - d)
        if d.max() <= tol:
            return True
    return False


def are_equivalent_fast(h, k, tol: float = EQUIV_TOL):
    """Fingerprint rejection first, exhaustive search only on a match."""
    if not fingerprints_match(fingerprint(h), fingerprint(k), max(tol, FINGERPRINT_TOL)):
        return None
    return are_equivalent(h, k, tol)


def is_self_adjoint(m, tol: float = EQUIV_TOL) -> bool:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return max_entry_dist(m, m.conj().T) <= tol


def random_transform(m, rng) -> tuple[np.ndarray, EquivalenceWitness]:
    """Apply a random D1 P M Q D2; returns the image and the planted witness."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    w = EquivalenceWitness(
        tuple(int(i) for i in rng.permutation(n)),
        tuple(int(i) for i in rng.permutation(n)),
        np.exp(2j * np.pi * rng.random(n)),
        np.exp(2j * np.pi * rng.random(n)),
    )
    return w.apply(m), w


def partition(matrices, tol: float = EQUIV_TOL) -> list[list[int]]:
    """Group matrices into equivalence classes, first member of each class as representative."""
    fps = [fingerprint(m) for m in matrices]
    classes: list[list[int]] = []
    for i, m in enumerate(matrices):
        for cls in classes:
            rep = cls[0]
            if fingerprints_match(fps[rep], fps[i]) and are_equivalent(matrices[rep], m, tol) is not None:
                cls.append(i)
                break
        else:
            classes.append([i])
    return classes
