"""Dense complex matrix helpers shared by every other module.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  Diagonal
unitaries are 1-d arrays of unit-modulus phases.
"""
from __future__ import annotations

import os

import numpy as np

DEFAULT_TOL = 1e-9
PHASE_TOL = 1e-12


def as_matrix(m) -> np.ndarray:
    a = np.array(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf")
    return a


def phase(z, tol: float = PHASE_TOL) -> complex:
    """Validate that ``z`` is unit-modulus and return it as a Python complex."""
    z = complex(z)
    if not np.isfinite(z) or abs(abs(z) - 1.0) > tol:
        raise ValueError(f"{z!r} is not unit-modulus (|z|-1 = {abs(z) - 1.0:.3e})")
    return z


def phases(values, tol: float = PHASE_TOL) -> np.ndarray:
    a = np.asarray(values, dtype=complex).ravel()
    bad = np.abs(np.abs(a) - 1.0) > tol
    if np.any(bad):
        raise ValueError(f"diagonal entries {np.flatnonzero(bad).tolist()} are not unit-modulus")
    return a


def fourier_matrix(m: int) -> np.ndarray:
    """Unitary Fourier matrix, entry (j, k) = exp(2 pi i jk / m) / sqrt(m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    jk = np.outer(np.arange(m), np.arange(m)) % m
    return np.exp(2j * np.pi * jk / m) / np.sqrt(m)


def circulant(first_row) -> np.ndarray:
    """Circulant matrix whose row i is row i-1 shifted right by one.

    Entry (i, j) is ``first_row[(j - i) mod m]``, so (a, b, c) gives rows
    (a, b, c), (c, a, b), (b, c, a).
    """
    row = np.asarray(first_row, dtype=complex).ravel()
    m = row.size
    if m == 0:
        raise ValueError("circulant needs a nonempty first row")
    idx = (np.arange(m)[None, :] - np.arange(m)[:, None]) % m
    return row[idx]


def hadamard_residual(m) -> float:
    """max(|M M* - n I|, ||m_ij| - 1|) over all entries."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"hadamard_residual needs a square matrix, got {m.shape}")
    n = m.shape[0]
    gram = m @ m.conj().T - n * np.eye(n)
    return float(max(np.abs(gram).max(), np.abs(np.abs(m) - 1.0).max()))


def dephase(m):
    """Return ``(N, d1, d2)`` with ``N = diag(d1) M diag(d2)`` dephased.

    Uses ``d1 = m[0, 0] / m[:, 0]`` and ``d2 = 1 / m[0, :]``; the first row
    and column of ``N`` are then overwritten with exact ones.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"dephase needs a square matrix, got {m.shape}")
    if np.any(m == 0):
        i, j = np.argwhere(m == 0)[0]
        raise ValueError(f"zero entry at ({i}, {j}); cannot dephase")
    d1 = m[0, 0] / m[:, 0]
    d2 = 1.0 / m[0, :]
    n = d1[:, None] * m * d2[None, :]
    n[0, :] = 1.0
    n[:, 0] = 1.0
    return n, d1, d2


def max_entry_dist(a, b) -> float:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.abs(a - b).max())


def is_circulant(m, tol: float = 1e-12) -> bool:
    m = np.asarray(m, dtype=complex)
    return max_entry_dist(m, circulant(m[0])) <= tol


def blocks(m) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    m = np.asarray(m)
    h = m.shape[0] // 2
    return m[:h, :h], m[:h, h:], m[h:, :h], m[h:, h:]


def is_two_circulant(m, tol: float = 1e-9) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
        return False
    return all(is_circulant(b, tol) for b in blocks(m))


# --- matrix text format ---------------------------------------------------


class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def _fmt(x: float) -> str:
    x = float(x)
    if x == 0.0:
        x = 0.0  # drop negative zero so output is byte-stable
    return f"{x:.17g}"


def format_matrix(m) -> str:
    m = np.asarray(m, dtype=complex)
    if m.ndim == 1:
        m = m[None, :]
    lines = [f"{m.shape[0]} {m.shape[1]}"]
    for row in m:
        lines.append("  ".join(f"{_fmt(z.real)} {_fmt(z.imag)}" for z in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    rows: list[list[complex]] = []
    shape = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if shape is None:
            if len(tokens) != 2:
                raise MatrixFormatError("header must be '<nrows> <ncols>'", lineno)
            try:
                shape = (int(tokens[0]), int(tokens[1]))
            except ValueError:
                raise MatrixFormatError("header dimensions must be integers", lineno) from None
            if shape[0] < 1 or shape[1] < 1:
                raise MatrixFormatError("dimensions must be positive", lineno)
            continue
        if len(rows) == shape[0]:
            raise MatrixFormatError(f"more than {shape[0]} rows", lineno)
        if len(tokens) != 2 * shape[1]:
            raise MatrixFormatError(
                f"expected {shape[1]} entries ({2 * shape[1]} numbers), got {len(tokens)} numbers",
                lineno,
            )
        row = []
        for k in range(shape[1]):
            try:
                re, im = float(tokens[2 * k]), float(tokens[2 * k + 1])
            except ValueError:
                raise MatrixFormatError(f"bad number in entry {k + 1}", lineno, k + 1) from None
            row.append(complex(re, im))
        rows.append(row)
    if shape is None:
        raise MatrixFormatError("empty matrix file")
    if len(rows) != shape[0]:
        raise MatrixFormatError(f"expected {shape[0]} rows, found {len(rows)}")
    return as_matrix(rows)


def save_matrix(m, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix(m))


def load_matrix(path: str | os.PathLike) -> np.ndarray:
    with open(path) as fh:
        return parse_matrix(fh.read())
