"""Roots of f_a(x) = x^3 - a x^2 + conj(a) x - 1, the inverse of phi."""
from __future__ import annotations

import cmath
import math
from itertools import permutations
from typing import NamedTuple

from .region import in_region

DOUBLE_ROOT_TOL = 1e-6
_OMEGA = cmath.exp(2j * math.pi / 3)


class RootTriple(NamedTuple):
    r1: complex
    r2: complex
    r3: complex


def falpha(alpha, x) -> complex:
    a = complex(alpha)
    return ((x - a) * x + a.conjugate()) * x - 1.0


def _dfalpha(alpha, x) -> complex:
    a = complex(alpha)
    return (3.0 * x - 2.0 * a) * x + a.conjugate()


def _principal_arg(z: complex) -> float:
    t = cmath.phase(z)
    # keep the negative real axis at +pi despite signed-zero imaginary parts
    if t <= -math.pi + 1e-12:
        t = math.pi
    return t


def root_sort_key(z: complex):
    return (_principal_arg(z), -z.real)


def _cardano(alpha: complex) -> list[complex]:
    a2, a1, a0 = -alpha, alpha.conjugate(), -1.0
    shift = a2 / 3.0
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2 ** 3 / 27.0 - a2 * a1 / 3.0 + a0
    sq = cmath.sqrt((q / 2.0) ** 2 + (p / 3.0) ** 3)
    w = -q / 2.0 + sq if abs(-q / 2.0 + sq) >= abs(-q / 2.0 - sq) else -q / 2.0 - sq
    if w == 0:
        return [-shift] * 3
    c = w ** (1.0 / 3.0)
    ts = []
    for k in range(3):
        ck = c * _OMEGA ** k
        ts.append(ck - p / (3.0 * ck))
    return [t - shift for t in ts]


def _polish(alpha: complex, r: complex, steps: int = 2) -> complex:
    for _ in range(steps):
        d = _dfalpha(alpha, r)
        if d == 0:
            break
        cand = r - falpha(alpha, r) / d
        if abs(falpha(alpha, cand)) > abs(falpha(alpha, r)):
            break
        r = cand
    return r


def solve_falpha(alpha) -> RootTriple:
    """The three roots of f_alpha ordered by ascending principal argument.

    Inside the region the roots are unit-modulus in exact arithmetic, so
    each is divided by its modulus after polishing.
    """
    a = complex(alpha)
    roots = [_polish(a, r) for r in _cardano(a)]
    if in_region(a):
        roots = [r / abs(r) for r in roots]
    roots.sort(key=root_sort_key)
    return RootTriple(*roots)


def product_discriminant(roots) -> float:
    r1, r2, r3 = roots
    return float(((r1 - r2) ** 2 * (r2 - r3) ** 2 * (r3 - r1) ** 2).real)


def double_root(roots, tol: float = DOUBLE_ROOT_TOL):
    """Return ``(r, s)`` for a root pattern (r, r, s), or None if simple."""
    for i, j in ((0, 1), (1, 2), (0, 2)):
        if abs(roots[i] - roots[j]) < tol:
            k = 3 - i - j
            return 0.5 * (roots[i] + roots[j]), roots[k]
    return None


PAIR_ORDER = tuple(permutations(range(3), 2))


def invert_phi(alpha) -> list[tuple[complex, complex]]:
    """All six ordered pairs of distinct-index roots; each satisfies phi(x, y) = alpha."""
    a = complex(alpha)
    if not in_region(a):
        raise ValueError(f"alpha={a} is outside the region")
    roots = solve_falpha(a)
    return [(roots[i], roots[j]) for i, j in PAIR_ORDER]
