"""The deltoid parameter domain: phi, the discriminant and region membership."""
from __future__ import annotations

import csv
import enum
import io

import numpy as np

from .linalg import phase

INSIDE_EPS = 1e-12
BOUNDARY_BAND = 1e-9
MAX_RADIUS = float(np.sqrt(6 * np.sqrt(3) - 9))


class RegionClass(str, enum.Enum):
    INTERIOR = "interior"
    BOUNDARY_PLUS = "boundary_plus"
    BOUNDARY_MINUS = "boundary_minus"
    CUSP_BOTH = "cusp_both"
    OUTSIDE = "outside"


def phi(x, y) -> complex:
    """x + y + 1/(xy) for unit-modulus x, y."""
    x, y = phase(x), phase(y)
    return x + y + 1.0 / (x * y)


def discriminant(alpha) -> float:
    """Closed form of the discriminant of x^3 - a x^2 + conj(a) x - 1."""
    a = complex(alpha)
    r2 = a.real * a.real + a.imag * a.imag
    return r2 * r2 + 18.0 * r2 - 8.0 * (a ** 3).real - 27.0


def in_region(alpha, eps: float = INSIDE_EPS) -> bool:
    a = complex(alpha)
    return discriminant(a) <= eps and discriminant(-a) <= eps


def classify(alpha, band: float = BOUNDARY_BAND) -> RegionClass:
    a = complex(alpha)
    dp, dm = discriminant(a), discriminant(-a)
    on_p, on_m = abs(dp) <= band, abs(dm) <= band
    if on_p and on_m:
        return RegionClass.CUSP_BOTH
    if on_p and dm < -band:
        return RegionClass.BOUNDARY_PLUS
    if on_m and dp < -band:
        return RegionClass.BOUNDARY_MINUS
    if dp < -band and dm < -band:
        return RegionClass.INTERIOR
    return RegionClass.OUTSIDE


def extremal_points() -> tuple[list[complex], list[complex]]:
    """Six farthest and six closest boundary points, k = 1..6."""
    ks = range(1, 7)
    maximal = [MAX_RADIUS * np.exp(1j * (np.pi / 6 + k * np.pi / 3)) for k in ks]
    minimal = [np.exp(1j * k * np.pi / 3) for k in ks]
    return [complex(a) for a in maximal], [complex(a) for a in minimal]


def sample_region(xmin, xmax, ymin, ymax, nx, ny):
    """Classify a regular grid; rows ordered with y outer, x inner."""
    if nx < 2 or ny < 2:
        raise ValueError("grid needs at least 2 points per axis")
    if not (xmin < xmax and ymin < ymax):
        raise ValueError("bounds must satisfy xmin < xmax and ymin < ymax")
    out = []
    for y in np.linspace(ymin, ymax, ny):
        for x in np.linspace(xmin, xmax, nx):
            a = complex(x, y)
            out.append((a, classify(a)))
    return out


def region_csv(samples) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re", "im", "class", "d_plus", "d_minus"])
    for a, cls in samples:
        w.writerow([f"{a.real:.17g}", f"{a.imag:.17g}", cls.value,
                    f"{discriminant(a):.17g}", f"{discriminant(-a):.17g}"])
    return buf.getvalue()


def boundary_point(theta: float, tol: float = 1e-12) -> complex:
    """Point where the ray at angle ``theta`` leaves the region, by bisection."""
    u = np.exp(1j * theta)
    lo, hi = 0.0, 3.0

    def worst(s):
        return max(discriminant(s * u), discriminant(-s * u))

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if worst(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return complex(lo * u)
