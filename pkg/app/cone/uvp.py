from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np
import sympy


class UvpFactor(str, Enum):
    F8A = "F8a"
    F8B = "F8b"
    F8B_AS_PRINTED = "F8b-as-printed"
    F16 = "F16"
    F16_AS_PRINTED = "F16-as-printed"


# descending powers of x0², i.e. coefficients of x0^(2k) for k = n..0
_EVEN_COEFFS: dict[UvpFactor, tuple[int, ...]] = {
    UvpFactor.F8A: (1183744, -591872, 97600, -5904, 81),
    UvpFactor.F8B: (1183744, -1775616, 878400, -159408, 6561),
    UvpFactor.F8B_AS_PRINTED: (111183744, -1775616, 878400, -159408, 6561),
    UvpFactor.F16: (
        5116716384256,
        -10233432768512,
        7827661127680,
        -1021055926272,
        -834991220736,
        75713882112,
        209299178880,
        60512832,
        6561,
    ),
    UvpFactor.F16_AS_PRINTED: (
        516716384256,
        -10233432768512,
        7827661127680,
        -1021055926272,
        -834991220736,
        75713882112,
        209299178880,
        60512832,
        6561,
    ),
}

_X0 = sympy.Symbol("x0")


def coefficients(factor: UvpFactor) -> np.ndarray:
    """Dense descending coefficients (odd powers zero), ready for numpy.polyval."""
    even = _EVEN_COEFFS[UvpFactor(factor)]
    out = []
    for c in even[:-1]:
        out.extend([c, 0])
    out.append(even[-1])
    return np.array(out, dtype=float)


def as_poly(factor: UvpFactor) -> sympy.Poly:
    even = _EVEN_COEFFS[UvpFactor(factor)]
    n = len(even) - 1
    return sympy.Poly(sum(c * _X0 ** (2 * (n - k)) for k, c in enumerate(even)), _X0)


def uvp_residual(x0: float, factor: UvpFactor) -> float:
    return float(np.polyval(coefficients(factor), x0))


def scaled_residual(x0: float, factor: UvpFactor) -> float:
    """|f(x0)| relative to the largest monomial term at x0."""
    c = coefficients(factor)
    powers = np.abs(x0) ** np.arange(len(c) - 1, -1, -1)
    scale = float(np.max(np.abs(c) * powers))
    return abs(uvp_residual(x0, factor)) / scale


def real_roots(factor: UvpFactor, imag_tol: float = 1e-9) -> np.ndarray:
    roots = np.roots(coefficients(factor))
    real = roots[np.abs(roots.imag) <= imag_tol * np.maximum(1.0, np.abs(roots))].real
    return np.sort(real)


def nearest_real_root(x0: float, factor: UvpFactor) -> float | None:
    roots = real_roots(factor)
    if roots.size == 0:
        return None
    return float(roots[np.argmin(np.abs(roots - x0))])


@dataclass(frozen=True)
class RootCheck:
    x0: float
    factor: UvpFactor
    scaled_residual: float

    def as_dict(self) -> dict:
        return {"x0": self.x0, "factor": self.factor.value, "scaled_residual": self.scaled_residual}


def classify_root(x0: float, factors: Iterable[UvpFactor] = (UvpFactor.F8A, UvpFactor.F8B)) -> RootCheck:
    """The factor that x0 fits best, by scaled residual."""
    checks = [RootCheck(x0=x0, factor=f, scaled_residual=scaled_residual(x0, f)) for f in factors]
    return min(checks, key=lambda c: c.scaled_residual)


def _derivative_bound(abs_deriv: np.ndarray, a: float, b: float) -> float:
    m = max(abs(a), abs(b))
    return float(np.polyval(abs_deriv, m))


def f16_no_real_roots_check(
    grid: int = 4001,
    factor: UvpFactor = UvpFactor.F16,
    max_depth: int = 40,
) -> bool:
    """Certify that the factor has no real root.

    Positivity is sampled on [-R, R] with R = max(2, Cauchy bound), and each
    sample interval is accepted only when a derivative bound keeps the minimum
    above zero, bisecting where it does not. Outside [-R, R] the positive leading
    coefficient of the even polynomial decides.
    """
    c = coefficients(factor)
    if c[0] <= 0 or c[-1] <= 0:
        return False
    bound = max(2.0, 1.0 + float(np.max(np.abs(c[1:]) / abs(c[0]))))
    abs_deriv = np.abs(np.polyder(c))
    xs = np.linspace(-bound, bound, grid)
    values = np.polyval(c, xs)
    if np.any(values <= 0):
        return False
    stack = [(float(xs[i]), float(xs[i + 1]), float(values[i]), float(values[i + 1]), 0) for i in range(grid - 1)]
    while stack:
        a, b, fa, fb, depth = stack.pop()
        lower = 0.5 * (fa + fb) - 0.5 * _derivative_bound(abs_deriv, a, b) * (b - a)
        if lower > 0:
            continue
        if depth >= max_depth:
            return False
        m = 0.5 * (a + b)
        fm = float(np.polyval(c, m))
        if fm <= 0:
            return False
        stack.append((a, m, fa, fm, depth + 1))
        stack.append((m, b, fm, fb, depth + 1))
    return True


def factor_from_roots(roots: Sequence[complex], constant: int) -> np.ndarray:
    """Even polynomial ∏ (x² - r²) over the given roots and their conjugates.

    Roots are one representative of each ± pair; non-real roots are completed
    by conjugation. The result is scaled so its constant term equals `constant`.
    """
    full: list[complex] = []
    for r in roots:
        r = complex(r)
        full.append(r)
        if abs(r.imag) > 0:
            full.append(r.conjugate())
    poly = np.array([1.0 + 0j])
    for r in full:
        poly = np.polymul(poly, np.array([1.0, 0.0, -(r * r)]))
    poly = poly.real
    return poly * (constant / poly[-1])
