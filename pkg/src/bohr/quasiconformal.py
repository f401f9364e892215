"""Harmonic pairs f = h + conj(g), the K <-> k dictionary and dilatation checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .power_series import Series, derivative

__all__ = [
    "HarmonicPair",
    "declared_check_radius",
    "k_from_K",
    "K_from_k",
    "dilatation_sup",
    "DilatationError",
    "QuadraticMajorantReport",
    "check_quadratic_majorant",
    "energy_series_bound",
    "coanalytic_tail_bound",
]

_DECLARED_RADIUS = 0.95
_DECLARED_SAMPLES = 1024
_DECLARED_SLACK = 1e-6
_TRUNCATION_EPS = 1e-12


def k_from_K(K: float) -> float:
    """k = (K-1)/(K+1); K = inf maps to k = 1."""
    if not K >= 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if math.isinf(K):
        return 1.0
    return (K - 1.0) / (K + 1.0)


def K_from_k(k: float) -> float:
    """K = (1+k)/(1-k); the limiting value k = 1 maps to inf."""
    if not 0.0 <= k <= 1.0:
        raise ValueError(f"k must lie in [0, 1], got {k}")
    if k == 1.0:
        return math.inf
    return (1.0 + k) / (1.0 - k)


class DilatationError(ValueError):
    """h' vanishes (numerically) at a sample point."""


def _ratio_on_circle(h: Series, g: Series, r: float, samples: int):
    dh = derivative(h).circle_values(r, samples)
    dg = derivative(g).circle_values(r, samples)
    return dg, dh


def declared_check_radius(h: Series, g: Series) -> float:
    """Radius for the declared-k check: 0.95, or less when truncation matters.

    The derivative ratio is only meaningful where the dropped and the
    high-order coefficients are negligible, so the radius is capped at the
    largest r with n(|a_n| + |b_n|) r^(n-1) <= 1e-12 |a_1| for n > N/2.
    """
    n = np.arange(h.order + 1)
    mass = n * (np.abs(h.coeffs) + np.abs(g.coeffs))
    upper = (n > h.order // 2) & (mass > 0) & (n > 1)
    scale = abs(h.coeffs[1]) if h.order >= 1 else 0.0
    if not upper.any() or scale == 0:
        return _DECLARED_RADIUS
    limits = np.exp((np.log(_TRUNCATION_EPS * scale) - np.log(mass[upper])) / (n[upper] - 1))
    return float(min(_DECLARED_RADIUS, limits.min()))


@dataclass(frozen=True, eq=False)
class HarmonicPair:
    """Analytic part h (a_n) and co-analytic part g (b_n) of f = h + conj(g).

    ``g(0) = 0`` is enforced.  When ``k_declared`` is given, the sampled
    dilatation |g'/h'| on |z| = 0.95 must not exceed it (points where h'
    is numerically zero are skipped, the ratio there being a removable
    singularity for the pairs built in this package).  For slowly decaying
    coefficients at small orders the circle shrinks, see
    :func:`declared_check_radius`.
    """

    h: Series
    g: Series
    k_declared: float | None = None

    def __post_init__(self):
        if self.g.coeffs[0] != 0:
            raise ValueError("canonical representation needs g(0) == 0")
        n = max(self.h.order, self.g.order)
        object.__setattr__(self, "h", self.h.padded(n))
        object.__setattr__(self, "g", self.g.padded(n))
        if self.k_declared is not None:
            if not 0.0 <= self.k_declared <= 1.0:
                raise ValueError(f"k_declared must lie in [0, 1], got {self.k_declared}")
            dg, dh = _ratio_on_circle(self.h, self.g, declared_check_radius(self.h, self.g),
                                      _DECLARED_SAMPLES)
            scale = np.abs(dh).max()
            if scale > 0:
                ok = np.abs(dh) > 1e-8 * scale
                sup = float(np.max(np.abs(dg[ok] / dh[ok]), initial=0.0))
                if sup > self.k_declared + _DECLARED_SLACK:
                    raise ValueError(
                        f"sampled dilatation {sup:.9g} exceeds declared k={self.k_declared}")

    @property
    def order(self) -> int:
        return self.h.order

    @property
    def a(self) -> np.ndarray:
        return self.h.coeffs

    @property
    def b(self) -> np.ndarray:
        return self.g.coeffs

    def scaled(self, t: float) -> HarmonicPair:
        """Scale h - h(0) and g by t, keeping h(0)."""
        h = self.h * t + (1 - t) * self.h.coeffs[0]
        return HarmonicPair(h, self.g * t, self.k_declared)


def dilatation_sup(pair: HarmonicPair, r: float, samples: int = 1024) -> float:
    """max of |g'/h'| over ``samples`` equispaced points of |z| = r."""
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    dg, dh = _ratio_on_circle(pair.h, pair.g, r, samples)
    if np.any(np.abs(dh) < 1e-12):
        j = int(np.argmin(np.abs(dh)))
        raise DilatationError(f"h' vanishes near z = {r}*exp(2*pi*i*{j}/{samples})")
    return float(np.max(np.abs(dg / dh)))


def energy_series_bound(growth: str, rho: float) -> float:
    """Upper bound for sum n^2 |a_n|^2 rho^(2n-2) / C^2.

    ``growth='convex'`` assumes |a_n| <= C, ``'univalent'`` assumes |a_n| <= nC.
    """
    x = rho * rho
    if growth == "convex":
        return (1 + x) / (1 - x) ** 3
    if growth == "univalent":
        return (x**3 + 11 * x**2 + 11 * x + 1) / (1 - x) ** 5
    raise ValueError(f"unknown growth model {growth!r}")


def coanalytic_tail_bound(N: int, r: float, k: float, C: float, growth: str,
                          power: int = 1) -> float:
    """Bound for sum_{n>N} |b_n|^power r^n when |g'| <= k|h'|.

    Integrating |g'|^2 <= k^2 |h'|^2 over |z| = rho gives
    n |b_n| rho^(n-1) <= k C sqrt(S(rho)) with S from ``energy_series_bound``.
    With rho chosen so that q = r / rho^power < 1 the tail is geometric.
    """
    if k == 0 or C == 0:
        return 0.0
    rho = r ** (1.0 / (2 * power))  # q = sqrt(r)
    q = r / rho**power
    m = k * C * math.sqrt(energy_series_bound(growth, rho)) * rho
    return (m**power) * q ** (N + 1) / ((N + 1) ** power * (1 - q))


def _sum_n2_tail(N: int, r: float) -> float:
    """sum_{n>N} n^2 r^n in closed form."""
    M = N + 1
    return r**M * (M * M - (2 * M * M - 2 * M - 1) * r + (M - 1) ** 2 * r * r) / (1 - r) ** 3


@dataclass(frozen=True)
class QuadraticMajorantReport:
    r: float
    k: float
    lhs: float
    rhs: float
    lhs_tail_bound: float
    rhs_tail_bound: float
    margin: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.margin >= -self.tolerance


def check_quadratic_majorant(pair: HarmonicPair, k: float, r: float,
                             deriv0: float | None = None, growth: str = "univalent",
                             tol: float = 1e-10) -> QuadraticMajorantReport:
    """Compare sum |b_n|^2 r^n with k^2 sum |a_n|^2 r^n (n >= 1).

    ``deriv0`` is |phi'(0)| of the subordinating map; without it the growth
    constant is estimated as max |a_n|/n over the computed coefficients.
    The margin is rhs - lhs of the truncated sums; the tail bounds are
    reported alongside it.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    N = pair.order
    n = np.arange(1, N + 1)
    rn = r ** n.astype(float)
    a2 = np.abs(pair.a[1:]) ** 2
    b2 = np.abs(pair.b[1:]) ** 2
    lhs = math.fsum(b2 * rn)
    rhs = k * k * math.fsum(a2 * rn)
    if deriv0 is None:
        C = float(np.max(np.sqrt(a2) / n, initial=0.0))
    else:
        C = abs(deriv0)
    if growth == "univalent":
        rhs_tail = k * k * C * C * _sum_n2_tail(N, r)
    else:
        rhs_tail = k * k * C * C * r ** (N + 1) / (1 - r)
    lhs_tail = coanalytic_tail_bound(N, r, k, C, growth, power=2)
    return QuadraticMajorantReport(r, k, lhs, rhs, lhs_tail, rhs_tail, rhs - lhs, tol)
