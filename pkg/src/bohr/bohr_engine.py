"""Bohr majorant sums with tail bounds, verdicts and empirical radii."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .mapping_catalog import is_univalent_class
from .quasiconformal import HarmonicPair, coanalytic_tail_bound

__all__ = [
    "BohrReport",
    "GROWTH_MODELS",
    "bohr_sum",
    "bohr_sum_sq0",
    "tail_bound",
    "empirical_bohr_radius",
    "SaturatedRadius",
    "HOLDS_TAIL_FRACTION",
]

GROWTH_MODELS = ("convex_bound", "univalent_bound", "geometric")

# "holds" is only reported when the tail is below this fraction of dist0
HOLDS_TAIL_FRACTION = 1e-9


@dataclass(frozen=True)
class BohrReport:
    r: float
    partial_sum: float
    tail_bound: float
    dist0: float

    @property
    def total_bound(self) -> float:
        return self.partial_sum + self.tail_bound

    @property
    def verdict(self) -> str:
        if self.partial_sum > self.dist0:
            return "fails"
        if (self.partial_sum + self.tail_bound <= self.dist0
                and self.tail_bound < HOLDS_TAIL_FRACTION * self.dist0):
            return "holds"
        return "inconclusive"

    @property
    def margin(self) -> float:
        return self.dist0 - self.partial_sum

    def to_record(self) -> dict:
        d = asdict(self)
        return {"r": d["r"], "sum": d["partial_sum"], "tail": d["tail_bound"],
                "dist": d["dist0"], "verdict": self.verdict}


def _geometric_fit(m: np.ndarray) -> tuple[float, float]:
    """Fit m_n <= C rho^n on the upper quarter of the computed coefficients."""
    n = np.arange(m.size)
    lo = max(1, (3 * m.size) // 4)
    tail, idx = m[lo:], n[lo:]
    if not np.any(tail > 0):
        return 0.0, 0.0
    pos = tail > 0
    if pos.sum() >= 2:
        slope = np.polyfit(idx[pos], np.log(tail[pos]), 1)[0]
        rho = float(np.exp(slope))
    else:
        rho = 1.0
    C = float(np.max(tail[pos] / rho ** idx[pos].astype(float)))
    return C, rho


def tail_bound(pair: HarmonicPair, r: float, growth: str, deriv0: float | None = None,
               k: float | None = None) -> float:
    """Bound for sum_{n>N} (|a_n| + |b_n|) r^n under the chosen growth model.

    ``convex_bound``:    |a_n| <= C,    tail C r^(N+1)/(1-r)
    ``univalent_bound``: |a_n| <= nC,   tail C r^(N+1)((N+1) - N r)/(1-r)^2
    For both, the b_n tail comes from |g'| <= k|h'| (k defaults to the
    pair's declared k, else 1).  ``geometric`` fits |a_n| + |b_n| <= C rho^n
    on the computed coefficients; it is a heuristic, not a bound.
    """
    N = pair.order
    if growth == "geometric":
        C, rho = _geometric_fit(np.abs(pair.a) + np.abs(pair.b))
        if C == 0:
            return 0.0
        q = rho * r
        if q >= 1:
            return math.inf
        return C * q ** (N + 1) / (1 - q)
    if growth not in GROWTH_MODELS:
        raise ValueError(f"unknown growth model {growth!r}")
    if deriv0 is None:
        raise ValueError(f"{growth} needs |phi'(0)| (deriv0)")
    C = abs(deriv0)
    if k is None:
        k = 1.0 if pair.k_declared is None else pair.k_declared
    rN = r ** (N + 1)
    if growth == "convex_bound":
        a_tail = C * rN / (1 - r)
        b_tail = coanalytic_tail_bound(N, r, k, C, "convex")
    else:
        a_tail = C * rN * ((N + 1) - N * r) / (1 - r) ** 2
        b_tail = coanalytic_tail_bound(N, r, k, C, "univalent")
    return a_tail + b_tail


def _check_growth(growth: str, phi_class: str | None) -> None:
    if growth not in GROWTH_MODELS:
        raise ValueError(f"unknown growth model {growth!r}; expected one of {GROWTH_MODELS}")
    if phi_class is None:
        return
    if growth == "convex_bound" and phi_class != "convex":
        raise ValueError(f"convex_bound tail is not valid for a {phi_class} phi")
    if growth == "univalent_bound" and not is_univalent_class(phi_class):
        raise ValueError(f"univalent_bound tail is not valid for class {phi_class!r}")


def _partial(pair: HarmonicPair, r: float) -> float:
    n = np.arange(1, pair.order + 1, dtype=float)
    weights = r**n
    return math.fsum((np.abs(pair.a[1:]) + np.abs(pair.b[1:])) * weights)


def bohr_sum(pair: HarmonicPair, r: float, growth: str = "geometric", *,
             dist0: float, deriv0: float | None = None, phi_class: str | None = None,
             k: float | None = None) -> BohrReport:
    """sum_{n>=1} (|a_n| + |b_n|) r^n against dist0, with a tail bound."""
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    _check_growth(growth, phi_class)
    return BohrReport(float(r), _partial(pair, r),
                      tail_bound(pair, r, growth, deriv0, k), float(dist0))


def bohr_sum_sq0(pair: HarmonicPair, r: float, growth: str = "geometric", *,
                 dist0: float = 1.0, deriv0: float | None = None,
                 phi_class: str | None = None, k: float | None = None) -> BohrReport:
    """|a_0|^2 + sum_{n>=1} (|a_n| + |b_n|) r^n (compared with dist0, default 1)."""
    base = bohr_sum(pair, r, growth, dist0=dist0, deriv0=deriv0, phi_class=phi_class, k=k)
    a0sq = abs(pair.a[0]) ** 2
    return BohrReport(base.r, a0sq + base.partial_sum, base.tail_bound, base.dist0)


class SaturatedRadius(float):
    """Returned when the sum stays below dist0 all the way to 1 - eps."""


def empirical_bohr_radius(pair: HarmonicPair, dist0: float, tol: float = 1e-12,
                          growth: str = "geometric", deriv0: float | None = None,
                          eps: float = 1e-6, max_iter: int = 200) -> float:
    """Bisection for the r where the Bohr sum reaches dist0.

    The comparison uses partial sum + tail bound, so the inequality holds on
    (0, r* - tol).  If it still holds at 1 - eps a :class:`SaturatedRadius`
    equal to 1 - eps is returned.
    """
    if dist0 <= 0:
        raise ValueError("dist0 must be positive")

    def above(r):
        tail = tail_bound(pair, r, growth, deriv0)
        return _partial(pair, r) + tail > dist0

    lo, hi = 0.0, 1.0 - eps
    if not above(hi):
        return SaturatedRadius(hi)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if above(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
