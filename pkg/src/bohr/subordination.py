"""Subordination g = phi(omega) and the coefficient bounds it implies."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

from .mapping_catalog import CatalogEntry
from .power_series import PROPERTY_ORDER, Series, compose

__all__ = [
    "SchwarzFn",
    "subordinate",
    "random_blaschke",
    "random_schwarz",
    "CoefficientBoundReport",
    "check_coefficient_bounds",
    "CERTIFICATE_RADIUS",
    "CERTIFICATE_SAMPLES",
]

CERTIFICATE_RADIUS = 0.99
CERTIFICATE_SAMPLES = 4096
_CERTIFICATE_LIMIT = 0.995
_ZERO_RADIUS = 0.8


def modulus_on_circle(series: Series, r: float = CERTIFICATE_RADIUS,
                      samples: int = CERTIFICATE_SAMPLES) -> float:
    return float(np.abs(series.circle_values(r, samples)).max())


@dataclass(frozen=True, eq=False)
class SchwarzFn:
    """omega with omega(0) = 0 and |omega(z)| <= |z|, plus a sampled certificate."""

    series: Series
    modulus_certificate: float = float("nan")

    def __post_init__(self):
        if self.series.coeffs[0] != 0:
            raise ValueError("a Schwarz function must vanish at 0")
        cert = self.modulus_certificate
        if cert != cert:  # not supplied
            cert = modulus_on_circle(self.series)
            object.__setattr__(self, "modulus_certificate", cert)
        if cert > _CERTIFICATE_LIMIT:
            raise ValueError(f"sampled max |omega| on |z|={CERTIFICATE_RADIUS} is {cert:.6g}")

    @property
    def order(self) -> int:
        return self.series.order


def subordinate(phi: Series | CatalogEntry, omega: SchwarzFn) -> Series:
    """phi(omega(z)) truncated at omega's order.

    ``phi`` is either a coefficient series (generic Horner composition) or a
    catalog entry, which is evaluated on the series directly and is much
    cheaper at large orders.
    """
    if isinstance(phi, CatalogEntry):
        return phi.apply(omega.series)
    return compose(phi, omega.series.padded(max(phi.order, omega.order)))


def random_blaschke(seed: int, degree: int, order: int = PROPERTY_ORDER) -> Series:
    """Rotated finite Blaschke product with zeros uniform in |a| <= 0.8.

    Maps the disk into itself; degree 0 gives a unimodular constant.
    Deterministic in ``seed``.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    rng = np.random.default_rng(seed)
    rotation = np.exp(2j * np.pi * rng.random())
    radii = _ZERO_RADIUS * np.sqrt(rng.random(degree))
    angles = 2 * np.pi * rng.random(degree)
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = rotation
    for a in radii * np.exp(1j * angles):
        # multiply by (z - a)/(1 - conj(a) z) as a first-order recursive filter
        c = lfilter([-a, 1.0], [1.0, -np.conj(a)], c)
    return Series(c)


def random_schwarz(seed: int, degree: int, order: int = PROPERTY_ORDER) -> SchwarzFn:
    """omega(z) = z B(z) with B from :func:`random_blaschke`; degree 0 is omega = z."""
    if degree == 0:
        return SchwarzFn(Series.identity(order))
    b = random_blaschke(seed, degree, order)
    c = np.zeros(order + 1, dtype=np.complex128)
    c[1:] = b.coeffs[:-1]
    return SchwarzFn(Series(c))


@dataclass(frozen=True)
class CoefficientBoundReport:
    degrees: np.ndarray
    magnitudes: np.ndarray
    bounds: np.ndarray
    margins: np.ndarray  # bound - |b_n|
    rule: str
    atol: float
    dist_bounds: np.ndarray | None = None  # 2*dist0 resp. 4n*dist0

    @property
    def passed(self) -> bool:
        return bool(np.all(self.margins >= -self.atol))

    @property
    def worst_degree(self) -> int:
        return int(self.degrees[np.argmin(self.margins)])

    @property
    def worst_margin(self) -> float:
        return float(self.margins.min())

    @property
    def violations(self) -> int:
        return int(np.count_nonzero(self.margins < -self.atol))


def check_coefficient_bounds(g: Series, phi_class: str, phi_deriv0: complex,
                             dist0: float | None = None, atol: float = 1e-10,
                             max_degree: int | None = None) -> CoefficientBoundReport:
    """Compare |b_n| (n >= 1) of g = phi(omega) with the class bound.

    convex phi: |b_n| <= |phi'(0)|;  other univalent classes: |b_n| <= n |phi'(0)|.
    With ``dist0`` the distance forms 2*dist0 and 4n*dist0 are reported too;
    they are never tighter, since |phi'(0)| <= 2*dist0 (convex) and
    |phi'(0)| <= 4*dist0 (univalent).
    """
    n_max = g.order if max_degree is None else min(max_degree, g.order)
    n = np.arange(1, n_max + 1)
    mags = np.abs(g.coeffs[1 : n_max + 1])
    d = abs(phi_deriv0)
    if phi_class == "convex":
        bounds = np.full(n.shape, d, dtype=float)
        rule = "|b_n| <= |phi'(0)|"
        dist_bounds = None if dist0 is None else np.full(n.shape, 2.0 * dist0)
    elif phi_class in ("starlike", "univalent", "close_to_convex"):
        bounds = n * d
        rule = "|b_n| <= n |phi'(0)|"
        dist_bounds = None if dist0 is None else 4.0 * n * dist0
    else:
        raise ValueError(f"unknown geometric class {phi_class!r}")
    return CoefficientBoundReport(n, mags, bounds, bounds - mags, rule, atol, dist_bounds)
