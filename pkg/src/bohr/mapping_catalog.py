"""Named test mappings phi with closed-form boundary distances.

Each :class:`CatalogEntry` knows

* its geometric class (convex, starlike, univalent or close_to_convex),
* ``dist0 = dist(phi(0), boundary of phi(D))`` in closed form,
* ``deriv0 = phi'(0)``,
* its Taylor coefficients (built termwise, :func:`catalog_coeffs`), and
* how to evaluate phi on a series u with u(0) = 0 (:meth:`CatalogEntry.apply`),
  which is the fast path for subordinations phi(omega) at large orders.

The two coefficient routes are independent and are cross-checked in tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .power_series import (
    Series,
    antiderivative_zero,
    derivative,
    log_series,
    multiply,
    power,
    reciprocal,
)
from .quasiconformal import HarmonicPair

__all__ = [
    "CatalogEntry",
    "ENTRY_IDS",
    "GEOM_CLASSES",
    "CONVEX_IDS",
    "make_entry",
    "catalog_dist",
    "catalog_coeffs",
    "extremal_pair",
    "default_entries",
    "in_distance_band",
    "is_univalent_class",
]

GEOM_CLASSES = ("convex", "starlike", "univalent", "close_to_convex")


def is_univalent_class(geom_class: str) -> bool:
    return geom_class in GEOM_CLASSES


@dataclass(frozen=True)
class _Family:
    params: dict  # name -> default
    validate: Callable[[dict], None]
    geom_class: Callable[[dict], str]
    dist0: Callable[[dict], float]
    deriv0: Callable[[dict], complex]
    coeffs: Callable[[dict, int], np.ndarray]
    apply: Callable[[dict, Series], Series]
    formula: str


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _one(order: int) -> Series:
    return Series.constant(1.0, order)


def _arr(order: int) -> np.ndarray:
    return np.zeros(order + 1, dtype=np.complex128)


def _rising_binomial(beta: float, order: int) -> np.ndarray:
    """Coefficients of (1-z)^(-beta): (beta)_n / n!."""
    c = np.ones(order + 1)
    for n in range(1, order + 1):
        c[n] = c[n - 1] * (beta + n - 1) / n
    return c


def _binomial(alpha: float, order: int) -> np.ndarray:
    """Coefficients of (1+z)^alpha: C(alpha, n)."""
    c = np.ones(order + 1)
    for n in range(1, order + 1):
        c[n] = c[n - 1] * (alpha - n + 1) / n
    return c


# (a) alpha z / ((1+z)(1+lam z))

def _a_validate(p):
    _require(0 < p["lam"] <= 1, "ExampleA needs lam in (0, 1]")
    _require(p["alpha"] != 0, "ExampleA needs alpha != 0")


def _a_coeffs(p, order):
    lam, alpha = p["lam"], p["alpha"]
    # 1/((1+z)(1+lam z)) has coefficients (-1)^m (1 + lam + ... + lam^m)
    partial = np.cumsum(lam ** np.arange(order))
    c = _arr(order)
    c[1:] = alpha * (-1.0) ** np.arange(order) * partial
    return c


def _a_apply(p, u):
    den = multiply(1 + u, 1 + p["lam"] * u)
    return multiply(p["alpha"] * u, reciprocal(den))


# (b) z / (1 - 2 lam z + z^2)

def _b_validate(p):
    _require(0 <= p["lam"] < 1, "ExampleB needs lam in [0, 1)")


def _b_coeffs(p, order):
    lam = p["lam"]
    u = np.zeros(order + 1)
    # a_n = U_{n-1}(lam); Chebyshev recurrence of the second kind
    if order >= 1:
        u[1] = 1.0
    if order >= 2:
        u[2] = 2 * lam
    for n in range(3, order + 1):
        u[n] = 2 * lam * u[n - 1] - u[n - 2]
    return u.astype(np.complex128)


def _b_apply(p, u):
    return multiply(u, reciprocal(1 - 2 * p["lam"] * u + multiply(u, u)))


# (c) a(1+z)/(1-z) + 2(sqrt(c^2+a^2) - a) z/(1-z^2)

def _c_shift(p):
    return math.hypot(p["c"], p["a"]) - p["a"]


def _c_validate(p):
    _require(p["a"] != 0 and np.isreal(p["a"]), "ExampleC needs real a != 0")
    _require(p["c"] > 0, "ExampleC needs c > 0")


def _c_coeffs(p, order):
    a, m = p["a"], _c_shift(p)
    c = _arr(order)
    c[0] = a
    n = np.arange(1, order + 1)
    c[1:] = 2 * a + np.where(n % 2 == 1, 2 * m, 0.0)
    return c


def _c_apply(p, u):
    a, m = p["a"], _c_shift(p)
    first = multiply(a * (1 + u), reciprocal(1 - u))
    second = multiply(2 * m * u, reciprocal(1 - multiply(u, u)))
    return first + second


# (d) (z - lam z^2) / (1-z)^2

def _d_validate(p):
    _require(0 <= p["lam"] <= 1, "ExampleD needs lam in [0, 1]")


def _d_coeffs(p, order):
    n = np.arange(order + 1)
    c = (n - p["lam"] * (n - 1)).astype(np.complex128)
    c[0] = 0
    return c


def _d_apply(p, u):
    one_minus = 1 - u
    return multiply(u - p["lam"] * multiply(u, u), reciprocal(multiply(one_minus, one_minus)))


# (e) lam + (2/pi) log((1 + xi z)/(1 - z)),  xi = exp(-i pi Im lam)

def _e_xi(p):
    return cmath.exp(-1j * math.pi * complex(p["lam"]).imag)


def _e_validate(p):
    _require(abs(p["lam"]) < 1, "ExampleE needs |lam| < 1")


def _e_coeffs(p, order):
    xi = _e_xi(p)
    n = np.arange(1, order + 1)
    c = _arr(order)
    c[0] = p["lam"]
    # log(1 + xi z) = sum (-1)^(n+1) xi^n z^n / n ;  -log(1 - z) = sum z^n / n
    c[1:] = (2 / math.pi) * ((-1.0) ** (n + 1) * xi**n + 1.0) / n
    return c


def _e_apply(p, u):
    xi = _e_xi(p)
    logs = log_series(1 + xi * u) - log_series(1 - u)
    return (2 / math.pi) * logs + p["lam"]


# (f) (lam + conj(lam) z)/(1 - z), also used as HalfPlaneCayley

def _f_validate(p):
    _require(complex(p["lam"]).real > 0, "needs Re lam > 0")


def _f_coeffs(p, order):
    lam = complex(p["lam"])
    c = np.full(order + 1, lam + lam.conjugate(), dtype=np.complex128)
    c[0] = lam
    return c


def _f_apply(p, u):
    lam = complex(p["lam"])
    return multiply(lam + lam.conjugate() * u, reciprocal(1 - u))


# (g) (1/(2 alpha)) [((1+z)/(1-z))^alpha - 1]

def _g_validate(p):
    _require(1 <= p["alpha"] <= 2, "ExampleG needs alpha in [1, 2]")


def _g_coeffs(p, order):
    al = p["alpha"]
    prod = np.convolve(_binomial(al, order), _rising_binomial(al, order))[: order + 1]
    c = prod.astype(np.complex128) / (2 * al)
    c[0] = 0
    return c


def _g_apply(p, u):
    al = p["alpha"]
    cayley = multiply(1 + u, reciprocal(1 - u))
    return (power(cayley, al) - 1) / (2 * al)


# (h) z / (1-z)^(2(1-alpha))

def _h_validate(p):
    _require(0 <= p["alpha"] < 1, "ExampleH needs alpha in [0, 1)")


def _h_coeffs(p, order):
    c = _arr(order)
    c[1:] = _rising_binomial(2 * (1 - p["alpha"]), order - 1)
    return c


def _h_apply(p, u):
    return multiply(u, power(1 - u, -2 * (1 - p["alpha"])))


# Koebe z/(1-z)^2

def _koebe_coeffs(p, order):
    return np.arange(order + 1).astype(np.complex128)


def _koebe_apply(p, u):
    one_minus = 1 - u
    return multiply(u, reciprocal(multiply(one_minus, one_minus)))


# (alpha - z)/(1 - conj(alpha) z)

def _moebius_validate(p):
    _require(abs(p["alpha"]) < 1, "DiskMoebius needs |alpha| < 1")


def _moebius_coeffs(p, order):
    al = complex(p["alpha"])
    c = _arr(order)
    c[0] = al
    c[1:] = (abs(al) ** 2 - 1) * al.conjugate() ** np.arange(order)
    return c


def _moebius_apply(p, u):
    al = complex(p["alpha"])
    return multiply(al - u, reciprocal(1 - al.conjugate() * u))


# 1/(1-z)

def _geom_coeffs(p, order):
    return np.ones(order + 1, dtype=np.complex128)


def _geom_apply(p, u):
    return reciprocal(1 - u)


def _nothing(p):
    return None


_KOEBE = dict(
    params={},
    validate=_nothing,
    geom_class=lambda p: "starlike",
    dist0=lambda p: 0.25,
    deriv0=lambda p: 1.0,
    coeffs=_koebe_coeffs,
    apply=_koebe_apply,
    formula="z/(1-z)^2",
)

_HALF_PLANE = dict(
    params={"lam": 1.0},
    validate=_f_validate,
    geom_class=lambda p: "convex",
    dist0=lambda p: complex(p["lam"]).real,
    deriv0=lambda p: 2 * complex(p["lam"]).real,
    coeffs=_f_coeffs,
    apply=_f_apply,
    formula="(lam + conj(lam) z)/(1-z)",
)

_FAMILIES: dict[str, _Family] = {
    "ExampleA": _Family(
        params={"alpha": 1.0, "lam": 1.0},
        validate=_a_validate,
        geom_class=lambda p: "univalent",
        dist0=lambda p: abs(p["alpha"]) / (2 * (1 + p["lam"])),
        deriv0=lambda p: p["alpha"],
        coeffs=_a_coeffs,
        apply=_a_apply,
        formula="alpha z/((1+z)(1+lam z))",
    ),
    "ExampleB": _Family(
        params={"lam": 0.5},
        validate=_b_validate,
        geom_class=lambda p: "univalent",
        dist0=lambda p: 1 / (2 * (1 + p["lam"])),
        deriv0=lambda p: 1.0,
        coeffs=_b_coeffs,
        apply=_b_apply,
        formula="z/(1 - 2 lam z + z^2)",
    ),
    "ExampleC": _Family(
        params={"a": 1.0, "c": 1.0},
        validate=_c_validate,
        geom_class=lambda p: "starlike",
        dist0=lambda p: math.hypot(p["c"], p["a"]),
        deriv0=lambda p: 2 * math.hypot(p["c"], p["a"]),
        coeffs=_c_coeffs,
        apply=_c_apply,
        formula="a(1+z)/(1-z) + 2(sqrt(c^2+a^2) - a) z/(1-z^2)",
    ),
    "ExampleD": _Family(
        params={"lam": 1.0},
        validate=_d_validate,
        geom_class=lambda p: "close_to_convex" if p["lam"] == 0.5 else "univalent",
        dist0=lambda p: (1 + p["lam"]) / 4,
        deriv0=lambda p: 1.0,
        coeffs=_d_coeffs,
        apply=_d_apply,
        formula="(z - lam z^2)/(1-z)^2",
    ),
    "ExampleE": _Family(
        params={"lam": 0.0},
        validate=_e_validate,
        geom_class=lambda p: "convex",
        dist0=lambda p: 1 - abs(complex(p["lam"]).imag),
        deriv0=lambda p: (2 / math.pi) * (1 + _e_xi(p)),
        coeffs=_e_coeffs,
        apply=_e_apply,
        formula="lam + (2/pi) log((1 + xi z)/(1-z)), xi = exp(-i pi Im lam)",
    ),
    "ExampleF": _Family(**_HALF_PLANE),
    "ExampleG": _Family(
        params={"alpha": 1.0},
        validate=_g_validate,
        geom_class=lambda p: "univalent",
        dist0=lambda p: 1 / (2 * p["alpha"]),
        deriv0=lambda p: 1.0,
        coeffs=_g_coeffs,
        apply=_g_apply,
        formula="(((1+z)/(1-z))^alpha - 1)/(2 alpha)",
    ),
    "ExampleH": _Family(
        params={"alpha": 0.0},
        validate=_h_validate,
        geom_class=lambda p: "starlike",
        dist0=lambda p: 2.0 ** (-2 * (1 - p["alpha"])),
        deriv0=lambda p: 1.0,
        coeffs=_h_coeffs,
        apply=_h_apply,
        formula="z/(1-z)^(2(1-alpha))",
    ),
    "HalfPlaneCayley": _Family(**_HALF_PLANE),
    "KoebeFn": _Family(**_KOEBE),
    "DiskMoebius": _Family(
        params={"alpha": 0.0},
        validate=_moebius_validate,
        geom_class=lambda p: "convex",
        dist0=lambda p: 1 - abs(p["alpha"]),
        deriv0=lambda p: abs(p["alpha"]) ** 2 - 1,
        coeffs=_moebius_coeffs,
        apply=_moebius_apply,
        formula="(alpha - z)/(1 - conj(alpha) z)",
    ),
    "ExtremalConvex": _Family(
        params={},
        validate=_nothing,
        geom_class=lambda p: "convex",
        dist0=lambda p: 0.5,
        deriv0=lambda p: 1.0,
        coeffs=_geom_coeffs,
        apply=_geom_apply,
        formula="1/(1-z)",
    ),
    "ExtremalKoebe": _Family(**_KOEBE),
}

ENTRY_IDS = tuple(_FAMILIES)
CONVEX_IDS = tuple(i for i in ENTRY_IDS if _FAMILIES[i].geom_class(_FAMILIES[i].params) == "convex")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    params: dict = field(default_factory=dict)
    geom_class: str = field(init=False)
    dist0: float = field(init=False)
    deriv0: complex = field(init=False)

    def __post_init__(self):
        fam = _family(self.id)
        unknown = set(self.params) - set(fam.params)
        if unknown:
            raise ValueError(f"{self.id} has no parameter(s) {sorted(unknown)}")
        params = {**fam.params, **self.params}
        fam.validate(params)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "geom_class", fam.geom_class(params))
        object.__setattr__(self, "dist0", float(fam.dist0(params)))
        object.__setattr__(self, "deriv0", complex(fam.deriv0(params)))

    @property
    def formula(self) -> str:
        return _FAMILIES[self.id].formula

    def apply(self, u: Series) -> Series:
        """phi(u(z)) truncated at u's order; u must vanish at 0."""
        if u.coeffs[0] != 0:
            raise ValueError("apply needs u(0) == 0")
        return _FAMILIES[self.id].apply(self.params, u)

    def __hash__(self):
        return hash((self.id, tuple(sorted((k, complex(v)) for k, v in self.params.items()))))


def _family(entry_id: str) -> _Family:
    try:
        return _FAMILIES[entry_id]
    except KeyError:
        raise ValueError(f"unknown catalog id {entry_id!r}; expected one of {ENTRY_IDS}") from None


def make_entry(entry_id: str, **params) -> CatalogEntry:
    """Build an entry; ExampleC also accepts (a, n) with c = sqrt(n(n+2a))."""
    if entry_id == "ExampleC" and "n" in params:
        n = params.pop("n")
        a = params.get("a", 1.0)
        _require(n > 0, "ExampleC needs n > 0")
        _require(a > 0 or -n / 2 < a < 0, "ExampleC (a, n) form needs a > 0 or -n/2 < a < 0")
        params["c"] = math.sqrt(n * (n + 2 * a))
    return CatalogEntry(entry_id, params)


def catalog_dist(entry: CatalogEntry) -> float:
    return entry.dist0


def catalog_coeffs(entry: CatalogEntry, order: int) -> Series:
    """Taylor coefficients of phi about 0, built termwise."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return Series(_FAMILIES[entry.id].coeffs(entry.params, order))


def in_distance_band(entry: CatalogEntry, slack: float = 1e-12) -> bool:
    """dist0 against the |phi'(0)| band: [1/2, 1] for convex, [1/4, 1] otherwise."""
    d = abs(entry.deriv0)
    low = 0.5 if entry.geom_class == "convex" else 0.25
    return low * d - slack <= entry.dist0 <= d + slack


def default_entries() -> list[CatalogEntry]:
    """One entry per id at its default parameters."""
    return [CatalogEntry(i) for i in ENTRY_IDS]


def extremal_pair(kind: str, k: float, lam: complex = 1.0, order: int = 256) -> HarmonicPair:
    """Extremal harmonic pairs used to show the radii cannot be enlarged.

    ExtremalConvex:        h = 1/(1-z),     g = k lam z/(1-z)
    ExtremalConvexB1Zero:  h = 1/(1-z),     g' = k lam z h'   (b_n = k lam (n-1)/n)
    ExtremalKoebe:         h = z/(1-z)^2,   g' = k lam z h'   (b_n = k lam (n + 1/n - 2))
    """
    if not 0.0 <= k <= 1.0:
        raise ValueError(f"k must lie in [0, 1], got {k}")
    if abs(lam) > 1:
        raise ValueError(f"|lam| must be <= 1, got {lam}")
    if order < 2:
        raise ValueError("order must be >= 2")
    z = Series.identity(order)
    if kind == "ExtremalConvex":
        h = Series.geometric(order)
        g = Series(k * lam * np.concatenate([[0.0], np.ones(order)]))
    elif kind == "ExtremalConvexB1Zero":
        h = Series.geometric(order)
        g = antiderivative_zero(k * lam * multiply(z, derivative(h)))
    elif kind == "ExtremalKoebe":
        h = Series(_koebe_coeffs({}, order))
        g = antiderivative_zero(k * lam * multiply(z, derivative(h)))
    else:
        raise ValueError(f"unknown extremal kind {kind!r}")
    return HarmonicPair(h, g, k_declared=k * abs(lam))
