"""Hypothesis-exact random harmonic pairs for the Bohr theorems.

A case draws a catalog map phi of the right class, a Schwarz function
omega_1 and a disk self-map nu, then sets

    h = phi(omega_1),        g' = k nu h',   g(0) = 0,

so h is subordinate to phi and |g'| <= k |h'|.  For the b_1 = 0 variants
nu is replaced by z nu, which forces g'(0) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bohr_engine import BohrReport, bohr_sum
from .mapping_catalog import CatalogEntry, make_entry
from .power_series import Series, antiderivative_zero, derivative, multiply
from .quasiconformal import HarmonicPair
from .radius_solvers import solve
from .subordination import random_blaschke, random_schwarz, subordinate

__all__ = [
    "Theorem",
    "THEOREMS",
    "FuzzCase",
    "random_entry",
    "build_case",
    "fixture_case",
    "theorem_radius",
    "evaluate_case",
    "run_corpus",
    "conjecture_setup",
    "RADIUS_MARGIN",
]

RADIUS_MARGIN = 1e-6
_MAX_DEGREE = 3


@dataclass(frozen=True)
class Theorem:
    id: str
    phi_family: str  # "convex" or "univalent"
    b1zero: bool

    @property
    def growth(self) -> str:
        return "convex_bound" if self.phi_family == "convex" else "univalent_bound"


THEOREMS = {
    "ConvexQC": Theorem("ConvexQC", "convex", False),
    "ConvexQC_b1zero": Theorem("ConvexQC_b1zero", "convex", True),
    "UnivalentQC": Theorem("UnivalentQC", "univalent", False),
    "UnivalentQC_b1zero": Theorem("UnivalentQC_b1zero", "univalent", True),
}


def get_theorem(theorem_id: str) -> Theorem:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem_id!r}; expected one of {tuple(THEOREMS)}") from None


def _unit(rng) -> complex:
    return complex(np.exp(2j * np.pi * rng.random()))


def _convex_entry(rng) -> CatalogEntry:
    pick = rng.integers(5)
    if pick == 0:
        lam = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.8, 0.8))
        return make_entry("ExampleE", lam=lam)
    if pick == 1:
        return make_entry("ExampleF", lam=complex(rng.uniform(0.2, 2.0), rng.uniform(-1, 1)))
    if pick == 2:
        return make_entry("HalfPlaneCayley", lam=complex(rng.uniform(0.2, 2.0), rng.uniform(-1, 1)))
    if pick == 3:
        return make_entry("DiskMoebius", alpha=0.8 * np.sqrt(rng.random()) * _unit(rng))
    return make_entry("ExtremalConvex")


def _univalent_entry(rng) -> CatalogEntry:
    pick = rng.integers(9)
    if pick == 0:
        return make_entry("ExampleA", alpha=rng.uniform(0.5, 2.0) * _unit(rng),
                          lam=rng.uniform(0.05, 1.0))
    if pick == 1:
        return make_entry("ExampleB", lam=rng.uniform(0.0, 0.95))
    if pick == 2:
        a = rng.uniform(0.2, 2.0) * rng.choice([-1.0, 1.0])
        return make_entry("ExampleC", a=a, c=rng.uniform(0.2, 2.0))
    if pick == 3:
        lam = 0.5 if rng.random() < 0.25 else rng.uniform(0.0, 1.0)
        return make_entry("ExampleD", lam=lam)
    if pick == 4:
        return make_entry("ExampleG", alpha=rng.uniform(1.0, 2.0))
    if pick == 5:
        return make_entry("ExampleH", alpha=rng.uniform(0.0, 0.95))
    if pick == 6:
        return make_entry("KoebeFn")
    if pick == 7:
        return make_entry("ExtremalKoebe")
    return _convex_entry(rng)


def random_entry(rng, family: str) -> CatalogEntry:
    if family == "convex":
        return _convex_entry(rng)
    if family == "univalent":
        return _univalent_entry(rng)
    raise ValueError(f"unknown family {family!r}")


def coanalytic_from_dilatation(h: Series, nu: Series, k: float) -> Series:
    """g with g(0) = 0 and g' = k nu h'."""
    return antiderivative_zero(k * multiply(nu, derivative(h)))


@dataclass(frozen=True, eq=False)
class FuzzCase:
    index: int
    entry: CatalogEntry
    k: float
    pair: HarmonicPair
    omega_degree: int
    dilatation_degree: int


def build_case(theorem: Theorem | str, k: float, seed: int, index: int,
               order: int = 2048) -> FuzzCase:
    """Case ``index`` of the corpus with master seed ``seed``."""
    if isinstance(theorem, str):
        theorem = get_theorem(theorem)
    rng = np.random.default_rng([seed, index])
    entry = random_entry(rng, theorem.phi_family)
    d1 = int(rng.integers(_MAX_DEGREE + 1))
    d2 = int(rng.integers(_MAX_DEGREE + 1))
    s1, s2 = (int(s) for s in rng.integers(2**31, size=2))
    omega = random_schwarz(s1, d1, order)
    h = subordinate(entry, omega)
    nu = random_blaschke(s2, d2, order)
    if theorem.b1zero:
        nu = multiply(Series.identity(order), nu)
    g = coanalytic_from_dilatation(h, nu, k)
    return FuzzCase(index, entry, k, HarmonicPair(h, g, k_declared=k), d1, d2)


def fixture_case(theorem: Theorem | str, entry: CatalogEntry, k: float, lam: complex = 1.0,
                 order: int = 2048) -> FuzzCase:
    """h = phi itself and constant dilatation lam (times z for b_1 = 0).

    With entry ExtremalConvex this is exactly the extremal pair
    g = k lam z/(1-z) (resp. g' = k lam z h').
    """
    if isinstance(theorem, str):
        theorem = get_theorem(theorem)
    if abs(lam) > 1:
        raise ValueError("|lam| must be <= 1")
    h = entry.apply(Series.identity(order))
    nu = Series.constant(lam, order)
    if theorem.b1zero:
        nu = multiply(Series.identity(order), nu)
    g = coanalytic_from_dilatation(h, nu, k)
    return FuzzCase(0, entry, k, HarmonicPair(h, g, k_declared=k * abs(lam)), 0, 0)


def theorem_radius(theorem: Theorem | str, k: float) -> float:
    if isinstance(theorem, str):
        theorem = get_theorem(theorem)
    return solve(theorem.id, k)


def evaluate_case(theorem: Theorem | str, case: FuzzCase, r: float) -> BohrReport:
    if isinstance(theorem, str):
        theorem = get_theorem(theorem)
    return bohr_sum(case.pair, r, theorem.growth, dist0=case.entry.dist0,
                    deriv0=abs(case.entry.deriv0), phi_class=case.entry.geom_class,
                    k=case.pair.k_declared)


def run_corpus(theorem: Theorem | str, k: float, seed: int, count: int, order: int = 2048,
               r: float | None = None) -> list[tuple[FuzzCase, BohrReport]]:
    """Build and evaluate ``count`` cases, in index order."""
    if isinstance(theorem, str):
        theorem = get_theorem(theorem)
    if r is None:
        r = theorem_radius(theorem, k) - RADIUS_MARGIN
    out = []
    for i in range(count):
        case = build_case(theorem, k, seed, i, order)
        out.append((case, evaluate_case(theorem, case, r)))
    return out


def conjecture_setup(part: str) -> tuple[Theorem, str]:
    """Corpus theorem and upper-radius equation for a conjecture part."""
    if part == "convex":
        return THEOREMS["ConvexQC_b1zero"], "ConvexQC_b1zero_upper"
    if part == "univalent":
        return THEOREMS["UnivalentQC_b1zero"], "UnivalentQC_b1zero_upper"
    raise ValueError(f"unknown conjecture part {part!r}; expected 'convex' or 'univalent'")
