"""Radius equations for the harmonic Bohr inequalities and their roots.

Each equation is written as ``lhs(r) = target`` with ``lhs`` continuous and
strictly increasing on (0, 1), so every radius is the unique crossing point.
Equation ids:

=========================  ===============================================
ConvexQC                   convex phi, any b_1;   closed form 1/(3+2k)
ConvexQC_a0sq              |a_0|^2 variant;       closed form 1/(2+k)
ConvexQC_b1zero            convex phi, b_1 = 0;   lower radius r_c(k)
ConvexQC_b1zero_upper      extremal upper bound R(k) for the above
UnivalentQC                univalent phi, any b_1; r_u(k)
UnivalentQC_b1zero         univalent phi, b_1 = 0; r_s(k)
UnivalentQC_b1zero_upper   extremal upper bound R(k) for the above
=========================  ===============================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .quasiconformal import K_from_k, k_from_K

__all__ = [
    "EQUATION_IDS",
    "TRANSCENDENTAL_IDS",
    "CLOSED_FORM_IDS",
    "RadiusEquation",
    "BracketError",
    "equation",
    "lhs_eval",
    "lhs_derivative",
    "univalent_polynomial_form",
    "closed_form",
    "a0sq_radius_K",
    "solve",
    "solve_K",
    "series_identity_oracle",
    "series_identity_closed_form",
    "BASEL_TAIL",
]

# sum_{n>=2} 1/n^2, the Cauchy-Schwarz weight for the b_n with n >= 2
BASEL_TAIL = math.pi**2 / 6 - 1.0
_SQRT_BASEL_TAIL = math.sqrt(BASEL_TAIL)

EQUATION_IDS = (
    "ConvexQC",
    "ConvexQC_a0sq",
    "ConvexQC_b1zero",
    "ConvexQC_b1zero_upper",
    "UnivalentQC",
    "UnivalentQC_b1zero",
    "UnivalentQC_b1zero_upper",
)
CLOSED_FORM_IDS = ("ConvexQC", "ConvexQC_a0sq")
TRANSCENDENTAL_IDS = tuple(e for e in EQUATION_IDS if e not in CLOSED_FORM_IDS)

TARGETS = {
    "ConvexQC": 0.5,
    "ConvexQC_a0sq": 1.0,
    "ConvexQC_b1zero": 0.5,
    "ConvexQC_b1zero_upper": 1.0,
    "UnivalentQC": 0.25,
    "UnivalentQC_b1zero": 0.25,
    "UnivalentQC_b1zero_upper": 0.25,
}


class BracketError(RuntimeError):
    """lhs - target does not change sign, or lhs is not increasing on the grid."""


def _lhs_and_derivative(eq_id: str, k: float, r: float) -> tuple[float, float]:
    if eq_id in ("ConvexQC", "ConvexQC_a0sq"):
        # (1+k) r/(1-r): from |a_n| <= 2 dist (or 1-|a_0|^2) and the
        # Cauchy-Schwarz bound on sum |b_n| r^n
        return (1 + k) * r / (1 - r), (1 + k) / (1 - r) ** 2

    if eq_id == "ConvexQC_b1zero":
        s = r * r
        a = s * math.sqrt(1 + s) * (1 - s) ** -1.5
        da = a * (2 / r + r / (1 + s) + 3 * r / (1 - s))
        val = r / (1 - r) + k * _SQRT_BASEL_TAIL * a
        return val, 1 / (1 - r) ** 2 + k * _SQRT_BASEL_TAIL * da

    if eq_id == "ConvexQC_b1zero_upper":
        val = 2 * (1 + k) * r / (1 - r) + 2 * k * math.log1p(-r)
        return val, 2 * (1 + k) / (1 - r) ** 2 - 2 * k / (1 - r)

    if eq_id == "UnivalentQC":
        root = math.sqrt(1 + r)
        u = r * (1 + k * root)
        du = 1 + k * (root + r / (2 * root))
        return u / (1 - r) ** 2, du / (1 - r) ** 2 + 2 * u / (1 - r) ** 3

    if eq_id == "UnivalentQC_b1zero":
        x = r * r
        p = x**3 + 11 * x**2 + 11 * x + 1
        dp = 3 * x**2 + 22 * x + 11
        b = x * (1 - x) ** -2.5 * math.sqrt(p)
        db = b * (2 / r + 5 * r / (1 - x) + r * dp / p)
        val = r / (1 - r) ** 2 + k * _SQRT_BASEL_TAIL * b
        return val, (1 + r) / (1 - r) ** 3 + k * _SQRT_BASEL_TAIL * db

    if eq_id == "UnivalentQC_b1zero_upper":
        u = r * (1 - k + 2 * k * r)
        du = 1 - k + 4 * k * r
        val = u / (1 - r) ** 2 - k * math.log1p(-r)
        return val, du / (1 - r) ** 2 + 2 * u / (1 - r) ** 3 + k / (1 - r)

    raise KeyError(f"unknown equation id {eq_id!r}")


def _check_args(eq_id: str, k: float, r: float | None = None) -> None:
    if eq_id not in TARGETS:
        raise KeyError(f"unknown equation id {eq_id!r}; expected one of {EQUATION_IDS}")
    if not 0.0 <= k <= 1.0:
        raise ValueError(f"k must lie in [0, 1], got {k}")
    if r is not None and not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")


def lhs_eval(eq_id: str, k: float, r: float) -> float:
    """Left-hand side of the radius equation ``eq_id`` at (k, r)."""
    _check_args(eq_id, k, r)
    return _lhs_and_derivative(eq_id, k, r)[0]


def lhs_derivative(eq_id: str, k: float, r: float) -> float:
    _check_args(eq_id, k, r)
    return _lhs_and_derivative(eq_id, k, r)[1]


def univalent_polynomial_form(k: float, r: float) -> float:
    """(1-r)^2 - 4r(1 + k sqrt(1+r)); vanishes exactly at the UnivalentQC radius."""
    return (1 - r) ** 2 - 4 * r * (1 + k * math.sqrt(1 + r))


@dataclass(frozen=True)
class RadiusEquation:
    id: str
    k: float
    target: float

    def lhs(self, r: float) -> float:
        return lhs_eval(self.id, self.k, r)

    def residual(self, r: float) -> float:
        return self.lhs(r) - self.target

    @property
    def K(self) -> float:
        return K_from_k(self.k)


def equation(eq_id: str, k: float) -> RadiusEquation:
    _check_args(eq_id, k)
    return RadiusEquation(eq_id, float(k), TARGETS[eq_id])


def closed_form(eq_id: str, k: float) -> float | None:
    """Exact radius for the closed-form ids, None otherwise."""
    _check_args(eq_id, k)
    if eq_id == "ConvexQC":
        return 1.0 / (3.0 + 2.0 * k)
    if eq_id == "ConvexQC_a0sq":
        return 1.0 / (2.0 + k)
    return None


def a0sq_radius_K(K: float) -> float:
    """(K+1)/(3K+1), with the K -> infinity limit 1/3."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if math.isinf(K):
        return 1.0 / 3.0
    return (K + 1) / (3 * K + 1)


_GRID = [i / 64 for i in range(1, 64)]


def _bracket(eq: RadiusEquation) -> tuple[float, float]:
    lo, hi = 1e-12, 1.0 - 1e-12
    values = [eq.lhs(r) for r in [lo, *_GRID, hi]]
    if any(b <= a for a, b in zip(values, values[1:])):
        raise BracketError(f"{eq.id}: lhs not increasing on (0,1) at k={eq.k}")
    if not values[0] < eq.target < values[-1]:
        raise BracketError(f"{eq.id}: target {eq.target} not bracketed at k={eq.k}")
    return lo, hi


def _root(eq: RadiusEquation, tol: float, newton_width: float = 1e-6) -> float:
    lo, hi = _bracket(eq)
    # plain bisection down to newton_width
    while hi - lo > newton_width:
        mid = 0.5 * (lo + hi)
        if eq.residual(mid) > 0:
            hi = mid
        else:
            lo = mid
    r = 0.5 * (lo + hi)
    for _ in range(60):
        val, d = _lhs_and_derivative(eq.id, eq.k, r)
        res = val - eq.target
        if res > 0:
            hi = r
        elif res < 0:
            lo = r
        else:
            return r
        step = res / d if d > 0 else math.inf
        nxt = r - step
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if nxt == r or hi - lo <= 4 * math.ulp(r):
            break
        r = nxt
        if abs(step) < 1e-17:
            break
    # settle on the better-resolved endpoint
    best = min((lo, hi, r), key=lambda x: abs(eq.residual(x)))
    if abs(eq.residual(best)) > tol:
        # fall back to bisection on the remaining bracket
        while hi - lo > 2 * math.ulp(hi):
            mid = 0.5 * (lo + hi)
            if eq.residual(mid) > 0:
                hi = mid
            else:
                lo = mid
        best = min((lo, hi), key=lambda x: abs(eq.residual(x)))
    return best


def solve(eq: RadiusEquation | str, k: float | None = None, tol: float = 1e-13,
          method: str = "auto") -> float:
    """Radius for ``eq``.

    ``method='auto'`` returns the exact expression for closed-form ids and a
    bracketed bisection/Newton root otherwise; ``method='numeric'`` always
    root-finds, which is how the closed forms are cross-checked.
    """
    if isinstance(eq, str):
        eq = equation(eq, 0.0 if k is None else k)
    if method not in ("auto", "numeric"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        exact = closed_form(eq.id, eq.k)
        if exact is not None:
            return exact
    return _root(eq, tol)


def solve_K(eq_id: str, K: float, tol: float = 1e-13) -> float:
    if eq_id == "ConvexQC_a0sq":
        return a0sq_radius_K(K)
    return solve(eq_id, k_from_K(K), tol=tol)


# brute-force checks of the closed forms used inside the lhs formulas

def series_identity_closed_form(power: int, x):
    if power == 1:
        return x / (1 - x) ** 2
    if power == 2:
        return (1 + x) / (1 - x) ** 3
    if power == 4:
        return (x**3 + 11 * x**2 + 11 * x + 1) / (1 - x) ** 5
    raise ValueError(f"power must be 1, 2 or 4, got {power}")


def _default_terms(power: int, x: float) -> int:
    # smallest N with the N-th term below 1e-15, plus a safety margin
    n = 1
    while n**power * float(x) ** (n - 1) >= 1e-15 or n < 8:
        n += 1
    return n + 8


def series_identity_oracle(power: int, x, terms: int | None = None):
    """Direct partial sums sum n x^n, sum n^2 x^(n-1), sum n^4 x^(n-1).

    Works with floats (summed with math.fsum) and with Fraction inputs, in
    which case the partial sum is exact.
    """
    if power not in (1, 2, 4):
        raise ValueError(f"power must be 1, 2 or 4, got {power}")
    if not 0 < x < 1:
        raise ValueError(f"x must lie in (0, 1), got {x}")
    if terms is None:
        terms = _default_terms(power, float(x))
    if power == 1:
        gen = (n * x**n for n in range(1, terms + 1))
    else:
        gen = (n**power * x ** (n - 1) for n in range(1, terms + 1))
    if isinstance(x, Fraction):
        return sum(gen, Fraction(0))
    return math.fsum(gen)
