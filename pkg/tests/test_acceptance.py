"""Acceptance suite: one check per acceptance criterion, each at its stated tolerance.

Every check prints a single PASS/FAIL line (collected into the pytest
terminal summary by conftest.py; also printed when run as a script).
"""

from __future__ import annotations

import math
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from bohr import corpus
from bohr.bohr_engine import bohr_sum, empirical_bohr_radius
from bohr.mapping_catalog import extremal_pair
from bohr.power_series import Series
from bohr.quasiconformal import HarmonicPair, check_quadratic_majorant
from bohr.radius_solvers import (
    EQUATION_IDS,
    TRANSCENDENTAL_IDS,
    a0sq_radius_K,
    closed_form,
    equation,
    lhs_eval,
    series_identity_closed_form,
    series_identity_oracle,
    solve,
)
from bohr.subordination import check_coefficient_bounds, random_blaschke, random_schwarz, subordinate

RESULTS: list[str] = []


def report(number: int, name: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number} {name}: {detail}"
    RESULTS.append(line)
    print(line)


# 1. radius constants

CONSTANTS = [
    ("ConvexQC", 0.0, 1 / 3),
    ("ConvexQC", 1.0, 0.2),
    ("ConvexQC_b1zero", 1.0, 0.294265),
    ("ConvexQC_b1zero_upper", 1.0, 0.299823),
    ("UnivalentQC", 0.0, 0.171573),
    ("UnivalentQC", 1.0, 0.099064),
    ("UnivalentQC_b1zero", 1.0, 0.155856),
    ("UnivalentQC_b1zero_upper", 1.0, 0.161353),
]


def check_radius_constants():
    start = time.perf_counter()
    misses = []
    for eq_id, k, expected in CONSTANTS:
        got = solve(eq_id, k)
        if abs(got - expected) > 1e-5:
            misses.append(f"{eq_id}(k={k:g})={got:.6f} vs {expected}")
    for K, expected in ((1.0, 0.5), (math.inf, 1 / 3)):
        got = a0sq_radius_K(K)
        if abs(got - expected) > 1e-5:
            misses.append(f"ConvexQC_a0sq(K={K})={got:.6f} vs {expected}")
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        misses.append(f"runtime {elapsed:.2f}s >= 1s")
    total = len(CONSTANTS) + 2
    detail = f"{total - len(misses)}/{total} constants within 1e-5 in {elapsed:.3f}s"
    if misses:
        detail += "; mismatches: " + ", ".join(misses)
    return not misses, detail


# 2. sharpness bracketing

def check_sharpness_bracketing():
    start = time.perf_counter()
    problems = []
    worst = 0.0
    for k in (0.25, 0.5, 0.75, 1.0):
        margins = []
        for lam in (0.9, 0.99, 0.999):
            r = empirical_bohr_radius(extremal_pair("ExtremalConvex", k, lam, order=2048), 0.5)
            margins.append(r - solve("ConvexQC", k))
            if lam == 0.999:
                err = abs(r - 1 / (3 + 2 * k * 0.999))
                worst = max(worst, err)
                if err > 1e-6:
                    problems.append(f"k={k}: radius off by {err:.2e}")
        if not (all(m > 0 for m in margins) and margins[0] > margins[1] > margins[2]):
            problems.append(f"k={k}: margins {margins} not positive and shrinking")
    elapsed = time.perf_counter() - start
    if elapsed >= 5.0:
        problems.append(f"runtime {elapsed:.2f}s >= 5s")
    detail = f"max |r* - 1/(3+2k*0.999)| = {worst:.1e}, {elapsed:.2f}s"
    return not problems, detail + ("; " + "; ".join(problems) if problems else "")


# 3. extremal equality points

def check_extremal_equality():
    cases = [("ExtremalConvexB1Zero", 0.299823, 0.5, "convex_bound"),
             ("ExtremalKoebe", 0.161353, 0.25, "univalent_bound")]
    parts, ok = [], True
    for kind, r, target, growth in cases:
        rep = bohr_sum(extremal_pair(kind, 1.0, order=4096), r, growth, dist0=target, deriv0=1.0)
        err = abs(rep.partial_sum - target)
        good = err <= 1e-4 and rep.tail_bound < 1e-4
        ok &= good
        parts.append(f"{kind} sum={rep.partial_sum:.7f} (|d|={err:.1e}, tail={rep.tail_bound:.1e})")
    return ok, "; ".join(parts)


# 4. coefficient bounds under subordination

def check_coefficient_bounds_suite(count=200, order=256):
    rng_seed = 2024
    violations = {"univalent": 0, "convex": 0}
    worst = {"univalent": math.inf, "convex": math.inf}
    for family in ("univalent", "convex"):
        for i in range(count):
            rng = np.random.default_rng([rng_seed, i, family == "convex"])
            entry = corpus.random_entry(rng, family)
            w = random_schwarz(int(rng.integers(2**31)), int(rng.integers(4)), order)
            g = subordinate(entry, w)
            cls = "convex" if family == "convex" else "univalent"
            rep = check_coefficient_bounds(g, cls, entry.deriv0, atol=1e-10)
            violations[family] += rep.violations
            worst[family] = min(worst[family], rep.worst_margin)
    ok = violations["univalent"] == 0 and violations["convex"] == 0
    detail = ", ".join(f"{f}: {count} maps, {violations[f]} violations, min margin {worst[f]:.2e}"
                       for f in violations)
    return ok, detail


# 5. quadratic majorant

def check_quadratic_majorant_suite(count=500, order=1024):
    ks = (0.25, 0.5, 0.75, 1.0)
    rs = (0.1, 0.3, 0.5, 0.7, 0.9)
    worst = math.inf
    for i in range(count):
        rng = np.random.default_rng([55, i])
        entry = corpus.random_entry(rng, "univalent")
        h = subordinate(entry, random_schwarz(int(rng.integers(2**31)), int(rng.integers(4)), order))
        nu = random_blaschke(int(rng.integers(2**31)), int(rng.integers(4)), order)
        k = ks[i % len(ks)]
        r = rs[(i // len(ks)) % len(rs)]
        g = corpus.coanalytic_from_dilatation(h, nu, k)
        rep = check_quadratic_majorant(HarmonicPair(h, g), k, r, deriv0=abs(entry.deriv0))
        worst = min(worst, rep.margin)
    # equality family g = k lam (h - h(0)), |lam| = 1
    eq_err = 0.0
    for i in range(40):
        rng = np.random.default_rng([56, i])
        entry = corpus.random_entry(rng, "univalent")
        h = subordinate(entry, random_schwarz(int(rng.integers(2**31)), int(rng.integers(4)), order))
        k, r = ks[i % 4], rs[i % 5]
        lam = np.exp(2j * np.pi * rng.random())
        g = (k * lam) * (h - complex(h.coeffs[0]))
        rep = check_quadratic_majorant(HarmonicPair(h, g), k, r)
        eq_err = max(eq_err, abs(rep.margin))
    ok = worst >= -1e-10 and eq_err <= 1e-10
    return ok, f"{count} cases, min margin {worst:.2e}; equality family max |margin| {eq_err:.1e}"


# 6. theorems hold on hypothesis-exact corpora

def check_theorems_hold(per_theorem=200, order=2048):
    ks = (0.25, 0.5, 0.75, 1.0)
    parts, ok = [], True
    start = time.perf_counter()
    for theorem in corpus.THEOREMS:
        verdicts = {"holds": 0, "fails": 0, "inconclusive": 0}
        for j, k in enumerate(ks):
            chunk = per_theorem // len(ks)
            for _, rep in corpus.run_corpus(theorem, k, seed=100 + j, count=chunk, order=order):
                verdicts[rep.verdict] += 1
        ok &= verdicts["holds"] == per_theorem
        parts.append(f"{theorem} {verdicts['holds']}/{per_theorem}"
                     + (f" (fails={verdicts['fails']}, inconclusive={verdicts['inconclusive']})"
                        if verdicts["holds"] != per_theorem else ""))
    return ok, "; ".join(parts) + f" holds at N={order} in {time.perf_counter() - start:.1f}s"


# 7. solver self-consistency

def check_solver_consistency():
    problems = []
    grid = [i / 20 for i in range(21)]
    worst_res = 0.0
    for eq_id in TRANSCENDENTAL_IDS:
        for k in grid:
            r = solve(eq_id, k)
            worst_res = max(worst_res, abs(lhs_eval(eq_id, k, r) - equation(eq_id, k).target))
    if worst_res > 1e-12:
        problems.append(f"residual {worst_res:.1e}")
    for eq_id in EQUATION_IDS:
        radii = [solve(eq_id, k) for k in grid]
        if not all(b < a for a, b in zip(radii, radii[1:])):
            problems.append(f"{eq_id} not decreasing in k")
    worst_cf = max(abs(solve(e, k, method="numeric") - closed_form(e, k))
                   for e in ("ConvexQC", "ConvexQC_a0sq") for k in grid)
    if worst_cf > 1e-14:
        problems.append(f"closed form vs bisection {worst_cf:.1e}")
    worst_series = 0.0
    for power in (1, 2, 4):
        for x in (Fraction(1, 20), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(9, 10)):
            diff = series_identity_closed_form(power, x) - series_identity_oracle(power, x)
            worst_series = max(worst_series, abs(float(diff)))
    if worst_series > 1e-12:
        problems.append(f"series identity {worst_series:.1e}")
    detail = (f"max residual {worst_res:.1e}, closed-form gap {worst_cf:.1e}, "
              f"series identity gap {worst_series:.1e}, radii monotone")
    return not problems, detail + ("; " + "; ".join(problems) if problems else "")


# 8. determinism

def _bohr(args, out):
    cmd = [sys.executable, "-m", "bohr", *args, "--out", str(out)]
    subprocess.run(cmd, check=False, capture_output=True)
    return out.read_bytes()


def check_determinism(tmp_dir):
    sweep = ["sweep", "--K-min", "1", "--K-max", "inf", "--steps", "21"]
    verify = ["verify", "--theorem", "UnivalentQC_b1zero", "--k", "0.5", "--seed", "17",
              "--count", "20", "--order", "512"]
    same = []
    for name, args in (("sweep", sweep), ("verify", verify)):
        a = _bohr(args, tmp_dir / f"{name}_a.csv")
        b = _bohr(args, tmp_dir / f"{name}_b.csv")
        same.append(a == b and len(a) > 0)
    return all(same), f"sweep identical={same[0]}, verify identical={same[1]}"


CHECKS = [
    (1, "radius constants", check_radius_constants),
    (2, "sharpness bracketing", check_sharpness_bracketing),
    (3, "extremal equality points", check_extremal_equality),
    (4, "coefficient-bound suite", check_coefficient_bounds_suite),
    (5, "quadratic-majorant suite", check_quadratic_majorant_suite),
    (6, "theorem-holds suite", check_theorems_hold),
    (7, "solver self-consistency", check_solver_consistency),
]


@pytest.mark.parametrize("number,name,check", CHECKS, ids=[c[1].replace(" ", "_") for c in CHECKS])
def test_criterion(number, name, check):
    ok, detail = check()
    report(number, name, ok, detail)
    assert ok, detail


def test_criterion_determinism(tmp_path):
    ok, detail = check_determinism(tmp_path)
    report(8, "determinism", ok, detail)
    assert ok, detail


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    failed = 0
    for number, name, check in CHECKS:
        ok, detail = check()
        report(number, name, ok, detail)
        failed += not ok
    with tempfile.TemporaryDirectory() as d:
        ok, detail = check_determinism(Path(d))
        report(8, "determinism", ok, detail)
        failed += not ok
    sys.exit(1 if failed else 0)
