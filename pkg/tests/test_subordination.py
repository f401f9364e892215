import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from bohr.mapping_catalog import catalog_coeffs, make_entry
from bohr.power_series import Series
from bohr.subordination import (
    SchwarzFn,
    check_coefficient_bounds,
    modulus_on_circle,
    random_blaschke,
    random_schwarz,
    subordinate,
)

N = 256
seeds = st.integers(0, 2**31 - 1)
degrees = st.integers(0, 4)


def blaschke_closed_form(seed, degree, z):
    # same draws as random_blaschke, evaluated as a product of factors
    rng = np.random.default_rng(seed)
    rotation = np.exp(2j * np.pi * rng.random())
    radii = 0.8 * np.sqrt(rng.random(degree))
    angles = 2 * np.pi * rng.random(degree)
    out = rotation * np.ones_like(z)
    for a in radii * np.exp(1j * angles):
        out = out * (z - a) / (1 - np.conj(a) * z)
    return out


@given(seeds, degrees)
def test_blaschke_matches_product_formula(seed, degree):
    b = random_blaschke(seed, degree, N)
    z = 0.7 * np.exp(2j * np.pi * np.arange(32) / 32)
    assert_allclose(b(z), blaschke_closed_form(seed, degree, z), atol=1e-12)


@given(seeds, degrees)
def test_blaschke_is_unimodular_on_the_circle(seed, degree):
    values = random_blaschke(seed, degree, 512).circle_values(1.0, 256)
    assert_allclose(np.abs(values), 1.0, atol=1e-9)


def test_blaschke_is_deterministic():
    assert np.array_equal(random_blaschke(9, 3).coeffs, random_blaschke(9, 3).coeffs)


def test_blaschke_rejects_negative_degree():
    with pytest.raises(ValueError):
        random_blaschke(0, -1)


def test_schwarz_degree_zero_is_identity():
    assert np.array_equal(random_schwarz(123, 0, 16).series.coeffs, np.eye(17)[1])


@given(seeds, degrees)
def test_schwarz_vanishes_at_zero_and_is_certified(seed, degree):
    w = random_schwarz(seed, degree, N)
    assert w.series.coeffs[0] == 0
    assert w.modulus_certificate <= 0.99 + 1e-9


def test_schwarz_seed_42_certificate():
    w = random_schwarz(42, 2, N)
    dense = modulus_on_circle(w.series, 0.99, 4096)
    assert dense <= 0.99 + 1e-9
    assert w.modulus_certificate == pytest.approx(dense)


def test_schwarz_rejects_nonzero_constant():
    with pytest.raises(ValueError):
        SchwarzFn(Series([0.1, 0.5, 0, 0]))


def test_schwarz_rejects_large_modulus():
    with pytest.raises(ValueError):
        SchwarzFn(Series([0, 2.0, 0, 0]))


def test_subordinate_identity_returns_phi():
    phi = catalog_coeffs(make_entry("ExampleB", lam=0.3), N)
    out = subordinate(phi, SchwarzFn(Series.identity(N)))
    assert_allclose(out.coeffs, phi.coeffs, atol=1e-14)


def test_subordinate_geometric_with_rotated_scaled_z():
    k, lam = 0.6, np.exp(0.4j)
    w = SchwarzFn(Series.identity(N) * (k * lam))
    out = subordinate(make_entry("ExtremalConvex"), w)
    assert_allclose(out.coeffs, (k * lam) ** np.arange(N + 1), atol=1e-14)


def test_subordinate_koebe_z_squared():
    z2 = SchwarzFn(Series(np.eye(N + 1)[2]))
    out = subordinate(make_entry("KoebeFn"), z2).coeffs
    assert_allclose(out[2::2], np.arange(1, N // 2 + 1), atol=1e-10)
    assert_allclose(out[1::2], 0, atol=1e-12)


@pytest.mark.parametrize("entry_id", ["ExampleA", "ExampleE", "ExampleG", "DiskMoebius"])
def test_fast_path_agrees_with_horner(entry_id):
    entry = make_entry(entry_id)
    w = random_schwarz(5, 2, 96)
    fast = subordinate(entry, w)
    slow = subordinate(catalog_coeffs(entry, 96), w)
    assert_allclose(fast.coeffs, slow.coeffs, atol=1e-10)


@given(seeds, degrees)
def test_subordinate_preserves_value_at_zero(seed, degree):
    entry = make_entry("ExampleF", lam=1.5 - 0.5j)
    out = subordinate(entry, random_schwarz(seed, degree, 64))
    assert out.coeffs[0] == entry.params["lam"]


def test_koebe_bound_is_attained():
    g = catalog_coeffs(make_entry("KoebeFn"), N)
    rep = check_coefficient_bounds(g, "starlike", 1.0, dist0=0.25)
    assert rep.passed
    assert_allclose(rep.margins, 0, atol=1e-12)


def test_convex_bound_is_attained():
    g = catalog_coeffs(make_entry("ExtremalConvex"), N)
    rep = check_coefficient_bounds(g, "convex", 1.0, dist0=0.5)
    assert rep.passed and rep.worst_margin == pytest.approx(0, abs=1e-14)
    assert_allclose(rep.dist_bounds, 1.0)


def test_subordinate_koebe_is_strictly_below_bound():
    g = subordinate(make_entry("KoebeFn"), random_schwarz(7, 3, N))
    rep = check_coefficient_bounds(g, "starlike", 1.0)
    assert rep.passed
    assert np.all(rep.margins[1:] > 0)


def test_violation_is_reported():
    g = Series([0, 1.0, 3.0, 0])
    rep = check_coefficient_bounds(g, "convex", 1.0)
    assert not rep.passed and rep.violations == 1 and rep.worst_degree == 2


def test_unknown_class_rejected():
    with pytest.raises(ValueError):
        check_coefficient_bounds(Series.identity(4), "spiral", 1.0)


@given(seeds, degrees, st.sampled_from(["ExampleA", "ExampleB", "ExampleD", "ExampleG",
                                        "ExampleH", "KoebeFn"]))
def test_univalent_subordination_bound(seed, degree, entry_id):
    entry = make_entry(entry_id)
    g = subordinate(entry, random_schwarz(seed, degree, N))
    assert check_coefficient_bounds(g, entry.geom_class, entry.deriv0).passed


@given(seeds, degrees, st.sampled_from(["ExampleE", "ExampleF", "DiskMoebius",
                                        "ExtremalConvex"]))
def test_convex_subordination_bound(seed, degree, entry_id):
    entry = make_entry(entry_id)
    g = subordinate(entry, random_schwarz(seed, degree, N))
    assert check_coefficient_bounds(g, "convex", entry.deriv0).passed
