import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cremona.cremap import (
    RationalMapP2, compose, iterate, iterate_degrees, inverse_low_degree, sigma, f_alpha_beta,
)
from cremona.cremap.fixtures import sigma_linear
from cremona.dynamics import (
    classify_growth, lambda_estimate, root_bracket, theil_sen_slope, proper_base_points,
    is_base_point, jonquieres_profile, jonquieres_bp_count, validate_profile, mu_estimate,
    mu_from_degrees, NonIntegralMu, preserves_pencil, persistence_scan, CLASSES,
)


# growth classification

def test_jonquieres_sequence():
    r = classify_growth(iterate_degrees(f_alpha_beta(), 20))
    assert r.growth_class == "Jonquieres"
    assert r.robust_slope == Fraction(1, 2)


def test_hyperbolic_sequence():
    r = classify_growth(iterate_degrees(sigma_linear(), 8))
    assert r.degrees == [2 ** k for k in range(1, 9)]
    assert r.growth_class == "Hyperbolic"
    assert r.lambda_estimate.contains(2)


def test_bounded_sequence_is_elliptic():
    r = classify_growth([1] * 10)
    assert r.growth_class == "Elliptic"
    assert r.lambda_estimate.lower == 1 == r.lambda_estimate.upper


def test_quadratic_sequence_is_halphen():
    assert classify_growth([1 + 3 * k * k for k in range(1, 13)]).growth_class == "Halphen"


def test_classify_needs_enough_terms():
    with pytest.raises(ValueError):
        classify_growth([1, 2, 3])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(1, 10 ** 6), min_size=8, max_size=20))
def test_classify_total(degrees):
    r = classify_growth(degrees)
    assert r.growth_class in CLASSES
    assert r.lambda_estimate.lower <= r.lambda_estimate.upper


def test_root_bracket_exact_power():
    assert root_bracket(8, 3) == (2, 2)


@given(st.integers(2, 10 ** 9), st.integers(1, 12))
def test_root_bracket_brackets_real_root(n, k):
    lo, hi = root_bracket(n, k)
    assert lo ** k <= n <= hi ** k
    assert hi - lo <= Fraction(1, 2 ** 20) * max(1, hi)


@given(st.integers(-5, 5), st.integers(-20, 20))
def test_theil_sen_exact_on_lines(a, b):
    ks = list(range(1, 11))
    assert theil_sen_slope(ks, [a * k + b for k in ks]) == a


def test_lambda_estimate_on_powers_of_two():
    est = lambda_estimate([2 ** k for k in range(1, 9)])
    assert est.exact and est.lower == 2


# base points

def test_sigma_base_points():
    pts = proper_base_points(sigma())
    assert sorted(p.coords for p in pts) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert all(p.multiplicity == 1 for p in pts)


def test_f23_base_points():
    pts = proper_base_points(f_alpha_beta())
    assert sorted(p.coords for p in pts) == [(-1, 2, 1), (0, 1, 0), (1, 0, 0)]


def _check_noether(phi):
    # a map with only proper base points satisfies sum m = 3(d-1), sum m^2 = d^2 - 1
    pts = proper_base_points(phi)
    d = phi.degree
    s1 = sum(p.multiplicity * p.degree for p in pts)
    s2 = sum(p.multiplicity ** 2 * p.degree for p in pts)
    return s1 == 3 * (d - 1) and s2 == d * d - 1, pts


def test_f23_cube_profile():
    ok, pts = _check_noether(iterate(f_alpha_beta(), 3))
    assert ok
    assert sorted(p.multiplicity for p in pts) == [1, 1, 1, 1, 2]


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_base_points_vanish_on_components(seed):
    rng = random.Random(seed)
    while True:
        A = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        phi = compose(RationalMapP2.linear(A), sigma()) if _det(A) else None
        if phi is not None:
            break
    for p in proper_base_points(phi):
        if p.is_rational():
            assert is_base_point(phi, p.coords)
            assert all(f.evaluate(p.coords) == 0 for f in phi.components)


def _det(A):
    return (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
            - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
            + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))


# Jonquieres maps

def test_jonquieres_profile():
    p = jonquieres_profile(3)
    assert p.multiplicities == (2, 1, 1, 1, 1)
    assert jonquieres_bp_count(3) == 5


@given(st.integers(2, 30))
def test_jonquieres_profile_satisfies_noether(d):
    p = jonquieres_profile(d)
    assert validate_profile(p)
    assert sum(p.multiplicities) == 3 * (d - 1)
    assert sum(m * m for m in p.multiplicities) == d * d - 1


def test_mu_of_f23():
    rep = mu_estimate(f_alpha_beta(), pencil_point=(1, 0, 0))
    assert rep.mu == 1 and rep.pencil_verified


def test_pencil_check():
    assert preserves_pencil(f_alpha_beta(), (1, 0, 0))
    assert not preserves_pencil(sigma_linear(), (1, 0, 0))


def test_non_integral_mu():
    with pytest.raises(NonIntegralMu):
        mu_from_degrees([1 + 3 * k // 4 for k in range(1, 17)])


# persistence

def test_persistence_f23():
    f = f_alpha_beta()
    rep = persistence_scan(f, inverse_low_degree(f), N=4)
    js = rep.to_json()
    assert set(js["classes"]) == {"B++", "B+-", "B-+", "B--"}
    assert js["classes"]["B++"] == [[{"num": 1, "den": 1}, {"num": 0, "den": 1}, {"num": 0, "den": 1}]]
    assert js["nu_proper"] == 1
    assert js["degrees"]["3"] == 3 and js["degrees"]["-3"] == 3
