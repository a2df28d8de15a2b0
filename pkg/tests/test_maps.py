import random

import pytest
from hypothesis import given, settings, strategies as st

from cremona.cremap import (
    RationalMapP2, make_map, compose, compose_python, equals, iterate, iterate_degrees,
    conjugated_iterate_degrees, verify_inverse, conjugate, commutes, inverse_low_degree,
    affine, parse_map_text, sigma, f_alpha_beta, delpezzo_h, jordan_psi, jordan_psi_inverse,
    BitCapExceeded, InverseError,
)
from cremona.cremap.fixtures import jordan_map, jordan_target, quadratic_conjugator, sigma_linear
from cremona.exactalg import NumberField


def test_sigma_is_involution():
    s = sigma()
    assert compose(s, s).is_identity()


def test_delpezzo_order_six():
    h = delpezzo_h()
    assert not iterate(h, 2).is_identity()
    assert not iterate(h, 3).is_identity()
    assert iterate(h, 6).is_identity()


def test_jordan_conjugation():
    psi, psi_inv = jordan_psi(), jordan_psi_inverse()
    assert verify_inverse(psi, psi_inv)
    assert conjugate(psi, psi_inv, jordan_map()) == jordan_target()


def test_conjugate_checks_inverse():
    with pytest.raises(InverseError):
        conjugate(jordan_psi(), jordan_psi(), jordan_map())


def test_f23_degrees_frozen():
    # frozen from the python composition route
    assert iterate_degrees(f_alpha_beta(), 8) == [2, 2, 3, 3, 4, 4, 5, 5]


def test_two_composition_routes_agree():
    f = f_alpha_beta()
    g = sigma_linear()
    for a, b in [(f, g), (g, f), (f, f), (g, g)]:
        assert equals(compose(a, b), compose_python(a, b))


def test_number_field_composition():
    K = NumberField([1, 0, 1])
    i = K.gen()
    ident = make_map(["x", "y", "z"], K)
    d = RationalMapP2.linear([[i, 0, 0], [0, 1, 0], [0, 0, 1]], K)
    assert iterate(d, 4).is_identity()
    assert not iterate(d, 2).is_identity()
    assert compose(ident, d) == d


def test_inverse_low_degree_of_quadratic():
    psi, _ = quadratic_conjugator()
    inv = inverse_low_degree(psi)
    assert verify_inverse(psi, inv)


def test_conjugated_degrees_match_direct():
    psi, psi_inv = quadratic_conjugator()
    f = f_alpha_beta()
    direct = [conjugate(psi, psi_inv, iterate(f, k)).degree for k in range(1, 5)]
    assert conjugated_iterate_degrees(psi, psi_inv, f, 4) == direct


def test_bit_cap():
    with pytest.raises(BitCapExceeded):
        iterate_degrees(sigma_linear(), 8, bit_cap=4)


def test_commutes():
    assert commutes(sigma(), make_map(["y", "x", "z"]))
    assert not commutes(jordan_map(), make_map(["y", "x", "z"]))


def test_affine_from_and_to_p2():
    g = affine("x + 1", "y + x^2")
    assert g.equals(affine("1 + x", "x^2 + y"))
    assert g.compose(affine("x - 1", "y - (x - 1)^2")).equals(affine("x", "y"))


def test_parse_map_text():
    phi = parse_map_text("# comment\nmap P2 [y*z, x*z, x*y]\n")
    assert phi == sigma()
    K_phi = parse_map_text("field: t^2+1\nmap P2 [t*x, y, z]\n")
    assert K_phi.field.degree == 2


def _random_linear(rng):
    while True:
        A = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        d = (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
             - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
             + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))
        if d:
            return A


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_composition_associative(seed):
    rng = random.Random(seed)
    a = compose(sigma(), RationalMapP2.linear(_random_linear(rng)))
    b = RationalMapP2.linear(_random_linear(rng))
    c = f_alpha_beta()
    assert equals(compose(a, compose(b, c)), compose(compose(a, b), c))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_degree_subadditive(seed):
    rng = random.Random(seed)
    a = compose(sigma(), RationalMapP2.linear(_random_linear(rng)))
    b = compose(RationalMapP2.linear(_random_linear(rng)), f_alpha_beta())
    assert compose(a, b).degree <= a.degree * b.degree


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_maps_are_normalized(seed):
    rng = random.Random(seed)
    a = compose(sigma(), RationalMapP2.linear(_random_linear(rng)))
    from cremona.exactalg import gcd3
    assert gcd3(*a.components).degree == 0
