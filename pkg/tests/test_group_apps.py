import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cremona.cremap import affine
from cremona.group_apps import (
    bs_check, bs_witness, verify_bs_relation, GL2QEmbedding, EmbeddingError, gl2q_verify,
    gl2q_injectivity, rho_map, chi_value, parse_chi, sample_pairs, M_ROT, T1,
)


# Baumslag-Solitar

def test_bs_no_embedding():
    assert bs_check(2, 3).verdict == "NoEmbedding"


def test_bs_1_5_witness():
    v = bs_check(1, 5)
    assert v.verdict == "KnownEmbedding" and v.relation_verified
    assert v.to_json()["r"] == "(x, 5*y)"


def test_bs_unresolved_and_errors():
    assert bs_check(3, 3).verdict == "Unresolved"
    with pytest.raises(ValueError):
        bs_check(0, 2)


def _translation(t):
    return affine("x", "y + %d" % t)


@settings(max_examples=30, deadline=None)
@given(st.integers(-6, 6).filter(bool), st.integers(-6, 6).filter(bool))
def test_bs_witness_relation(m, n):
    r, r_inv, s = bs_witness(m, n)
    assert r.compose(r_inv).equals(affine("x", "y"))
    assert verify_bs_relation(r, r_inv, _translation(m), _translation(n))


def test_bs_relation_rejects_wrong_power():
    r, r_inv, s = bs_witness(1, 5)
    assert not verify_bs_relation(r, r_inv, s, _translation(4))


# GL(2, Q)

def _rho_pointwise(k, chi, A, p):
    # the defining formula evaluated at a point, independent of the map machinery
    (a, b), (c, d) = A
    x, y = p
    det = a * d - b * c
    den = c * y + d
    return chi_value(chi, det) * x / den ** k, (a * y + b) / den


def _matmul(A, B):
    return [[sum(A[i][t] * B[t][j] for t in range(2)) for j in range(2)] for i in range(2)]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_rho_is_homomorphism_pointwise(seed):
    rng = random.Random(seed)
    (A, B), = sample_pairs(1, seed=seed)
    chi = {2: Fraction(4), 3: Fraction(9)}
    p = (Fraction(rng.randint(1, 50), 7), Fraction(rng.randint(1, 50), 11))
    inner = _rho_pointwise(3, chi, B, p)
    try:
        lhs = _rho_pointwise(3, chi, A, inner)
        rhs = _rho_pointwise(3, chi, _matmul(A, B), p)
    except ZeroDivisionError:
        return
    assert lhs == rhs


def test_rho_map_matches_pointwise():
    A = [[2, 1], [1, 3]]
    p = (Fraction(3), Fraction(5))
    assert rho_map(1, {}, A)(p) == _rho_pointwise(1, {}, A, p)


def test_gl2q_k1_trivial():
    rep = gl2q_verify(GL2QEmbedding(1), sample_pairs(30, seed=1))
    assert rep.ok and not rep.failures
    assert all(rep.relations.values())


def test_gl2q_k3_chi():
    e = GL2QEmbedding(3, parse_chi("2->4,3->9"))
    rep = gl2q_verify(e, sample_pairs(10, seed=2))
    assert rep.ok


def test_even_k_rejected():
    with pytest.raises(EmbeddingError):
        GL2QEmbedding(2)
    with pytest.raises(EmbeddingError):
        GL2QEmbedding(0)


def test_rotation_relations():
    rM = rho_map(1, {}, M_ROT)
    rt = rho_map(1, {}, T1)
    c = rM.compose(rt)
    assert c.compose(c).compose(c).equals(affine("x", "y"))
    assert not rM.compose(rM).equals(affine("x", "y"))


def test_chi_values():
    assert chi_value({2: 4, 3: 9}, Fraction(6, 5)) == 36
    assert chi_value({2: 4}, Fraction(1, 2)) == Fraction(1, 4)
    with pytest.raises(ValueError):
        parse_chi("4->2")


def test_injectivity():
    assert gl2q_injectivity(GL2QEmbedding(1)).injective


def test_rotation_relation_k3_square_character():
    # chi(a) = a^2 on the primes involved; M and t1 have determinant 1
    chi = {-1: 1, 2: 4, 3: 9}
    c = rho_map(3, chi, M_ROT).compose(rho_map(3, chi, T1))
    assert c.compose(c).compose(c).equals(affine("x", "y"))
