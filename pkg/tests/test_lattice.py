from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cremona.halphen import (
    PicClass, HalphenData, LatticeError, inner, parse_class, halphen_translation, translate,
    kappa, degree_growth_closed_form, degree_growth_matrix, parity_check, is_multiple_of_K,
    permutation_map, permute_class, example_9_4_pipeline,
)

R = 9
K = PicClass.K(R)


def test_basic_intersections():
    L, E1 = PicClass.L(R), PicClass.E(1, R)
    assert inner(L, L) == 1
    assert inner(E1, E1) == -1
    assert inner(K, K) == 0
    assert inner(K, L) == -3
    assert inner(K, E1) == -1


def test_parse_class():
    assert parse_class("3L - E1 - E2") == PicClass(3, (1, 1) + (0,) * 7)
    assert str(parse_class("E2+E3-2E6")) == "E2 + E3 - 2E6"
    with pytest.raises(LatticeError):
        parse_class("E10")
    with pytest.raises(LatticeError):
        parse_class("3Q")


def delta_classes():
    # Delta.K = 0 means 3d = sum a_i, so the last coefficient is solved for
    def build(d, a):
        last = 3 * d - sum(a)
        return PicClass(d, tuple(a) + (last,))
    return st.builds(build, st.integers(-4, 4), st.lists(st.integers(-3, 3), min_size=8, max_size=8))


@settings(max_examples=200, deadline=None)
@given(delta_classes())
def test_parity(Delta):
    assert inner(Delta, K) == 0
    sq = inner(Delta, Delta)
    assert sq % 2 == 0
    if is_multiple_of_K(Delta):
        assert sq == 0 and parity_check(Delta) == "zero_multiple_of_K"
    else:
        assert sq < 0 and parity_check(Delta) == "even_negative"


@settings(max_examples=40, deadline=None)
@given(delta_classes(), st.integers(1, 3))
def test_translation_is_isometry_fixing_K(Delta, m):
    T = halphen_translation(HalphenData(m, Delta))
    assert T.preserves_form()
    assert T.fixes(K)


@settings(max_examples=40, deadline=None)
@given(delta_classes(), delta_classes())
def test_translation_additive(D1, D2):
    T1 = halphen_translation(HalphenData(1, D1))
    T2 = halphen_translation(HalphenData(1, D2))
    assert T1 @ T2 == halphen_translation(HalphenData(1, D1 + D2))


@settings(max_examples=40, deadline=None)
@given(delta_classes(), st.permutations(list(range(1, 10))))
def test_translation_equivariant(Delta, perm):
    p = {i: perm[i - 1] for i in range(1, 10)}
    P = permutation_map(p, R)
    T = halphen_translation(HalphenData(1, Delta))
    Ts = halphen_translation(HalphenData(1, permute_class(p, Delta)))
    # P T P^-1 = T_{P Delta}, written as P T = T_{P Delta} P
    assert P @ T == Ts @ P


@settings(max_examples=30, deadline=None)
@given(delta_classes(), st.integers(1, 3), st.integers(0, 12),
       st.builds(lambda d, a: PicClass(d, tuple(a)), st.integers(-3, 6),
                 st.lists(st.integers(-2, 2), min_size=9, max_size=9)))
def test_closed_form_matches_matrix(Delta, m, n, Lam):
    h = HalphenData(m, Delta)
    assert degree_growth_closed_form(Lam, h, n) == degree_growth_matrix(Lam, h, n)


def test_translate_matches_matrix_column():
    Delta = parse_class("E1 - E2")
    h = HalphenData(2, Delta)
    Lam = PicClass.L(R)
    assert halphen_translation(h)(Lam) == translate(h, Lam)


def test_translation_needs_r9():
    with pytest.raises(LatticeError):
        halphen_translation(HalphenData(1, PicClass.E(1, 8) - PicClass.E(2, 8)))


def test_translation_needs_orthogonal_delta():
    with pytest.raises(LatticeError):
        halphen_translation(HalphenData(1, PicClass.E(1, R)))


def test_kappa_simple():
    # (E1 - E2)^2 = -2, so kappa = 9 m^2 2 / 2
    assert kappa(HalphenData(1, parse_class("E1 - E2"))) == 9
    assert kappa(HalphenData(2, parse_class("E1 - E2"))) == 36


def test_rotation_sum_pipeline_intermediates():
    res = example_9_4_pipeline()
    assert str(res.delta_sum) == "E2 + E3 + E4 + E5 - 2E6 - 2E7"
    # four exceptional classes with coefficient 1 and two with coefficient 2
    assert res.delta_sum_square == -(4 * 1 + 2 * 4)
    assert res.matrix_identity
    assert res.kappa_power == Fraction(9 * 12, 2)
    assert res.kappa == Fraction(27, 8)
