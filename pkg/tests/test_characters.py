import pytest

from spindle import characters as ch
from spindle.errors import DomainError, ResourceBudgetError
from spindle.qpoly import QPolynomial
from spindle.rootsystem import build_root_system

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
A3 = build_root_system("A", 3)
B2 = build_root_system("B", 2)
C3 = build_root_system("C", 3)
G2 = build_root_system("G", 2)


def test_adjoint_a2():
    mult = ch.dominant_multiplicities(A2, (1, 1))
    assert mult == {(1, 1): 1, (0, 0): 2}
    char = ch.irreducible_character(A2, (1, 1))
    assert char.dimension == 8
    assert char.entries[(0, 0)] == 2
    assert char.entries[(1, 1)] == 1


def test_sl2_strings():
    for m in range(7):
        char = ch.irreducible_character(A1, (m,))
        assert char.dimension == m + 1
        assert all(v == 1 for v in char.entries.values())


def test_c3_w3_wmf():
    mult = ch.dominant_multiplicities(C3, (0, 0, 1))
    assert sum(C3.orbit_size(mu) * m for mu, m in mult.items()) == 14
    assert all(m == 1 for m in mult.values())
    assert ch.is_wmf(C3, (0, 0, 1))
    assert ch.dominant_weights(C3, (0, 0, 1)) == [(0, 0, 1), (1, 0, 0)]


def test_c3_w2_not_wmf():
    mult = ch.dominant_multiplicities(C3, (0, 1, 0))
    assert mult[(0, 0, 0)] == 2
    assert not ch.is_wmf(C3, (0, 1, 0))


def test_dimension_budget():
    with pytest.raises(ResourceBudgetError):
        ch.dominant_multiplicities(
            build_root_system("E", 8), (1, 0, 0, 0, 0, 0, 0, 0),
            dim_budget=1000,
        )


def test_dominant_weights_order():
    weights = ch.dominant_weights(A2, (2, 2))
    assert weights[0] == (2, 2)
    heights = [A2.height(w) for w in weights]
    assert heights == sorted(heights, reverse=True)


def test_minuscule():
    assert ch.is_minuscule(A3, (0, 1, 0))
    assert ch.is_minuscule(build_root_system("E", 7),
                           (0, 0, 0, 0, 0, 0, 1))
    assert not ch.is_minuscule(G2, (1, 0))
    assert not ch.is_minuscule(B2, (1, 0))
    assert ch.is_minuscule(B2, (0, 1))
    assert ch.minuscule_by_pairing(A2, (1, 0))


def test_minuscule_implies_wmf():
    for rs, lam in [(A3, (1, 0, 0)), (A3, (0, 1, 0)), (B2, (0, 1)),
                    (C3, (1, 0, 0))]:
        assert ch.is_minuscule(rs, lam)
        assert ch.is_wmf(rs, lam)


def test_is_small():
    # the adjoint weight is in Q; 2*theta is never a weight of the adjoint
    assert ch.is_small(A2, (1, 1))
    with pytest.raises(DomainError):
        ch.is_small(A2, (1, 0))
    # (G2, 2w1) contains the doubled short roots
    assert not ch.is_small(G2, (2, 0))


def test_tensor_square_sl2():
    assert ch.decompose_tensor_square(A1, (1,)) == [((2,), 1), ((0,), 1)]
    pieces = ch.decompose_tensor_square(A1, (2,))
    assert pieces == [((4,), 1), ((2,), 1), ((0,), 1)]


def test_tensor_square_mass():
    for rs, lam in [(A2, (1, 1)), (C3, (0, 0, 1)), (G2, (1, 0))]:
        dim = rs.weyl_dimension(lam)
        pieces = ch.decompose_tensor_square(rs, lam)
        assert sum(c * rs.weyl_dimension(nu) for nu, c in pieces) == dim * dim


def test_tensor_square_budget():
    with pytest.raises(ResourceBudgetError):
        ch.decompose_tensor_square(A2, (3, 3), dim_budget=100)


def test_floor_profile_adjoint():
    prof = ch.floor_profile(A2, (1, 1))
    assert prof == QPolynomial([1, 2, 2, 2, 1])
    assert prof.is_symmetric() and prof.is_unimodal()


def test_floor_profile_g2():
    assert ch.floor_profile(G2, (1, 0)) == QPolynomial([1] * 7)


def test_string_decomposition_adjoint():
    char = ch.irreducible_character(A2, (1, 1))
    assert ch.string_decomposition(char) == QPolynomial([0, 1, 1])


def test_string_decomposition_g2_w1():
    char = ch.irreducible_character(G2, (1, 0))
    assert ch.string_decomposition(char) == QPolynomial.monomial(3)


def test_string_decomposition_end_type():
    char = ch.irreducible_character(A1, (1,))
    end = char.product(char.dual())
    assert ch.string_decomposition(end) == QPolynomial([1, 1])


def test_string_decomposition_rejects_half_levels():
    char = ch.irreducible_character(A1, (1,))
    with pytest.raises(DomainError):
        ch.string_decomposition(char)


def test_dual_and_product_dimensions():
    char = ch.irreducible_character(A3, (1, 0, 0))
    assert char.dual().dimension == 4
    assert char.product(char.dual()).dimension == 16
