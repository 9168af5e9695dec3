"""Unit tests for Dirichlet characters and their values in Z/p^N."""

import pytest

from src.characters import (
    CharacterKind,
    RootChoice,
    char_residue,
    cyclic_char,
    embedding_generator,
    eval_char,
    gauss_sum,
    is_fundamental_discriminant,
    kronecker_char,
    primitive_root_of_unity,
    tabulated_char,
    trivial_char,
)
from src.padic import PadicInt
from src.shared.exceptions import CharacterError, EmbeddingError

# --- Quadratic characters ---------------------------------------------------


@pytest.mark.parametrize("d", [5, 8, 12, 13, 40, 316])
def test_fundamental_discriminants(d):
    assert is_fundamental_discriminant(d)


@pytest.mark.parametrize("d", [1, 3, 4, 6, 9, 20, 25])
def test_not_fundamental_discriminants(d):
    assert not is_fundamental_discriminant(d)


def test_kronecker_character_of_five(chi5):
    assert [eval_char(chi5, a) for a in range(6)] == [0, 1, -1, -1, 1, 0]
    assert chi5.kind == CharacterKind.QUADRATIC
    assert chi5.is_even
    assert str(chi5) == "chi_5"


def test_kronecker_character_of_eight():
    chi = kronecker_char(8)
    assert [eval_char(chi, a) for a in (1, 3, 5, 7)] == [1, -1, -1, 1]
    assert chi.is_even


def test_kronecker_character_rejects_non_discriminants():
    with pytest.raises(CharacterError):
        kronecker_char(6)


def test_quadratic_characters_are_self_conjugate(chi5):
    assert chi5.conjugate() is chi5


def test_trivial_character():
    chi = trivial_char()
    assert chi.is_trivial
    assert eval_char(chi, 17) == 1


# --- Tabulated characters ---------------------------------------------------


def test_cubic_character_mod_seven():
    chi = cyclic_char(7, 3)
    assert chi.order == 3
    assert chi.is_even
    assert not chi.is_exact
    product = [
        (chi.exponent(a) + chi.conjugate().exponent(a)) % 3 for a in range(1, 7)
    ]
    assert product == [0] * 6


def test_cyclic_character_needs_order_dividing_q_minus_one():
    with pytest.raises(CharacterError):
        cyclic_char(7, 4)


def test_inconsistent_generator_images():
    with pytest.raises(CharacterError):
        tabulated_char(5, 4, {2: 1, 3: 1})


def test_generators_must_span_the_group():
    with pytest.raises(CharacterError):
        tabulated_char(7, 3, {2: 1})


def test_imprimitive_character_is_rejected():
    with pytest.raises(CharacterError):
        tabulated_char(6, 2, {5: 1})


def test_exact_values_only_for_orders_up_to_two():
    with pytest.raises(CharacterError):
        cyclic_char(7, 3).exact_value(3)


# --- Embedded values ----------------------------------------------------------


def test_fifth_root_of_unity_in_z11():
    xi = primitive_root_of_unity(5, 11, 3).xi
    assert xi**5 == PadicInt(11, 3, 1)
    assert xi != PadicInt(11, 3, 1)


def test_roots_of_unity_come_from_the_least_primitive_root():
    assert embedding_generator(11) == 2
    assert embedding_generator(7) == 3
    assert primitive_root_of_unity(5, 11, 1).xi == PadicInt(11, 1, 4)
    assert primitive_root_of_unity(2, 11, 2).xi == PadicInt(11, 2, 120)


@pytest.mark.parametrize("m,p", [(5, 11), (3, 43), (7, 43), (8, 17)])
def test_conjugate_root_is_the_inverse(m, p):
    canonical = primitive_root_of_unity(m, p, 4).xi
    conjugate = primitive_root_of_unity(m, p, 4, RootChoice.CONJUGATE).xi
    assert canonical * conjugate == PadicInt(p, 4, 1)
    assert conjugate**m == PadicInt(p, 4, 1)


def test_root_of_unity_must_embed():
    with pytest.raises(EmbeddingError):
        primitive_root_of_unity(5, 13, 2)


def test_char_residue_of_quadratic(chi5):
    assert char_residue(chi5, 2, 11, 3) == PadicInt(11, 3, -1)
    assert char_residue(chi5, 10, 11, 3) == PadicInt(11, 3, 0)


def test_char_residue_of_cubic_is_a_cube_root_of_unity():
    value = char_residue(cyclic_char(7, 3), 3, 13, 4)
    assert value**3 == PadicInt(13, 4, 1)
    assert value != PadicInt(13, 4, 1)


@pytest.mark.parametrize("d,p", [(5, 11), (5, 31), (8, 17), (12, 13)])
def test_gauss_sum_squares_to_conductor(d, p):
    tau = gauss_sum(kronecker_char(d), p, 4)
    assert tau * tau == PadicInt(p, 4, d)


@pytest.mark.parametrize(
    "chi,p", [(kronecker_char(5), 11), (kronecker_char(12), 13), (cyclic_char(7, 3), 43)]
)
def test_gauss_sum_of_an_even_character_ignores_the_root(chi, p):
    conjugate = gauss_sum(chi, p, 4, RootChoice.CONJUGATE)
    assert conjugate == gauss_sum(chi, p, 4)


def test_gauss_sum_needs_conductor_dividing_p_minus_one(chi5):
    with pytest.raises(EmbeddingError):
        gauss_sum(chi5, 13, 3)
