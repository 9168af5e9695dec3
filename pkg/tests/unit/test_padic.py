"""Unit tests for truncated p-adic integers and the Fermat-quotient operators.

Spot values are small enough to check by hand: 1/2 = 63 mod 125,
omega(2) = 7 mod 25, log_5(6) = 55 mod 125 and sqrt(5) = 48 mod 121.
"""

from fractions import Fraction

import pytest

from src.padic import (
    PadicInt,
    fermat_quotient,
    guard_digits,
    hensel_sqrt,
    higher_fermat_quotient,
    int_valuation,
    iwasawa_log,
    padic_add,
    padic_inv,
    padic_mul,
    rational_valuation,
    teichmuller,
    unit_decompose,
)
from src.shared.exceptions import (
    NonIntegralError,
    NotAResidueError,
    NotAUnitError,
    PadicError,
    PrecisionError,
    PrimeMismatchError,
)

# --- Ring arithmetic --------------------------------------------------------


def test_inverse_of_two_mod_125():
    assert padic_inv(PadicInt(5, 3, 2)) == PadicInt(5, 3, 63)


def test_residue_is_canonical():
    assert PadicInt(5, 2, -1).r == 24
    assert PadicInt(5, 2, 26).r == 1


def test_binary_operations_take_the_smaller_precision():
    a = PadicInt(5, 2, 7)
    b = PadicInt(5, 4, 101)
    assert (a + b).N == 2
    assert padic_mul(a, b) == PadicInt(5, 2, 7 * 101)
    assert padic_add(a, b) == PadicInt(5, 2, 108)


def test_plain_ints_are_exact_operands():
    z = PadicInt(7, 3, 10)
    assert (1 - z) == PadicInt(7, 3, -9)
    assert (z + 1).N == 3
    assert (3 * z) == PadicInt(7, 3, 30)


def test_mixed_primes_raise():
    with pytest.raises(PrimeMismatchError):
        PadicInt(5, 2, 1) + PadicInt(7, 2, 1)


@pytest.mark.parametrize("p", [2, 3, 9])
def test_small_or_composite_primes_are_rejected(p):
    with pytest.raises(PadicError):
        PadicInt(p, 2, 1)


def test_non_unit_has_no_inverse():
    with pytest.raises(NotAUnitError):
        PadicInt(5, 3, 10).inverse()


def test_division_by_int():
    assert PadicInt(11, 2, 1) / 2 * 2 == PadicInt(11, 2, 1)


# --- Valuations and precision -----------------------------------------------


def test_valuation_of_zero_reads_as_precision():
    zero = PadicInt(5, 3, 0)
    assert zero.is_zero
    assert zero.valuation() == 3
    assert zero.valuation_text() == ">=3"


def test_valuation_of_nonzero_residue():
    z = PadicInt(5, 4, 50)
    assert z.valuation() == 2
    assert z.valuation_text() == "2"


def test_reduce_truncates_and_never_raises_precision():
    assert PadicInt(5, 3, 63).reduce(1) == PadicInt(5, 1, 3)
    with pytest.raises(PrecisionError):
        PadicInt(5, 2, 1).reduce(3)


def test_integer_and_rational_valuations():
    assert int_valuation(50, 5) == 2
    assert rational_valuation(Fraction(3, 25), 5) == -2
    with pytest.raises(PadicError):
        int_valuation(0, 5)


def test_from_rational():
    assert PadicInt.from_rational(Fraction(1, 6), 5, 3) * 6 == PadicInt(5, 3, 1)
    with pytest.raises(NonIntegralError) as exc:
        PadicInt.from_rational(Fraction(1, 25), 5, 3)
    assert exc.value.valuation == -2


def test_guard_digits_grows_with_log_n():
    assert guard_digits(1, 5) == 2
    assert guard_digits(3, 5) == 3
    assert guard_digits(30, 5) == 5


# --- Teichmüller and the logarithm ------------------------------------------


def test_teichmuller_of_two_mod_25():
    omega = teichmuller(PadicInt(5, 2, 2))
    assert omega == PadicInt(5, 2, 7)
    assert omega**4 == PadicInt(5, 2, 1)


def test_unit_decomposition_recombines():
    z = PadicInt(7, 4, 100)
    parts = unit_decompose(z)
    assert parts.omega * parts.principal == z
    assert parts.principal.r % 7 == 1
    assert parts.ztilde.N == 3


def test_teichmuller_root_has_trivial_principal_part():
    omega = teichmuller(PadicInt(11, 5, 7))
    parts = unit_decompose(omega)
    assert parts.omega == omega
    assert parts.principal == PadicInt(11, 5, 1)
    assert parts.ztilde == PadicInt(11, 4, 0)


def test_small_decompositions_by_hand():
    assert teichmuller(PadicInt(11, 1, 6)) == PadicInt(11, 1, 6)
    assert unit_decompose(PadicInt(5, 2, 2)).principal == PadicInt(5, 2, 11)


def test_iwasawa_log_of_six():
    assert iwasawa_log(PadicInt(5, 3, 6)) == PadicInt(5, 3, 55)


def test_log_vanishes_on_roots_of_unity():
    omega = teichmuller(PadicInt(11, 5, 3))
    assert iwasawa_log(omega).is_zero


def test_log_is_a_homomorphism():
    a, b = PadicInt(13, 4, 17), PadicInt(13, 4, 40)
    assert iwasawa_log(a * b) == iwasawa_log(a) + iwasawa_log(b)


def test_log_requires_a_unit():
    with pytest.raises(NotAUnitError):
        iwasawa_log(PadicInt(5, 3, 5))


# --- Fermat quotients -------------------------------------------------------


def test_fermat_quotient_of_two_at_five():
    assert fermat_quotient(PadicInt(5, 2, 2)) == PadicInt(5, 1, 3)


def test_higher_fermat_quotient_of_six():
    assert higher_fermat_quotient(PadicInt(5, 3, 6), 1) == PadicInt(5, 2, 14)


def test_higher_quotient_refines_the_fermat_quotient():
    z = PadicInt(11, 5, 1234)
    for n in (1, 2, 3):
        assert higher_fermat_quotient(z, n).reduce(1) == fermat_quotient(z)


@pytest.mark.parametrize("x,y", [(2, 3), (10, 48), (100, 6), (50, 344)])
def test_fermat_quotient_is_additive(x, y):
    a, b = PadicInt(7, 3, x), PadicInt(7, 3, y)
    assert fermat_quotient(a * b) == fermat_quotient(a) + fermat_quotient(b)


@pytest.mark.parametrize("z", [2, 1234, 98766])
def test_higher_quotients_truncate_to_lower_levels(z):
    z = PadicInt(5, 7, z)
    for n in range(1, 6):
        for m in range(1, n):
            coarse = higher_fermat_quotient(z, n).reduce(m + 1)
            assert coarse == higher_fermat_quotient(z, m)


def test_higher_quotient_matches_log_at_its_level():
    z = PadicInt(7, 6, 321)
    for n in (1, 2, 3, 4):
        lifted = PadicInt(7, n + 2, -7 * higher_fermat_quotient(z, n).r)
        assert lifted == iwasawa_log(z.reduce(n + 2))


def test_higher_quotient_needs_n_plus_two_digits():
    with pytest.raises(PrecisionError):
        higher_fermat_quotient(PadicInt(5, 3, 6), 2)
    with pytest.raises(PrecisionError):
        fermat_quotient(PadicInt(5, 1, 2))


# --- Square roots ------------------------------------------------------------


def test_hensel_sqrt_of_five_mod_121():
    root = hensel_sqrt(5, 11, 2)
    assert root == PadicInt(11, 2, 48)
    assert root.r % 11 <= 5


def test_hensel_sqrt_picks_the_small_residue():
    assert hensel_sqrt(40, 13, 1) == PadicInt(13, 1, 1)


def test_hensel_sqrt_lifts_to_high_precision():
    root = hensel_sqrt(13, 17, 12)
    assert root * root == PadicInt(17, 12, 13)


def test_hensel_sqrt_non_residue():
    with pytest.raises(NotAResidueError):
        hensel_sqrt(2, 5, 3)


def test_hensel_sqrt_of_multiple_of_p():
    with pytest.raises(NotAUnitError):
        hensel_sqrt(10, 5, 3)
