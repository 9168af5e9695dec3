"""Regulators of an embedded unit matrix and class-number-formula left sides.

Every regulator is a determinant over Z/p^k of entry-wise images of the
matrix sigma_j(eps_k): Fermat quotients (mod p), higher Fermat quotients
(mod p^(n+1)) or Iwasawa logarithms (mod p^N). Determinants are only
defined up to the ordering of rows and columns, hence up to sign.
"""

import logging
from typing import Callable, Sequence, Tuple

from sympy import Matrix

from src.lfunctions import leopoldt_Lp
from src.padic import (
    PadicInt,
    fermat_quotient,
    higher_fermat_quotient,
    iwasawa_log,
)
from src.quadfield import EmbeddedField, SplitType
from src.regulators.models import CongruenceComparison, RegulatorBundle
from src.shared.exceptions import NotAUnitError, OutOfScopeError, PrecisionError

logger = logging.getLogger(__name__)

UnitMatrix = Sequence[Sequence[PadicInt]]


def _determinant(
    units: UnitMatrix, entry: Callable[[PadicInt], PadicInt], p: int, N: int
) -> PadicInt:
    for row in units:
        for z in row:
            if not z.is_unit:
                raise NotAUnitError(f"Regulator entry {z} is not a {p}-adic unit")
    matrix = Matrix([[entry(z).r for z in row] for row in units])
    return PadicInt(p, N, int(matrix.det(method="bareiss")))


def _prime_of(units: UnitMatrix) -> int:
    return units[0][0].p


def regulator_mod_p(units: UnitMatrix) -> PadicInt:
    """R^(p) = det(Q_p(sigma_j(eps_k))) mod p."""
    p = _prime_of(units)
    return _determinant(units, fermat_quotient, p, 1)


def regulator_mod_pn(units: UnitMatrix, n: int) -> PadicInt:
    """R^(p,n) = det(Q_{p,n}(sigma_j(eps_k))) mod p^(n+1)."""
    p = _prime_of(units)
    return _determinant(units, lambda z: higher_fermat_quotient(z, n), p, n + 1)


def padic_regulator(units: UnitMatrix, N: int) -> PadicInt:
    """R_p = det(log_p(sigma_j(eps_k))) mod p^N."""
    p = _prime_of(units)
    if any(z.N < N for row in units for z in row):
        raise PrecisionError(f"Unit embeddings are known below precision {N}")
    return _determinant(units, lambda z: iwasawa_log(z.reduce(N)), p, N)


def regulator_bundle(field: EmbeddedField, n: int) -> RegulatorBundle:
    return RegulatorBundle(
        g=field.g,
        n=n,
        Rp=padic_regulator(field.units, field.N),
        Rpn=regulator_mod_pn(field.units, n),
        Rp_mod_p=regulator_mod_p(field.units),
        sign_choice=field.orientation,
    )


def _class_number_factor(field: EmbeddedField, N: int) -> PadicInt:
    """2^(g-1) h / sqrt(d) mod p^N, with the field's sqrt(d)."""
    p = field.p
    if field.h % p == 0:
        raise OutOfScopeError(f"p={p} divides h={field.h}", status="skipped-p-divides-h")
    if field.d % p == 0:
        raise OutOfScopeError(
            f"p={p} is ramified (d={field.d})",
            status=f"skipped-{SplitType.RAMIFIED.value}",
        )
    return PadicInt(p, N, 2 ** (field.g - 1) * field.h) / field.sqrt_d.reduce(N)


def cnf_lhs(field: EmbeddedField, n: int) -> Tuple[PadicInt, PadicInt]:
    """(2^(g-1) h R^(p,n) / sqrt d mod p^(n+1), 2^(g-1) h R^(p) / sqrt d mod p)."""
    factor = _class_number_factor(field, n + 1)
    level = factor * regulator_mod_pn(field.units, n)
    mod_p = factor.reduce(1) * regulator_mod_p(field.units)
    return level, mod_p


def cnf_exact_lhs(field: EmbeddedField, N: int) -> PadicInt:
    """2^(g-1) h R_p / sqrt d mod p^N."""
    return _class_number_factor(field, N) * padic_regulator(field.units, N)


def cnf_exact_check(field: EmbeddedField, N: int) -> CongruenceComparison:
    """2^(g-1) h R_p / sqrt d against prod L_p(chi) (defining sums), up to sign.

    Both sides are computed at the field's precision, which must exceed N.
    """
    W = field.N
    if W <= N:
        raise PrecisionError(f"Field known to p^{W}; comparing mod p^{N} needs more")
    lhs = cnf_exact_lhs(field, W)
    rhs = PadicInt(field.p, W, 1)
    for chi in field.characters:
        rhs = rhs * leopoldt_Lp(chi, field.p, W).value
    comparison = CongruenceComparison.compare(lhs, rhs, required=N)
    logger.debug(
        "p-adic class number formula for %s at p=%s: %s",
        field.label,
        field.p,
        comparison.valuations,
    )
    return comparison
