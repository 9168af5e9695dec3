"""p-adic L-values at the points the class number congruences use.

s = 1 comes from Leopoldt's defining sum over log_p(1 - xi^a); the points
1 - s with (p-1) | s come from Euler-corrected generalized Bernoulli numbers.
"""

import logging
from math import gcd
from typing import Iterable

from src.bernoulli import l_value_mod
from src.characters import (
    DirichletChar,
    RootChoice,
    char_residue,
    gauss_sum,
    primitive_root_of_unity,
)
from src.lfunctions.models import LpValue, Normalization, Provenance
from src.padic import PadicInt, guard_digits, iwasawa_log
from src.shared.exceptions import CharacterError, EmbeddingError, NonIntegralError

logger = logging.getLogger(__name__)


def _require_unramified(chi: DirichletChar, p: int) -> None:
    if chi.conductor % p == 0:
        raise CharacterError(f"p={p} divides the conductor of {chi}")


def leopoldt_Lp(
    chi: DirichletChar, p: int, N: int, choice: RootChoice = RootChoice.CANONICAL
) -> LpValue:
    """-(tau(chi)/f) sum_{(a,f)=1} conj(chi)(a) log_p(1 - xi^a) mod p^N.

    xi is the chosen f-th root of unity and the Gauss sum uses the same one,
    so the value does not depend on the choice.
    """
    if chi.is_trivial or not chi.is_even:
        raise CharacterError(f"{chi} must be even and nontrivial")
    _require_unramified(chi, p)
    f = chi.conductor
    if (p - 1) % f != 0:
        raise EmbeddingError(f"Conductor {f} does not divide p-1={p - 1}")
    W = N + guard_digits(N, p)
    xi = primitive_root_of_unity(f, p, W, choice).xi
    conj = chi.conjugate()
    total = PadicInt(p, W, 0)
    for a in range(1, f + 1):
        if gcd(a, f) != 1:
            continue
        factor = 1 - xi**a
        assert factor.is_unit, f"1 - xi^{a} is not a unit (p={p}, f={f})"
        total = total + char_residue(conj, a, p, W) * iwasawa_log(factor)
    value = -(gauss_sum(chi, p, W, choice) / f) * total
    return LpValue(
        chi=chi,
        p=p,
        value=value.reduce(N),
        provenance=Provenance.DEFINING_SUM,
        choice=choice,
    )


def kubota_leopoldt_special(
    chi: DirichletChar, s: int, p: int, M: int, **routing
) -> LpValue:
    """L_p(1-s; chi) = (1 - chi(p) p^(s-1)) L(1-s; chi) for (p-1) | s.

    The Euler term is dropped once p^(s-1) vanishes mod p^M.
    """
    _require_unramified(chi, p)
    if s < p - 1 or s % (p - 1) != 0:
        raise CharacterError(f"s={s} is not a positive multiple of p-1={p - 1}")
    value = l_value_mod(s, chi, p, M, **routing)
    if s - 1 < M:
        euler = 1 - char_residue(chi, p, p, M) * p ** (s - 1)
        value = value * euler
    return LpValue(
        chi=chi, p=p, value=value, provenance=Provenance.BERNOULLI_INTERPOLATION
    )


def relative_zeta_p_at_1(
    characters: Iterable[DirichletChar],
    p: int,
    N: int,
    normalization: Normalization = Normalization.LEOPOLDT,
) -> PadicInt:
    """zeta_{K/Q,p}(1) = prod over chi != 1 of L_p(1; chi) mod p^N.

    Under ``EULER`` every factor is (p - chi(p))/p times the defining sum,
    so the sums are taken with one extra digit each and the power of p is
    divided out; a product of valuation below that count is not integral.
    """
    characters = [chi for chi in characters if not chi.is_trivial]
    normalization = Normalization(normalization)
    if normalization == Normalization.LEOPOLDT:
        product = PadicInt(p, N, 1)
        for chi in characters:
            product = product * leopoldt_Lp(chi, p, N).value
        return product
    extra = len(characters)
    W = N + extra
    product = PadicInt(p, W, 1)
    for chi in characters:
        product = product * leopoldt_Lp(chi, p, W).value
        product = product * (p - char_residue(chi, p, p, W))
    if product.r % p**extra != 0:
        raise NonIntegralError(
            f"zeta_{{K/Q,{p}}}(1) is not {p}-integral",
            valuation=product.valuation() - extra,
        )
    logger.debug("Euler-normalized relative zeta at p=%s over %s factors", p, extra)
    return PadicInt(p, N, product.r // p**extra)
