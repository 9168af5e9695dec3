"""p-adic power-sum algorithm for generalized Bernoulli numbers.

B_{n,chi} = lim_k (1 / (f p^k)) sum_{a=1}^{f p^k} chi(a) a^n in Z_p.

The sum over a is never expanded term by term. Writing a = c + m u with
m = f p, c in [1, m] and u in [0, p^(k-1)):

    sum_a chi(a) a^n = sum_j C(n, j) m^j P_j sum_c chi(c) c^(n-j)

where P_j = sum_u u^j is an exact integer. Since v_p(m) = 1, only j < W
contributes modulo p^W, so each level costs O(f p W) modular products.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Optional

from src.bernoulli.exact import (
    bernoulli_poly,
    classical_L_value,
    gen_bernoulli_exact,
    zeta_ratio_exact,
)
from src.characters import DirichletChar, char_residue
from src.padic import PadicInt, int_valuation
from src.shared.exceptions import BernoulliError, ConvergenceError, NonIntegralError

logger = logging.getLogger(__name__)

DEFAULT_EXACT_BOUND = 400
DEFAULT_K_CEILING = 12
DEFAULT_GUARD_DIGITS = 2


def _power_sum(j: int, upper: int) -> int:
    """sum_{u=0}^{upper-1} u^j via Faulhaber."""
    value = (bernoulli_poly(j + 1, upper) - bernoulli_poly(j + 1, 0)) / (j + 1)
    assert value.denominator == 1
    return value.numerator


def _level_sum(n: int, chi: DirichletChar, p: int, k: int, W: int) -> int:
    """sum_{a=1}^{f p^k} chi(a) a^n mod p^W."""
    modulus = p**W
    m = chi.conductor * p
    top = min(n, W - 1)
    twisted = [0] * (top + 1)
    for c in range(1, m + 1):
        value = char_residue(chi, c, p, W).r
        if value == 0:
            continue
        power = pow(c, n - top, modulus)
        for j in range(top, -1, -1):
            twisted[j] = (twisted[j] + value * power) % modulus
            power = power * c % modulus
    upper = p ** (k - 1)
    total = 0
    for j in range(top + 1):
        if not twisted[j]:
            continue
        coefficient = comb(n, j) * pow(m, j, modulus) * (_power_sum(j, upper) % modulus)
        total = (total + coefficient * twisted[j]) % modulus
    return total


def _level_value(
    n: int, chi: DirichletChar, p: int, M: int, k: int, guard: int
) -> PadicInt:
    W = M + k + guard
    total = _level_sum(n, chi, p, k, W)
    if total == 0:
        return PadicInt(p, M, 0)
    v = int_valuation(total, p)
    if v < k:
        raise NonIntegralError(
            f"B_{{{n},{chi}}} is not {p}-integral", valuation=v - k
        )
    quotient = PadicInt(p, M, total // p**k)
    return quotient * pow(chi.conductor, -1, p**M)


def gen_bernoulli_padic(
    n: int,
    chi: DirichletChar,
    p: int,
    M: int,
    *,
    k_ceiling: int = DEFAULT_K_CEILING,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> PadicInt:
    """B_{n,chi} mod p^M from the power-sum limit.

    Starts at k = M + 2 and accepts when levels k and k + 1 agree mod p^M.
    Raises ``NonIntegralError`` (with the valuation) when B_{n,chi} is not
    p-integral and ``ConvergenceError`` past ``k_ceiling`` extra levels.
    """
    if n < 1:
        raise BernoulliError(f"Generalized Bernoulli index must be positive: n={n}")
    if chi.conductor % p == 0:
        raise BernoulliError(f"p={p} divides the conductor {chi.conductor}")
    start = M + 2
    previous = _level_value(n, chi, p, M, start, guard)
    for k in range(start + 1, start + k_ceiling + 1):
        current = _level_value(n, chi, p, M, k, guard)
        if current == previous:
            logger.debug(
                "B_{%s,%s} mod %s^%s converged at k=%s", n, chi, p, M, k
            )
            return current
        previous = current
    raise ConvergenceError(
        f"B_{{{n},{chi}}} mod {p}^{M} did not stabilize within {k_ceiling} levels"
    )


def gen_bernoulli_mod(
    n: int,
    chi: DirichletChar,
    p: int,
    M: int,
    *,
    exact_bound: int = DEFAULT_EXACT_BOUND,
    k_ceiling: int = DEFAULT_K_CEILING,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> PadicInt:
    """B_{n,chi} mod p^M, exact path up to ``exact_bound``, power sums beyond."""
    if chi.is_exact and n <= exact_bound:
        return PadicInt.from_rational(gen_bernoulli_exact(n, chi), p, M)
    logger.debug("B_{%s,%s} routed to the power-sum path (p=%s)", n, chi, p)
    return gen_bernoulli_padic(n, chi, p, M, k_ceiling=k_ceiling, guard=guard)


def l_value_mod(
    n: int,
    chi: DirichletChar,
    p: int,
    N: int,
    *,
    exact_bound: int = DEFAULT_EXACT_BOUND,
    k_ceiling: int = DEFAULT_K_CEILING,
    guard: int = DEFAULT_GUARD_DIGITS,
) -> PadicInt:
    """L(1-n; chi) = -B_{n,chi}/n reduced mod p^N.

    B_{n,chi} is taken mod p^(N + v_p(n)) so the division by n keeps N digits.
    """
    if chi.is_exact and n <= exact_bound:
        return PadicInt.from_rational(classical_L_value(n, chi), p, N)
    v = int_valuation(n, p)
    bernoulli = gen_bernoulli_padic(
        n, chi, p, N + v, k_ceiling=k_ceiling, guard=guard
    )
    if bernoulli.r % p**v != 0:
        raise NonIntegralError(
            f"L(1-{n}; {chi}) is not {p}-integral",
            valuation=bernoulli.valuation() - v,
        )
    unit_part = n // p**v
    return PadicInt(p, N, -(bernoulli.r // p**v)) * pow(unit_part, -1, p**N)


def zeta_ratio(
    characters,
    s: int,
    p: Optional[int] = None,
    N: Optional[int] = None,
    **routing,
) -> Fraction | PadicInt:
    """prod_{chi != 1} L(1-s; chi).

    Exact rational without ``p``; a residue mod p^N when ``p`` is given (the
    only option for tabulated characters or large s).
    """
    characters = [chi for chi in characters if not chi.is_trivial]
    if p is None:
        if any(not chi.is_exact for chi in characters):
            raise BernoulliError("Tabulated characters need a prime to embed values")
        return zeta_ratio_exact(characters, s)
    if N is None:
        raise BernoulliError("A precision N is required together with p")
    product = PadicInt(p, N, 1)
    for chi in characters:
        product = product * l_value_mod(s, chi, p, N, **routing)
    return product
