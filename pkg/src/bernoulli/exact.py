"""Exact rational Bernoulli numbers, polynomials and generalized numbers.

Convention: B_1 = -1/2 throughout.
"""

import logging
import threading
from fractions import Fraction
from math import comb
from typing import Iterable, List

from src.characters import DirichletChar
from src.shared.exceptions import BernoulliError

logger = logging.getLogger(__name__)

_TABLE: List[Fraction] = [Fraction(1)]
_TABLE_LOCK = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """B_n from the recurrence sum_{k<=n} C(n+1, k) B_k = 0.

    Values are cached; the cache only ever grows with the same values, so
    concurrent readers see the same numbers as a fresh computation.
    """
    if n < 0:
        raise BernoulliError(f"Bernoulli index must be nonnegative: n={n}")
    if n < len(_TABLE):
        return _TABLE[n]
    with _TABLE_LOCK:
        while len(_TABLE) <= n:
            m = len(_TABLE)
            if m >= 3 and m % 2 == 1:
                _TABLE.append(Fraction(0))
                continue
            total = sum(
                (comb(m + 1, k) * _TABLE[k] for k in range(m) if _TABLE[k]),
                Fraction(0),
            )
            _TABLE.append(-total / (m + 1))
    return _TABLE[n]


def bernoulli_poly(n: int, x: Fraction | int) -> Fraction:
    """B_n(x) = sum_k C(n, k) B_k x^(n-k)."""
    x = Fraction(x)
    return sum(
        (comb(n, k) * bernoulli_number(k) * x ** (n - k) for k in range(n + 1)),
        Fraction(0),
    )


def char_power_sums(chi: DirichletChar, top: int) -> List[int]:
    """[S_0, ..., S_top] with S_j = sum_{a=1}^{f} chi(a) a^j (exact integers)."""
    f = chi.conductor
    sums = [0] * (top + 1)
    for a in range(1, f + 1):
        value = chi.exact_value(a)
        if value == 0:
            continue
        power = 1
        for j in range(top + 1):
            sums[j] += value * power
            power *= a
    return sums


def gen_bernoulli_exact(n: int, chi: DirichletChar) -> Fraction:
    """B_{n,chi} = f^(n-1) sum_a chi(a) B_n(a/f), expanded as
    sum_k C(n, k) B_k f^(k-1) S_{n-k}.
    """
    if n < 1:
        raise BernoulliError(f"Generalized Bernoulli index must be positive: n={n}")
    if not chi.is_exact:
        raise BernoulliError(
            f"{chi} has non-exact values; use the p-adic power-sum algorithm"
        )
    if chi.is_trivial:
        return bernoulli_number(n)
    if chi.parity != (-1) ** n:
        return Fraction(0)
    f = chi.conductor
    sums = char_power_sums(chi, n)
    total = Fraction(0)
    for k in range(n + 1):
        b = bernoulli_number(k)
        if b and sums[n - k]:
            total += comb(n, k) * b * Fraction(f) ** (k - 1) * sums[n - k]
    return total


def classical_L_value(n: int, chi: DirichletChar) -> Fraction:
    """L(1-n; chi) = -B_{n,chi} / n."""
    if n < 1:
        raise BernoulliError(f"L(1-n) needs n >= 1: n={n}")
    return -gen_bernoulli_exact(n, chi) / n


def zeta_ratio_exact(characters: Iterable[DirichletChar], s: int) -> Fraction:
    """prod over nontrivial chi of L(1-s; chi), i.e. zeta_K(1-s) / zeta(1-s)."""
    product = Fraction(1)
    for chi in characters:
        if chi.is_trivial:
            continue
        product *= classical_L_value(s, chi)
    return product
