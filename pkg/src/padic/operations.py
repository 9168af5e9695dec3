"""Operations on truncated p-adic integers.

Teichmüller lifts, the Iwasawa logarithm and the Fermat-quotient operators
built on it, plus Hensel square roots. Every function is pure and returns a
value whose precision follows a fixed rule (documented per function).
"""

import math

from sympy.ntheory import sqrt_mod

from src.padic.models import PadicInt, UnitDecomposition, int_valuation
from src.shared.exceptions import (
    NotAResidueError,
    NotAUnitError,
    PrecisionError,
    PrimeMismatchError,
)


def padic_add(a: PadicInt, b: PadicInt) -> PadicInt:
    _same_prime(a, b)
    return a + b


def padic_mul(a: PadicInt, b: PadicInt) -> PadicInt:
    _same_prime(a, b)
    return a * b


def padic_inv(a: PadicInt) -> PadicInt:
    """Inverse of a unit at the same precision."""
    return a.inverse()


def _same_prime(a: PadicInt, b: PadicInt) -> None:
    if a.p != b.p:
        raise PrimeMismatchError(a.p, b.p)


def _require_unit(z: PadicInt) -> None:
    if not z.is_unit:
        raise NotAUnitError(f"{z} is not a {z.p}-adic unit")


def guard_digits(N: int, p: int) -> int:
    """ceil(log_p N) + 2 extra digits, enough to absorb divisions by k with p | k."""
    digits = 0
    while p**digits < N:
        digits += 1
    return digits + 2


def teichmuller(z: PadicInt) -> PadicInt:
    """omega(z): the (p-1)-th root of unity congruent to z mod p.

    Iterates ``z -> z^p``; after k steps the value is stable mod p^(k+1).
    """
    _require_unit(z)
    modulus = z.modulus
    value = z.r
    for _ in range(z.N):
        value = pow(value, z.p, modulus)
    return PadicInt(z.p, z.N, value)


def unit_decompose(z: PadicInt) -> UnitDecomposition:
    """z = omega(z) * <z>, <z> = 1 + p * ztilde.

    ``ztilde`` is known to precision N - 1 (``None`` when N = 1).
    """
    _require_unit(z)
    omega = teichmuller(z)
    principal = z * omega.inverse()
    ztilde = None
    if z.N >= 2:
        ztilde = PadicInt(z.p, z.N - 1, (principal.r - 1) // z.p)
    return UnitDecomposition(omega=omega, principal=principal, ztilde=ztilde)


def iwasawa_log(z: PadicInt) -> PadicInt:
    """log_p(z) mod p^N, normalized to vanish on roots of unity.

    Sums ``sum_k (-1)^(k+1) (p t)^k / k`` for ``<z> = 1 + p t``. Each term is
    taken as ``p^(k - v_p(k)) * t^k / k'`` with ``k = p^v_p(k) * k'`` over the
    guarded modulus p^(N+g), then reduced to precision N.
    """
    _require_unit(z)
    p, N = z.p, z.N
    g = guard_digits(N, p)
    work = p ** (N + g)
    principal = unit_decompose(z).principal
    t = (principal.r - 1) // p
    total = 0
    for k in range(1, N + g + 1):
        v = int_valuation(k, p)
        shift = k - v
        if shift >= N + g:
            continue
        unit_part = k // p**v
        term = p**shift * pow(t, k, work) * pow(unit_part, -1, work)
        total += term if k % 2 == 1 else -term
    return PadicInt(p, N, total % work)


def fermat_quotient(z: PadicInt) -> PadicInt:
    """Q_p(z): ((z^(p-1) mod p^2) - 1) / p, a residue mod p."""
    _require_unit(z)
    if z.N < 2:
        raise PrecisionError(f"Fermat quotient needs precision >= 2: {z}")
    p = z.p
    power = pow(z.r, p - 1, p * p)
    return PadicInt(p, 1, (power - 1) // p)


def higher_fermat_quotient(z: PadicInt, n: int) -> PadicInt:
    """Q_{p,n}(z): -(1/p) log_p(1 + p ztilde) truncated mod p^(n+1).

    Satisfies ``-p Q_{p,n}(z) == log_p(z) mod p^(n+2)`` exactly.
    """
    _require_unit(z)
    if n < 1:
        raise PrecisionError(f"Level must be positive: n={n}")
    if z.N < n + 2:
        raise PrecisionError(
            f"Q_{{p,{n}}} needs precision >= {n + 2}, got {z.N} (p={z.p})"
        )
    log = iwasawa_log(z.reduce(n + 2))
    return PadicInt(z.p, n + 1, -(log.r // z.p))


def hensel_sqrt(d: int, p: int, N: int) -> PadicInt:
    """Square root of d in Z/p^N by Newton lifting.

    Canonical choice: the root whose residue mod p lies in [1, (p-1)/2].
    """
    if d % p == 0:
        raise NotAUnitError(f"{p} divides {d}: no unit square root")
    roots = sqrt_mod(d % p, p, all_roots=True)
    if not roots:
        raise NotAResidueError(f"{d} is not a square mod {p}")
    root = min(r for r in roots if 1 <= r <= (p - 1) // 2)
    modulus = p**N
    for _ in range(max(1, math.ceil(math.log2(N)) + 1)):
        root = (root - (root * root - d) * pow(2 * root, -1, modulus)) % modulus
    result = PadicInt(p, N, root)
    assert (result.r * result.r - d) % modulus == 0
    return result
