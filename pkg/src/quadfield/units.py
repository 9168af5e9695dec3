"""Fundamental discriminants and fundamental units of real quadratic fields."""

import logging
from math import isqrt
from typing import Tuple

from sympy import factorint

from src.padic import PadicInt, hensel_sqrt
from src.quadfield.models import QuadFieldData, SplitType
from src.shared.exceptions import FieldDataError, NotAResidueError, OutOfScopeError

logger = logging.getLogger(__name__)


def fundamental_discriminant(m: int) -> int:
    """Discriminant of Q(sqrt m): m if m = 1 mod 4, else 4m."""
    if m <= 1:
        raise FieldDataError(f"m must be > 1: m={m}", field="m")
    if any(e > 1 for e in factorint(m).values()):
        raise FieldDataError(f"m={m} is not squarefree", field="m")
    return m if m % 4 == 1 else 4 * m


def radicand(d: int) -> int:
    """The squarefree m with fundamental discriminant d."""
    return d if d % 4 == 1 else d // 4


def fundamental_unit(d: int) -> Tuple[int, int, int]:
    """(x, y, norm) with eps = (x + y sqrt d)/2 the fundamental unit.

    Walks the continued fraction of theta = (s + sqrt d)/2, s = d mod 2,
    whose complete quotients are (P + sqrt d)/Q. A convergent p/q of theta
    gives x = 2p - s q, y = q; the first one with x^2 - d y^2 = +-4 is eps.
    """
    root = isqrt(d)
    if root * root == d:
        raise FieldDataError(f"d={d} is a perfect square", field="d")
    s = d % 2
    P, Q = s, 2
    p_prev, p_cur = 0, 1
    q_prev, q_cur = 1, 0
    while True:
        a = (P + root) // Q
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        x, y = 2 * p_cur - s * q_cur, q_cur
        t = x * x - d * y * y
        if t in (4, -4):
            return x, y, t // 4
        P = a * Q - P
        Q = (d - P * P) // Q


def fundamental_unit_by_search(d: int, y_limit: int = 10**6) -> Tuple[int, int, int]:
    """Ascending scan over y for x^2 = d y^2 -+ 4. Slow; used as an oracle."""
    for y in range(1, y_limit + 1):
        for norm in (-1, 1):
            x2 = d * y * y + 4 * norm
            x = isqrt(x2)
            if x > 0 and x * x == x2:
                return x, y, norm
    raise FieldDataError(f"No unit of Q(sqrt {d}) with y <= {y_limit}")


def splitting_type(d: int, p: int) -> SplitType:
    if d % p == 0 or p == 2:
        return SplitType.RAMIFIED
    if pow(d % p, (p - 1) // 2, p) == 1:
        return SplitType.SPLIT
    return SplitType.INERT


def embed_unit(F: QuadFieldData, p: int, N: int) -> Tuple[PadicInt, PadicInt]:
    """(z, z') = ((x + y r)/2, (x - y r)/2) mod p^N, r the canonical sqrt of d."""
    if (2 * F.d) % p == 0:
        raise OutOfScopeError(
            f"p={p} is ramified in {F}", status=f"skipped-{SplitType.RAMIFIED.value}"
        )
    try:
        r = hensel_sqrt(F.d, p, N)
    except NotAResidueError as exc:
        raise OutOfScopeError(
            f"p={p} is inert in {F}", status=f"skipped-{SplitType.INERT.value}"
        ) from exc
    half = PadicInt(p, N, 2).inverse()
    z = (r * F.y + F.x) * half
    z_conj = (-(r * F.y) + F.x) * half
    assert (z * z_conj).r == F.norm % z.modulus
    return z, z_conj
