from collections import deque
from functools import lru_cache
from math import gcd
from typing import Dict, Optional

from sympy import factorint, kronecker_symbol, primitive_root, totient

from src.characters.models import (
    CharacterKind,
    DirichletChar,
    EmbeddedRootOfUnity,
    RootChoice,
)
from src.padic import PadicInt, teichmuller
from src.shared.exceptions import CharacterError, EmbeddingError


def is_fundamental_discriminant(d: int) -> bool:
    """True for discriminants of real quadratic fields (d > 1)."""
    if d <= 1:
        return False
    if d % 4 == 1:
        return _is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _is_squarefree(m)
    return False


def _is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def trivial_char() -> DirichletChar:
    return DirichletChar(
        conductor=1, order=1, exponents=(0,), kind=CharacterKind.TRIVIAL
    )


@lru_cache(maxsize=512)
def kronecker_char(d: int) -> DirichletChar:
    """The even quadratic character of Q(sqrt d), conductor d."""
    if not is_fundamental_discriminant(d):
        raise CharacterError(f"{d} is not a fundamental discriminant > 1")
    exponents = []
    for a in range(d):
        value = int(kronecker_symbol(d, a)) if a else 0
        exponents.append(None if value == 0 else (0 if value == 1 else 1))
    return DirichletChar(
        conductor=d,
        order=2,
        exponents=tuple(exponents),
        kind=CharacterKind.QUADRATIC,
        discriminant=d,
    )


def tabulated_char(
    conductor: int, order: int, generators: Dict[int, int]
) -> DirichletChar:
    """Character of (Z/f)^* fixed by the images chi(g) = zeta_m^e of generators.

    The images are propagated over the group; inconsistent images, a set that
    does not generate (Z/f)^*, or a character of smaller order are rejected.
    """
    f = conductor
    table: Dict[int, int] = {1 % f: 0}
    queue = deque([1 % f])
    while queue:
        x = queue.popleft()
        for g, e in generators.items():
            if gcd(g, f) != 1:
                raise CharacterError(f"Generator {g} is not a unit mod {f}")
            y = (x * g) % f
            value = (table[x] + e) % order
            if y not in table:
                table[y] = value
                queue.append(y)
            elif table[y] != value:
                raise CharacterError(
                    f"Generator images do not define a character mod {f}"
                )
    if len(table) != totient(f):
        raise CharacterError(f"Generators {sorted(generators)} do not span (Z/{f})^*")
    if gcd(order, *table.values()) != 1:
        raise CharacterError(f"Images generate a character of order < {order}")
    exponents = tuple(table.get(a) for a in range(f))
    kind = CharacterKind.TABULATED
    if order == 1:
        kind = CharacterKind.TRIVIAL
    return DirichletChar(conductor=f, order=order, exponents=exponents, kind=kind)


def cyclic_char(q: int, order: int) -> DirichletChar:
    """Character of prime conductor q sending the least primitive root to zeta_m."""
    if (q - 1) % order != 0:
        raise CharacterError(f"No character of order {order} mod {q}")
    return tabulated_char(q, order, {primitive_root(q): 1})


def eval_char(chi: DirichletChar, a: int) -> Optional[int]:
    """chi(a) exactly (1, -1, 0) for exact characters, else its exponent.

    For tabulated characters ``None`` stands for the value 0.
    """
    if chi.is_exact:
        return chi.exact_value(a)
    return chi.exponent(a)


def embedding_generator(p: int) -> int:
    """The least primitive root g mod p; every embedded root of unity is a
    Teichmüller power of it."""
    return int(primitive_root(p))


@lru_cache(maxsize=1024)
def primitive_root_of_unity(
    m: int, p: int, N: int, choice: RootChoice = RootChoice.CANONICAL
) -> EmbeddedRootOfUnity:
    """Teichmüller lift of g^((p-1)/m), g the least primitive root mod p.

    ``RootChoice.CONJUGATE`` gives the inverse root instead.
    """
    if (p - 1) % m != 0:
        raise EmbeddingError(f"No primitive {m}-th root of unity in Z_{p}")
    g = embedding_generator(p)
    exponent = ((p - 1) // m) * (choice.power % m)
    seed = PadicInt(p, N, pow(g, exponent, p))
    return EmbeddedRootOfUnity(order=m, xi=teichmuller(seed))


def char_residue(chi: DirichletChar, a: int, p: int, N: int) -> PadicInt:
    """chi(a) embedded in Z/p^N through the canonical roots of unity."""
    if chi.is_exact:
        return PadicInt(p, N, chi.exact_value(a))
    e = chi.exponent(a)
    if e is None:
        return PadicInt(p, N, 0)
    zeta = primitive_root_of_unity(chi.order, p, N).xi
    return zeta**e


def gauss_sum(
    chi: DirichletChar, p: int, N: int, choice: RootChoice = RootChoice.CANONICAL
) -> PadicInt:
    """tau(chi) = sum_{a=1}^{f} chi(a) xi^a over the chosen f-th root xi.

    The values chi(a) always use the canonical roots; changing xi to xi^c
    multiplies tau by conj(chi)(c).
    """
    f = chi.conductor
    if (p - 1) % f != 0:
        raise EmbeddingError(f"Conductor {f} does not divide p-1={p - 1}")
    xi = primitive_root_of_unity(f, p, N, choice).xi
    total = PadicInt(p, N, 0)
    for a in range(1, f + 1):
        total = total + char_residue(chi, a, p, N) * xi**a
    return total
