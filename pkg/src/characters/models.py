from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Optional, Tuple

from sympy import primefactors

from src.padic import PadicInt
from src.shared.exceptions import CharacterError


class RootChoice(str, Enum):
    """Which primitive f-th root of unity xi a Gauss sum is taken over.

    ``CANONICAL`` is the Teichmüller lift of g^((p-1)/f) for the least
    primitive root g mod p; ``CONJUGATE`` is its inverse.
    """

    CANONICAL = "canonical"
    CONJUGATE = "conjugate"

    @property
    def power(self) -> int:
        return 1 if self == RootChoice.CANONICAL else -1


class CharacterKind(str, Enum):
    """How a character's values are known.

    ``TRIVIAL`` and ``QUADRATIC`` characters take exact values 1, -1, 0.
    ``TABULATED`` characters take values in the m-th roots of unity and are
    only evaluated after embedding those roots in Z_p.
    """

    TRIVIAL = "trivial"
    QUADRATIC = "quadratic"
    TABULATED = "tabulated"


@dataclass(frozen=True)
class DirichletChar:
    """A primitive Dirichlet character of conductor ``conductor``.

    ``exponents[a % f]`` is ``e`` with chi(a) = zeta_m^e, or ``None`` when
    gcd(a, f) > 1. Primitivity and multiplicativity are checked on creation.
    """

    conductor: int
    order: int
    exponents: Tuple[Optional[int], ...]
    kind: CharacterKind
    discriminant: Optional[int] = None

    def __post_init__(self):
        f = self.conductor
        if f < 1:
            raise CharacterError(f"Conductor must be positive: f={f}")
        if len(self.exponents) != f:
            raise CharacterError(
                f"Value table has {len(self.exponents)} entries, expected {f}"
            )
        if self.order < 1:
            raise CharacterError(f"Order must be positive: m={self.order}")
        for a, e in enumerate(self.exponents):
            coprime = gcd(a, f) == 1
            if coprime and e is None:
                raise CharacterError(f"Missing value at a={a} (f={f})")
            if not coprime and e is not None:
                raise CharacterError(f"chi({a}) must vanish: gcd({a}, {f}) > 1")
            if e is not None and not 0 <= e < self.order:
                raise CharacterError(f"Exponent {e} out of range for order {self.order}")
        parity = self.parity_exponent
        if parity != 0 and 2 * parity != self.order:
            raise CharacterError(f"chi(-1) must be +-1 (f={f})")
        if not self._is_primitive():
            raise CharacterError(f"Character of modulus {f} is not primitive")

    @property
    def is_trivial(self) -> bool:
        return self.conductor == 1

    @property
    def is_exact(self) -> bool:
        """True when every value is exactly 1, -1 or 0."""
        return self.order <= 2

    @property
    def parity_exponent(self) -> int:
        return self.exponents[(self.conductor - 1) % self.conductor]

    @property
    def parity(self) -> int:
        """chi(-1) as +1 / -1."""
        return 1 if self.parity_exponent == 0 else -1

    @property
    def is_even(self) -> bool:
        return self.parity == 1

    def exponent(self, a: int) -> Optional[int]:
        return self.exponents[a % self.conductor]

    def exact_value(self, a: int) -> int:
        """chi(a) in {1, -1, 0}; only for exact characters."""
        if not self.is_exact:
            raise CharacterError(
                f"Character of order {self.order} has no exact integer values"
            )
        e = self.exponent(a)
        if e is None:
            return 0
        return 1 if e == 0 else -1

    def conjugate(self) -> "DirichletChar":
        if self.is_exact:
            return self
        return DirichletChar(
            conductor=self.conductor,
            order=self.order,
            exponents=tuple(
                None if e is None else (-e) % self.order for e in self.exponents
            ),
            kind=self.kind,
        )

    def _is_primitive(self) -> bool:
        f = self.conductor
        for q in primefactors(f):
            sub = f // q
            # Induced from modulus f/q iff trivial on the kernel a == 1 mod f/q.
            if all(
                self.exponents[a] == 0
                for a in range(1, f, sub)
                if gcd(a, f) == 1
            ):
                return False
        return True

    def __str__(self) -> str:
        if self.kind == CharacterKind.QUADRATIC:
            return f"chi_{self.discriminant}"
        if self.kind == CharacterKind.TRIVIAL:
            return "chi_1"
        return f"chi[f={self.conductor},m={self.order}]"


@dataclass(frozen=True)
class EmbeddedRootOfUnity:
    """A primitive m-th root of unity realized in Z/p^N."""

    order: int
    xi: PadicInt

    def __post_init__(self):
        p, m = self.xi.p, self.order
        if (p - 1) % m != 0:
            raise CharacterError(f"m={m} does not divide p-1={p - 1}")
        if (self.xi**m).r != 1:
            raise CharacterError(f"{self.xi} is not an {m}-th root of unity")
        for q in primefactors(m):
            if pow(self.xi.r, m // q, p) == 1:
                raise CharacterError(f"{self.xi} is not primitive of order {m}")
