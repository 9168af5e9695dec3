from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import isprime

from src.shared.exceptions import (
    NonIntegralError,
    NotAUnitError,
    PadicError,
    PrecisionError,
    PrimeMismatchError,
)


@lru_cache(maxsize=256)
def _check_prime(p: int) -> None:
    if p <= 3 or not isprime(p):
        raise PadicError(f"p must be a prime > 3: p={p}")


@dataclass(frozen=True)
class PadicInt:
    """A p-adic integer known modulo p^N.

    ``r`` is always the canonical residue in ``[0, p^N)``. Binary operations
    return a value at the smaller of the two precisions. Plain ``int`` operands
    are treated as exact.
    """

    p: int
    N: int
    r: int

    def __post_init__(self):
        _check_prime(self.p)
        if self.N < 1:
            raise PrecisionError(f"Precision must be positive: N={self.N}")
        object.__setattr__(self, "r", self.r % self.p**self.N)

    @property
    def modulus(self) -> int:
        return self.p**self.N

    @property
    def is_unit(self) -> bool:
        return self.r % self.p != 0

    @property
    def is_zero(self) -> bool:
        """True when the value is 0 mod p^N (its valuation is only ``>= N``)."""
        return self.r == 0

    def valuation(self) -> int:
        """v_p of the residue; returns ``N`` when the residue is 0 (read ">= N")."""
        if self.r == 0:
            return self.N
        return int_valuation(self.r, self.p)

    def valuation_text(self) -> str:
        if self.r == 0:
            return f">={self.N}"
        return str(self.valuation())

    def reduce(self, N: int) -> "PadicInt":
        """Truncates to precision ``N`` (never raises precision)."""
        if N > self.N:
            raise PrecisionError(
                f"Cannot raise precision from {self.N} to {N} (p={self.p})"
            )
        return PadicInt(self.p, N, self.r)

    def _coerce(self, other: Union["PadicInt", int]) -> tuple[int, int]:
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise PrimeMismatchError(self.p, other.p)
            return other.r, min(self.N, other.N)
        if isinstance(other, int):
            return other, self.N
        return NotImplemented

    def __add__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        value, N = coerced
        return PadicInt(self.p, N, self.r + value)

    __radd__ = __add__

    def __sub__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        value, N = coerced
        return PadicInt(self.p, N, self.r - value)

    def __rsub__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        value, N = coerced
        return PadicInt(self.p, N, value - self.r)

    def __mul__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        value, N = coerced
        return PadicInt(self.p, N, self.r * value)

    __rmul__ = __mul__

    def __neg__(self) -> "PadicInt":
        return PadicInt(self.p, self.N, -self.r)

    def __pow__(self, exponent: int) -> "PadicInt":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PadicInt(self.p, self.N, pow(self.r, exponent, self.modulus))

    def inverse(self) -> "PadicInt":
        if not self.is_unit:
            raise NotAUnitError(f"{self} is not a unit")
        return PadicInt(self.p, self.N, pow(self.r, -1, self.modulus))

    def __truediv__(self, other):
        if isinstance(other, int):
            other = PadicInt(self.p, self.N, other)
        if not isinstance(other, PadicInt):
            return NotImplemented
        return self * other.inverse()

    def __str__(self) -> str:
        return f"{self.r} mod {self.p}^{self.N}"

    @classmethod
    def from_rational(cls, value: Fraction | int, p: int, N: int) -> "PadicInt":
        """Image of a p-integral rational in Z/p^N."""
        value = Fraction(value)
        if value.denominator % p == 0:
            raise NonIntegralError(
                f"{value} is not {p}-integral",
                valuation=rational_valuation(value, p),
            )
        modulus = p**N
        return cls(p, N, value.numerator * pow(value.denominator, -1, modulus))


@dataclass(frozen=True)
class UnitDecomposition:
    """z = omega * principal, with principal = 1 + p * ztilde."""

    omega: PadicInt
    principal: PadicInt
    ztilde: PadicInt | None


def int_valuation(n: int, p: int) -> int:
    """v_p of a nonzero integer."""
    if n == 0:
        raise PadicError("v_p(0) is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(value: Fraction | int, p: int) -> int:
    """v_p of a nonzero rational."""
    value = Fraction(value)
    return int_valuation(value.numerator, p) - int_valuation(value.denominator, p)
