from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Tuple

from src.characters import DirichletChar
from src.padic import PadicInt
from src.shared.exceptions import FieldDataError, PrecisionError


class SplitType(str, Enum):
    """Behaviour of a rational prime p > 3 in Q(sqrt d)."""

    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class QuadFieldData:
    """Invariants of the real quadratic field Q(sqrt m).

    The fundamental unit is eps = (x + y sqrt d) / 2 with x^2 - d y^2 = 4 norm.
    """

    m: int
    d: int
    x: int
    y: int
    norm: int
    h: int
    hplus: int

    def __post_init__(self):
        if self.x * self.x - self.d * self.y * self.y != 4 * self.norm:
            raise FieldDataError(
                f"(x, y) = ({self.x}, {self.y}) is not a unit of norm {self.norm}"
            )
        if (self.x - self.y * self.d) % 2 != 0:
            raise FieldDataError(f"(x + y sqrt {self.d})/2 is not an integer")
        expected = self.h if self.norm == -1 else 2 * self.h
        if self.hplus != expected:
            raise FieldDataError(
                f"Narrow class number {self.hplus} inconsistent with h={self.h}"
            )

    @property
    def g(self) -> int:
        return 2

    @property
    def eps(self) -> Tuple[int, int]:
        return self.x, self.y

    def __str__(self) -> str:
        return f"Q(sqrt {self.m})"


@dataclass(frozen=True)
class EmbeddedField:
    """A real abelian field seen at a prime p through a fixed embedding.

    ``units[j][k]`` is sigma_j(eps_k) mod p^N; ``characters`` are the
    nontrivial characters of Gal(K/Q) (empty when unknown).
    """

    label: str
    g: int
    d: int
    h: int
    p: int
    N: int
    sqrt_d: PadicInt
    units: Tuple[Tuple[PadicInt, ...], ...]
    characters: Tuple[DirichletChar, ...] = field(default_factory=tuple)
    orientation: str = "canonical"

    def __post_init__(self):
        size = self.g - 1
        if len(self.units) != size or any(len(row) != size for row in self.units):
            raise FieldDataError(
                f"Unit matrix must be {size}x{size} for g={self.g}", field="units"
            )
        for row in self.units:
            for entry in row:
                if entry.p != self.p or not entry.is_unit:
                    raise FieldDataError(
                        f"Embedded unit {entry} is not a {self.p}-adic unit",
                        field="units",
                    )
        if (self.sqrt_d * self.sqrt_d).r != self.d % self.sqrt_d.modulus:
            raise FieldDataError(
                f"sqrt_d = {self.sqrt_d} does not square to {self.d}", field="sqrt_d"
            )

    def reduce(self, N: int) -> "EmbeddedField":
        """The same field with every residue truncated to precision N."""
        if N > self.N:
            raise PrecisionError(
                f"{self.label} is known mod {self.p}^{self.N}, {N} digits requested"
            )
        return replace(
            self,
            N=N,
            sqrt_d=self.sqrt_d.reduce(N),
            units=tuple(tuple(z.reduce(N) for z in row) for row in self.units),
        )
