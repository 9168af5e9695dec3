from dataclasses import dataclass
from enum import Enum

from src.characters import DirichletChar, RootChoice
from src.padic import PadicInt


class Provenance(str, Enum):
    DEFINING_SUM = "defining-sum"
    BERNOULLI_INTERPOLATION = "bernoulli-interpolation"


@dataclass(frozen=True)
class LpValue:
    """A p-adic L-value together with how it was obtained."""

    chi: DirichletChar
    p: int
    value: PadicInt
    provenance: Provenance
    choice: RootChoice = RootChoice.CANONICAL

    def __str__(self) -> str:
        return f"{self.value} [{self.provenance.value}]"


class Normalization(str, Enum):
    """How L_p(1; chi) is read off the defining sum.

    ``LEOPOLDT`` identifies L_p(1; chi) with the sum itself; ``EULER`` applies
    the Euler factor (1 - chi(p)/p) that removes the p-part of the pole.
    """

    LEOPOLDT = "leopoldt"
    EULER = "euler"
