from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from src.padic import PadicInt

SIGNS = ("plus", "minus")


@dataclass(frozen=True)
class RegulatorBundle:
    """The three regulators of one embedded unit matrix."""

    g: int
    n: int
    Rp: PadicInt
    Rpn: PadicInt
    Rp_mod_p: PadicInt
    sign_choice: str = "canonical"


@dataclass(frozen=True)
class CongruenceComparison:
    """lhs against +rhs and -rhs, with v_p of each difference.

    A valuation equal to the working precision reads ">= precision".
    """

    lhs: PadicInt
    rhs: PadicInt
    required: int
    valuations: Dict[str, int] = field(default_factory=dict)

    @classmethod
    def compare(
        cls,
        lhs: PadicInt,
        rhs: PadicInt,
        required: int,
        signs: Tuple[str, ...] = SIGNS,
    ) -> "CongruenceComparison":
        valuations = {}
        for sign in signs:
            difference = lhs - rhs if sign == "plus" else lhs + rhs
            valuations[sign] = difference.valuation()
        return cls(lhs=lhs, rhs=rhs, required=required, valuations=valuations)

    @property
    def best_sign(self) -> Optional[str]:
        if not self.valuations:
            return None
        return max(
            self.valuations, key=lambda sign: (self.valuations[sign], sign == "plus")
        )

    @property
    def best_valuation(self) -> int:
        return max(self.valuations.values(), default=0)

    @property
    def passed(self) -> bool:
        return self.best_valuation >= self.required
