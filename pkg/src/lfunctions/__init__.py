from src.lfunctions.models import LpValue, Normalization, Provenance
from src.lfunctions.operations import (
    kubota_leopoldt_special,
    leopoldt_Lp,
    relative_zeta_p_at_1,
)

__all__ = [
    "LpValue",
    "Normalization",
    "Provenance",
    "kubota_leopoldt_special",
    "leopoldt_Lp",
    "relative_zeta_p_at_1",
]
