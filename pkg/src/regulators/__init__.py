from src.regulators.models import SIGNS, CongruenceComparison, RegulatorBundle
from src.regulators.operations import (
    cnf_exact_check,
    cnf_exact_lhs,
    cnf_lhs,
    padic_regulator,
    regulator_bundle,
    regulator_mod_p,
    regulator_mod_pn,
)

__all__ = [
    "SIGNS",
    "CongruenceComparison",
    "RegulatorBundle",
    "cnf_exact_check",
    "cnf_exact_lhs",
    "cnf_lhs",
    "padic_regulator",
    "regulator_bundle",
    "regulator_mod_p",
    "regulator_mod_pn",
]
