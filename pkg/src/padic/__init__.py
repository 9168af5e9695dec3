"""Truncated p-adic integers and the Fermat-quotient operators.

No framework dependencies: frozen dataclasses and modular arithmetic.
"""

from src.padic.models import (
    PadicInt,
    UnitDecomposition,
    int_valuation,
    rational_valuation,
)
from src.padic.operations import (
    fermat_quotient,
    guard_digits,
    hensel_sqrt,
    higher_fermat_quotient,
    iwasawa_log,
    padic_add,
    padic_inv,
    padic_mul,
    teichmuller,
    unit_decompose,
)

__all__ = [
    "PadicInt",
    "UnitDecomposition",
    "fermat_quotient",
    "guard_digits",
    "hensel_sqrt",
    "higher_fermat_quotient",
    "int_valuation",
    "iwasawa_log",
    "padic_add",
    "padic_inv",
    "padic_mul",
    "rational_valuation",
    "teichmuller",
    "unit_decompose",
]
