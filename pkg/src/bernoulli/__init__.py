"""Bernoulli numbers: exact rationals and a p-adic power-sum algorithm.

The two B_{n,chi} algorithms are independent and serve as each other's oracle.
"""

from src.bernoulli.exact import (
    bernoulli_number,
    bernoulli_poly,
    char_power_sums,
    classical_L_value,
    gen_bernoulli_exact,
    zeta_ratio_exact,
)
from src.bernoulli.power_sums import (
    gen_bernoulli_mod,
    gen_bernoulli_padic,
    l_value_mod,
    zeta_ratio,
)

__all__ = [
    "bernoulli_number",
    "bernoulli_poly",
    "char_power_sums",
    "classical_L_value",
    "gen_bernoulli_exact",
    "gen_bernoulli_mod",
    "gen_bernoulli_padic",
    "l_value_mod",
    "zeta_ratio",
    "zeta_ratio_exact",
]
