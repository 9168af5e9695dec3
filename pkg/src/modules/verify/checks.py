"""One function per claim: both sides of a congruence and their valuations.

Each check receives the grid point, a ``field_at(W)`` builder returning the
embedded field at working precision W, and the run context. Residues known
only mod p^k are lifted to W before subtracting, so a measured valuation is
exact up to W and never capped by the shorter side.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from src.bernoulli import gen_bernoulli_mod, zeta_ratio
from src.characters import DirichletChar, RootChoice, char_residue
from src.lfunctions import (
    Normalization,
    kubota_leopoldt_special,
    leopoldt_Lp,
    relative_zeta_p_at_1,
)
from src.modules.verify.enums import (
    ClaimId,
    EulerVariant,
    PairStatus,
    PPowerVariant,
)
from src.modules.verify.grid import GridPoint
from src.modules.verify.schemas import VariantResult
from src.padic import (
    PadicInt,
    fermat_quotient,
    higher_fermat_quotient,
    iwasawa_log,
)
from src.quadfield import EmbeddedField
from src.regulators import cnf_exact_check, cnf_lhs, padic_regulator, regulator_mod_pn
from src.shared.exceptions import NonIntegralError

logger = logging.getLogger(__name__)

FieldBuilder = Callable[[int], EmbeddedField]

DENOMINATOR_READING = (
    "CHK-C27 reads the denominator as zeta(1 - p^n (p - 1)), matching CHK-T26"
)


@dataclass(frozen=True)
class CheckContext:
    """Run-wide knobs shared by every check."""

    signs: Tuple[str, ...] = ("plus", "minus")
    euler_variants: Tuple[EulerVariant, ...] = tuple(EulerVariant)
    p_power_variants: Tuple[PPowerVariant, ...] = tuple(PPowerVariant)
    slack: int = 3
    precision: Optional[int] = None
    units_per_prime: int = 50
    seed: int = 0
    exact_bound: int = 400
    k_ceiling: int = 12
    guard: int = 2

    @property
    def routing(self) -> Dict[str, int]:
        return {
            "exact_bound": self.exact_bound,
            "k_ceiling": self.k_ceiling,
            "guard": self.guard,
        }

    def working_precision(self, required: int) -> int:
        W = max(required + self.slack, self.precision or 0)
        assert required < W
        return W


@dataclass
class Outcome:
    """What a check measured; the service turns it into a report."""

    required: int
    working_precision: int
    results: List[VariantResult] = field(default_factory=list)
    sides: Dict[str, Tuple[PadicInt, Optional[PadicInt]]] = field(default_factory=dict)
    status: PairStatus = PairStatus.ok
    detail: Optional[str] = None

    def add(
        self,
        variant: str,
        lhs: PadicInt,
        rhs: PadicInt,
        required: Optional[int] = None,
    ) -> None:
        required = self.required if required is None else required
        valuation = (lhs - rhs).valuation()
        self.results.append(
            VariantResult(
                variant=variant,
                valuation=valuation,
                required=required,
                passed=valuation >= required,
            )
        )
        self.sides[variant] = (lhs, rhs)

    def add_unit(self, variant: str, value: PadicInt) -> None:
        valuation = value.valuation()
        self.results.append(
            VariantResult(
                variant=variant, valuation=valuation, required=0, passed=valuation == 0
            )
        )
        self.sides[variant] = (value, None)

    def add_signed(
        self,
        ctx: "CheckContext",
        lhs: PadicInt,
        rhs: PadicInt,
        prefix: str = "",
        required: Optional[int] = None,
    ) -> None:
        for sign in ctx.signs:
            signed = rhs if sign == "plus" else -rhs
            self.add(f"{prefix}sign={sign}", lhs, signed, required)

    @property
    def selected(self) -> Optional[VariantResult]:
        """First passing variant in enumeration order, else the best one."""
        for result in self.results:
            if result.passed:
                return result
        if not self.results:
            return None
        return max(self.results, key=lambda r: r.valuation - r.required)


def _lift(z: PadicInt, W: int) -> PadicInt:
    return PadicInt(z.p, W, z.r)


def _conj_at(chi: DirichletChar, p: int, W: int) -> PadicInt:
    return char_residue(chi.conjugate(), p, p, W)


def euler_factor(
    variant: EulerVariant, characters: Iterable[DirichletChar], p: int, W: int
) -> PadicInt:
    factor = PadicInt(p, W, 1)
    for chi in characters:
        if variant == EulerVariant.plain:
            continue
        factor = factor * _conj_at(chi, p, W)
        if variant == EulerVariant.full:
            factor = factor / (1 - char_residue(chi, p, p, W) * p)
    return factor


def sample_units(p: int, W: int, count: int, seed: int) -> List[PadicInt]:
    """Pseudorandom units mod p^W from base-p digits, reproducible per (seed, p)."""
    rng = np.random.default_rng([seed, p])
    digits = rng.integers(0, p, size=(count, W))
    digits[:, 0] = rng.integers(1, p, size=count)
    units = []
    for row in digits:
        value = sum(int(digit) * p**i for i, digit in enumerate(row))
        units.append(PadicInt(p, W, value))
    return units


def _identity_units(
    point: GridPoint, field_at: Optional[FieldBuilder], W: int, ctx: CheckContext
) -> List[PadicInt]:
    if field_at is not None:
        return [z for row in field_at(W).units for z in row]
    return sample_units(point.p, W, ctx.units_per_prime, ctx.seed)


def _worst_identity(
    outcome: Outcome, pairs: Iterable[Tuple[PadicInt, PadicInt]]
) -> Outcome:
    worst = None
    for lhs, rhs in pairs:
        valuation = (lhs - rhs).valuation()
        if worst is None or valuation < worst[0]:
            worst = (valuation, lhs, rhs)
    if worst is not None:
        outcome.add("identity", worst[1], worst[2])
    return outcome


def check_p13(
    point: GridPoint, field_at: Optional[FieldBuilder], ctx: CheckContext
) -> Outcome:
    """log_p(z) = -p Q_p(z) mod p^2."""
    p = point.p
    W = ctx.working_precision(2)
    outcome = Outcome(required=2, working_precision=W)
    pairs = (
        (iwasawa_log(z), PadicInt(p, W, -p * fermat_quotient(z).r))
        for z in _identity_units(point, field_at, W, ctx)
    )
    return _worst_identity(outcome, pairs)


def check_l22(
    point: GridPoint, field_at: Optional[FieldBuilder], ctx: CheckContext
) -> Outcome:
    """-p Q_{p,n}(z) = log_p(z) mod p^(n+2)."""
    p, n = point.p, point.n
    W = ctx.working_precision(n + 2)
    outcome = Outcome(required=n + 2, working_precision=W)
    pairs = (
        (PadicInt(p, W, -p * higher_fermat_quotient(z, n).r), iwasawa_log(z))
        for z in _identity_units(point, field_at, W, ctx)
    )
    return _worst_identity(outcome, pairs)


def check_p23(point: GridPoint, field_at: FieldBuilder, ctx: CheckContext) -> Outcome:
    """R_p = (-p)^(g-1) R^(p,n) mod p^(n+g)."""
    p, n = point.p, point.n
    coarse = field_at(n + 2)
    required = n + coarse.g
    W = ctx.working_precision(required)
    F = field_at(W)
    outcome = Outcome(required=required, working_precision=W)
    lhs = padic_regulator(F.units, W)
    rhs = PadicInt(p, W, (-p) ** (F.g - 1) * regulator_mod_pn(F.units, n).r)
    outcome.add_signed(ctx, lhs, rhs)
    return outcome


def check_p11(point: GridPoint, field_at: FieldBuilder, ctx: CheckContext) -> Outcome:
    """L_p(chi) = conj(chi)(p) B_{p-1,chi} p / (p-1) mod p^2.

    Each sign variant keeps the worst character and the worst choice of xi in
    the defining sum, so it passes only when every choice satisfies it.
    """
    p = point.p
    W = ctx.working_precision(2)
    F = field_at(W)
    outcome = Outcome(required=2, working_precision=W)
    sides = []
    for chi in F.characters:
        bernoulli = gen_bernoulli_mod(p - 1, chi, p, W, **ctx.routing)
        rhs = _conj_at(chi, p, W) * bernoulli * p / (p - 1)
        for choice in RootChoice:
            sides.append((leopoldt_Lp(chi, p, W, choice).value, rhs))
    for sign in ctx.signs:
        worst = None
        for lhs, rhs in sides:
            rhs = rhs if sign == "plus" else -rhs
            valuation = (lhs - rhs).valuation()
            if worst is None or valuation < worst[0]:
                worst = (valuation, lhs, rhs)
        outcome.add(f"sign={sign}", worst[1], worst[2])
    return outcome


def _bernoulli_side(F: EmbeddedField, s: int, W: int, ctx: CheckContext) -> PadicInt:
    """prod over chi of L(1 - s; chi) mod p^W, i.e. zeta_K(1-s)/zeta(1-s)."""
    return zeta_ratio(F.characters, s, F.p, W, **ctx.routing)


def check_t15(point: GridPoint, field_at: FieldBuilder, ctx: CheckContext) -> Outcome:
    """2^(g-1) h R^(p) / sqrt d = E prod L(2-p; chi) mod p."""
    p = point.p
    W = ctx.working_precision(1)
    F = field_at(W)
    outcome = Outcome(required=1, working_precision=W)
    _, mod_p = cnf_lhs(F, 1)
    lhs = _lift(mod_p, W)
    base = _bernoulli_side(F, p - 1, W, ctx)
    for variant in ctx.euler_variants:
        rhs = euler_factor(variant, F.characters, p, W) * base
        outcome.add_signed(ctx, lhs, rhs, prefix=f"euler={variant.value},")
    return outcome


def check_t26(point: GridPoint, field_at: FieldBuilder, ctx: CheckContext) -> Outcome:
    """2^(g-1) h R^(p,n) / sqrt d = E zeta_K(1-s)/zeta(1-s) mod p^(n+1), s = p^n(p-1).

    ``without`` drops the p^(g-1) factor of the intermediate congruence: it
    compares (-p)^(g-1) times the left side with the right side mod p^(n+g).
    """
    p, n = point.p, point.n
    g = field_at(n + 2).g
    s = p**n * (p - 1)
    W = ctx.working_precision(n + g)
    F = field_at(W)
    outcome = Outcome(required=n + 1, working_precision=W)
    level, _ = cnf_lhs(F, n)
    lhs = _lift(level, W)
    base = _bernoulli_side(F, s, W, ctx)
    for power in ctx.p_power_variants:
        for variant in ctx.euler_variants:
            rhs = euler_factor(variant, F.characters, p, W) * base
            prefix = f"p-power={power.value},euler={variant.value},"
            if power == PPowerVariant.with_p:
                outcome.add_signed(ctx, lhs, rhs, prefix=prefix, required=n + 1)
            else:
                scaled = lhs * (-p) ** (g - 1)
                outcome.add_signed(ctx, scaled, rhs, prefix=prefix, required=n + g)
    return outcome


def check_p24(point: GridPoint, field_at: FieldBuilder, ctx: CheckContext) -> Outcome:
    """prod L_p(chi) against [p^(g-1)] E prod L_p(1 - p^n(p-1); chi) mod p^(n+1)."""
    p, n = point.p, point.n
    W = ctx.working_precision(n + 1)
    F = field_at(W)
    s = p**n * (p - 1)
    outcome = Outcome(required=n + 1, working_precision=W)
    lhs = PadicInt(p, W, 1)
    interpolated = PadicInt(p, W, 1)
    for chi in F.characters:
        lhs = lhs * leopoldt_Lp(chi, p, W).value
        interpolated = (
            interpolated * kubota_leopoldt_special(chi, s, p, W, **ctx.routing).value
        )
    for power in ctx.p_power_variants:
        scale = p ** (F.g - 1) if power == PPowerVariant.with_p else 1
        for variant in ctx.euler_variants:
            rhs = euler_factor(variant, F.characters, p, W) * interpolated * scale
            prefix = f"p-power={power.value},euler={variant.value},"
            outcome.add_signed(ctx, lhs, rhs, prefix=prefix)
    return outcome


def check_cnf(point: GridPoint, field_at: FieldBuilder, ctx: CheckContext) -> Outcome:
    """2^(g-1) h R_p / sqrt d = prod L_p(chi) mod p^N, N = --prec (default 3)."""
    required = ctx.precision or 3
    W = required + ctx.slack
    comparison = cnf_exact_check(field_at(W), required)
    outcome = Outcome(required=required, working_precision=W)
    outcome.add_signed(ctx, comparison.lhs, comparison.rhs)
    return outcome


def _regulator_hypothesis(F: EmbeddedField, outcome: Outcome) -> bool:
    """R_p(K) in p^(g-1) Z_p^*, measured."""
    regulator = padic_regulator(F.units, F.N)
    valuation = regulator.valuation()
    if valuation != F.g - 1:
        outcome.status = PairStatus.hypothesis_failed
        outcome.detail = f"v_p(R_p) = {regulator.valuation_text()}, expected {F.g - 1}"
        return False
    return True


def check_c27(point: GridPoint, field_at: FieldBuilder, ctx: CheckContext) -> Outcome:
    """p does not divide zeta_K(1-s) / zeta(1-s), s = p^n(p-1)."""
    p, n = point.p, point.n
    W = ctx.working_precision(0)
    F = field_at(W)
    outcome = Outcome(required=0, working_precision=W, detail=DENOMINATOR_READING)
    if not _regulator_hypothesis(F, outcome):
        return outcome
    outcome.add_unit("unit", _bernoulli_side(F, p**n * (p - 1), W, ctx))
    return outcome


def check_t29(point: GridPoint, field_at: FieldBuilder, ctx: CheckContext) -> Outcome:
    """|zeta_{K/Q,p}(1)|_p = 1 under each reading of L_p(1; chi)."""
    p = point.p
    W = ctx.working_precision(0)
    F = field_at(W)
    outcome = Outcome(required=0, working_precision=W)
    if not _regulator_hypothesis(F, outcome):
        return outcome
    for normalization in Normalization:
        variant = f"normalization={normalization.value}"
        try:
            value = relative_zeta_p_at_1(F.characters, p, W, normalization)
        except NonIntegralError as exc:
            outcome.results.append(
                VariantResult(
                    variant=variant, valuation=exc.valuation, required=0, passed=False
                )
            )
            continue
        outcome.add_unit(variant, value)
    return outcome


CHECKS: Dict[ClaimId, Callable[..., Outcome]] = {
    ClaimId.p11: check_p11,
    ClaimId.p13: check_p13,
    ClaimId.l22: check_l22,
    ClaimId.p23: check_p23,
    ClaimId.t15: check_t15,
    ClaimId.cnf: check_cnf,
    ClaimId.p24: check_p24,
    ClaimId.t26: check_t26,
    ClaimId.c27: check_c27,
    ClaimId.t29: check_t29,
}
