"""Harness contracts: check specs, reports and the verify config file."""

from typing import Dict, List, Optional

from pydantic import Field, field_validator, model_validator

from src.modules.verify.enums import (
    ClaimId,
    EulerVariant,
    PairStatus,
    PPowerVariant,
    ReportFormat,
    SignPolicy,
)
from src.padic import PadicInt
from src.quadfield import FieldDocument
from src.shared.schemas import FrozenModel


class Residue(FrozenModel):
    """A residue ``value`` mod p^precision."""

    value: int = Field(..., ge=0)
    p: int
    precision: int = Field(..., ge=1)

    @classmethod
    def from_padic(cls, z: PadicInt) -> "Residue":
        return cls(value=z.r, p=z.p, precision=z.N)

    def __str__(self) -> str:
        return f"{self.value} mod {self.p}^{self.precision}"


class CheckSpec(FrozenModel):
    claim: ClaimId
    d: List[int] = Field(default_factory=list)
    p: List[int] = Field(default_factory=list)
    n: List[int] = Field(default_factory=lambda: [1])
    precision: Optional[int] = Field(
        None, ge=1, description="Floor for the working precision (CHK-CNF: modulus)"
    )
    sign_policy: SignPolicy = SignPolicy.either
    euler_variants: List[EulerVariant] = Field(
        default_factory=lambda: list(EulerVariant)
    )
    p_power_variants: List[PPowerVariant] = Field(
        default_factory=lambda: list(PPowerVariant)
    )
    fields: List[FieldDocument] = Field(
        default_factory=list, description="External field documents"
    )

    @field_validator("n")
    @classmethod
    def _positive_levels(cls, n: List[int]) -> List[int]:
        if any(level < 1 for level in n):
            raise ValueError("levels n must be >= 1")
        return n

    @model_validator(mode="after")
    def _variants_enabled(self) -> "CheckSpec":
        if not self.euler_variants or not self.p_power_variants:
            raise ValueError("at least one variant of each kind must be enabled")
        return self


class VariantResult(FrozenModel):
    """One enabled variant: v_p(lhs - rhs) (or v_p(value)) against its target.

    For unit claims ``required`` is 0 and ``passed`` means the valuation is 0.
    """

    variant: str
    valuation: int
    required: int
    passed: bool


class EmbeddingRecord(FrozenModel):
    """The embedding a report was measured under.

    Roots of unity are xi_m = omega(g)^((p-1)/m) for the generator g.
    ``orientation`` is the unit orientation, ``None`` for claims on sampled
    units.
    """

    orientation: Optional[str] = None
    generator: Optional[int] = Field(None, description="Least primitive root mod p")

    def __str__(self) -> str:
        generator = f"g={self.generator}"
        if self.orientation is None:
            return generator
        return f"{self.orientation}, {generator}"


class CongruenceReport(FrozenModel):
    claim: ClaimId
    label: str
    d: Optional[int] = None
    p: int
    n: Optional[int] = None
    status: PairStatus
    embedding: Optional[EmbeddingRecord] = None
    lhs: Optional[Residue] = None
    rhs: Optional[Residue] = None
    variants: List[VariantResult] = Field(default_factory=list)
    required_valuation: Optional[int] = None
    working_precision: Optional[int] = None
    passed: Optional[bool] = None
    variant: Optional[str] = Field(
        None, description="First enabled variant that passed"
    )
    detail: Optional[str] = None
    elapsed_ms: Optional[float] = None

    @model_validator(mode="after")
    def _consistent(self) -> "CongruenceReport":
        if self.status != PairStatus.ok:
            return self
        if self.passed != any(v.passed for v in self.variants):
            raise ValueError("passed must agree with the variant results")
        if self.working_precision is not None and self.required_valuation is not None:
            if self.required_valuation >= self.working_precision:
                raise ValueError("required valuation must be below working precision")
        return self

    @property
    def is_failure(self) -> bool:
        return self.status == PairStatus.error or (
            self.status == PairStatus.ok and not self.passed
        )

    def sort_key(self):
        claims = list(ClaimId)
        return (
            claims.index(self.claim),
            self.d if self.d is not None else -1,
            self.p,
            self.n if self.n is not None else 0,
            self.label,
        )


class VerifyConfigFile(FrozenModel):
    """``verify --config`` file; every key mirrors a command-line flag."""

    checks: Optional[List[ClaimId]] = None
    d: Optional[List[int]] = None
    p: Optional[List[int]] = None
    n: Optional[List[int]] = None
    prec: Optional[int] = Field(None, ge=1)
    sign_policy: Optional[SignPolicy] = None
    euler_variant: Optional[List[EulerVariant]] = None
    p_power_variant: Optional[List[PPowerVariant]] = None
    format: Optional[ReportFormat] = None
    stable: Optional[bool] = None
    field_file: Optional[List[str]] = None
    output: Optional[str] = None
    workers: Optional[int] = Field(None, ge=1)


class ReportDocument(FrozenModel):
    """The json report: a reading note, the reports and the variant summary."""

    notes: List[str] = Field(default_factory=list)
    reports: List[CongruenceReport] = Field(default_factory=list)
    summary: Dict[str, List[str]] = Field(default_factory=dict)
