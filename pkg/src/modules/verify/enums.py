from enum import Enum
from typing import Tuple


class ClaimId(str, Enum):
    """Congruences the harness knows how to check.

    The value is the stable identifier used on the command line and in reports.
    """

    p11 = "CHK-P11"
    p13 = "CHK-P13"
    l22 = "CHK-L22"
    p23 = "CHK-P23"
    t15 = "CHK-T15"
    cnf = "CHK-CNF"
    p24 = "CHK-P24"
    t26 = "CHK-T26"
    c27 = "CHK-C27"
    t29 = "CHK-T29"

    @property
    def needs_field(self) -> bool:
        """False for the unit identities, which run on sampled units per prime."""
        return self not in (ClaimId.p13, ClaimId.l22)

    @property
    def needs_level(self) -> bool:
        return self in (ClaimId.l22, ClaimId.p23, ClaimId.p24, ClaimId.t26, ClaimId.c27)

    @property
    def needs_defining_sum(self) -> bool:
        """Evaluates Leopoldt's sum, so every conductor must divide p - 1."""
        return self in (ClaimId.p11, ClaimId.cnf, ClaimId.p24, ClaimId.t29)

    @property
    def needs_characters(self) -> bool:
        return self.needs_field and self != ClaimId.p23

    @property
    def needs_h_prime_to_p(self) -> bool:
        return self in (ClaimId.t15, ClaimId.t26, ClaimId.c27, ClaimId.t29, ClaimId.cnf)

    @property
    def is_unit_claim(self) -> bool:
        return self in (ClaimId.c27, ClaimId.t29)


class PairStatus(str, Enum):
    ok = "ok"
    skipped_inert = "skipped-inert"
    skipped_ramified = "skipped-ramified"
    skipped_embedding = "skipped-embedding"
    skipped_p_divides_h = "skipped-p-divides-h"
    skipped_unsupported = "skipped-unsupported"
    hypothesis_failed = "hypothesis-failed"
    error = "error"

    @property
    def is_skip(self) -> bool:
        return self.value.startswith("skipped") or self == PairStatus.hypothesis_failed


class SignPolicy(str, Enum):
    either = "either"
    plus = "plus"
    minus = "minus"

    @property
    def signs(self) -> Tuple[str, ...]:
        if self == SignPolicy.either:
            return ("plus", "minus")
        return (self.value,)


class EulerVariant(str, Enum):
    """Euler-type factor E applied to the Bernoulli side.

    ``plain`` is 1, ``chi_p`` is prod conj(chi)(p), ``full`` is
    prod conj(chi)(p) / (1 - chi(p) p).
    """

    plain = "plain"
    chi_p = "chi-p"
    full = "full"


class PPowerVariant(str, Enum):
    """Whether the p^(g-1) factor multiplies the Bernoulli side."""

    with_p = "with"
    without_p = "without"


class ReportFormat(str, Enum):
    text = "text"
    csv = "csv"
    json = "json"
