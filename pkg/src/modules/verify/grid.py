"""Grid expansion and classification of (field, prime) pairs."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.characters import is_fundamental_discriminant
from src.modules.verify.enums import ClaimId, PairStatus
from src.modules.verify.schemas import CheckSpec
from src.quadfield import (
    EmbeddedField,
    FieldDocument,
    SplitType,
    load_external_field,
    quad_field,
    splitting_type,
)
from src.shared.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_D = (5, 8, 12, 13, 40, 316)
DEFAULT_P = (5, 7, 11, 13, 19)
DEFAULT_N = (1, 2)


@dataclass(frozen=True)
class GridPoint:
    """One evaluation: a claim at a prime, a level and (maybe) a field.

    ``field_index`` points into ``CheckSpec.fields`` for external fields;
    quadratic fields are rebuilt from ``d``.
    """

    claim: ClaimId
    p: int
    n: Optional[int]
    d: Optional[int]
    label: str
    field_index: Optional[int] = None


def default_grid() -> List[CheckSpec]:
    """The shipped acceptance grid: every claim over the default d, p and n."""
    return [
        CheckSpec(
            claim=claim,
            d=list(DEFAULT_D),
            p=list(DEFAULT_P),
            n=list(DEFAULT_N) if claim.needs_level else [1],
        )
        for claim in ClaimId
    ]


def _label(d: int) -> str:
    return f"Q(sqrt {d if d % 4 == 1 else d // 4})"


def expand(spec: CheckSpec) -> List[GridPoint]:
    """All grid points of a spec, in report order."""
    levels: Tuple[Optional[int], ...] = (None,)
    if spec.claim.needs_level:
        levels = tuple(spec.n)
    points = []
    if not spec.claim.needs_field:
        for p in spec.p:
            for n in levels:
                points.append(GridPoint(spec.claim, p, n, None, f"units mod {p}"))
    else:
        for d in spec.d:
            if not is_fundamental_discriminant(d):
                raise ConfigurationError(
                    f"{d} is not a fundamental discriminant", field="d"
                )
            for p in spec.p:
                for n in levels:
                    points.append(GridPoint(spec.claim, p, n, d, _label(d)))
    for index, document in enumerate(spec.fields):
        for n in levels:
            points.append(
                GridPoint(spec.claim, document.p, n, document.d, document.label, index)
            )
    return points


def classify(claim: ClaimId, d: int, p: int) -> PairStatus:
    """Status of a quadratic (d, p) pair for ``claim`` before anything runs."""
    split = splitting_type(d, p)
    if split == SplitType.RAMIFIED:
        return PairStatus.skipped_ramified
    if split == SplitType.INERT:
        return PairStatus.skipped_inert
    if claim.needs_defining_sum and (p - 1) % d != 0:
        return PairStatus.skipped_embedding
    if claim.needs_h_prime_to_p and quad_field(d).h % p == 0:
        return PairStatus.skipped_p_divides_h
    return PairStatus.ok


def classify_external(claim: ClaimId, field: EmbeddedField) -> PairStatus:
    p = field.p
    if field.d % p == 0:
        return PairStatus.skipped_ramified
    if claim.needs_characters and not field.characters:
        return PairStatus.skipped_unsupported
    for chi in field.characters:
        if claim.needs_defining_sum and (p - 1) % chi.conductor != 0:
            return PairStatus.skipped_embedding
        if not chi.is_exact and (p - 1) % chi.order != 0:
            return PairStatus.skipped_embedding
    if claim.needs_h_prime_to_p and field.h % p == 0:
        return PairStatus.skipped_p_divides_h
    return PairStatus.ok


def load_fields(paths: List[str]) -> List[FieldDocument]:
    """Field documents from files, validated before any check runs."""
    documents = []
    for path in paths:
        try:
            with open(path, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise ConfigurationError(f"Cannot read field file {path}: {exc}") from exc
        load_external_field(text)
        documents.append(FieldDocument.model_validate_json(text))
    logger.info("Loaded %s external field document(s)", len(documents))
    return documents
