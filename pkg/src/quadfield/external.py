"""Field-data documents: the ingestion path for fields built elsewhere.

A document fixes a real abelian field K of degree g, a prime p and a
precision N, and lists sigma_j(eps_k) mod p^N for a fundamental system of
units. Quadratic fields built here can be exported to the same format.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from pydantic import Field, ValidationError, field_validator, model_validator
from sympy import isprime

from src.characters import DirichletChar, kronecker_char, tabulated_char
from src.padic import PadicInt
from src.quadfield.fields import embed_field
from src.quadfield.models import EmbeddedField, QuadFieldData
from src.shared.exceptions import AppError, FieldDataError
from src.shared.schemas import FrozenModel

logger = logging.getLogger(__name__)


class CharacterDocument(FrozenModel):
    """Either ``{"d": D}`` (Kronecker character) or a generator table."""

    d: Optional[int] = None
    conductor: Optional[int] = Field(None, ge=1)
    order: Optional[int] = Field(None, ge=1)
    generators: Optional[Dict[int, int]] = None

    @model_validator(mode="after")
    def _one_description(self) -> "CharacterDocument":
        tabulated = (self.conductor, self.order, self.generators)
        if self.d is not None and any(v is not None for v in tabulated):
            raise ValueError("give either d or conductor/order/generators")
        if self.d is None and any(v is None for v in tabulated):
            raise ValueError("conductor, order and generators are all required")
        return self

    def build(self) -> DirichletChar:
        if self.d is not None:
            return kronecker_char(self.d)
        return tabulated_char(self.conductor, self.order, self.generators)


class FieldDocument(FrozenModel):
    label: str = Field(..., min_length=1)
    g: int = Field(..., ge=2, description="Degree of the field")
    d: int = Field(..., gt=1, description="Discriminant")
    h: int = Field(..., ge=1, description="Class number")
    p: int = Field(..., gt=3)
    N: int = Field(..., ge=2, description="Precision of every residue")
    sqrt_d: int = Field(..., ge=0, description="sqrt(d) mod p^N")
    units: List[List[int]] = Field(
        ..., description="Row j, column k: sigma_j(eps_k) mod p^N"
    )
    characters: Optional[List[CharacterDocument]] = None
    orientation: str = Field(
        "external", min_length=1, description="How the unit rows were oriented"
    )

    @field_validator("p")
    @classmethod
    def _prime(cls, p: int) -> int:
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
        return p

    @model_validator(mode="after")
    def _check_shape(self) -> "FieldDocument":
        size = self.g - 1
        if len(self.units) != size or any(len(row) != size for row in self.units):
            raise ValueError(f"units must be a {size}x{size} matrix for g={self.g}")
        modulus = self.p**self.N
        residues = [self.sqrt_d] + [r for row in self.units for r in row]
        if any(not 0 <= r < modulus for r in residues):
            raise ValueError(f"residues must lie in [0, {self.p}^{self.N})")
        if self.characters is not None and len(self.characters) != size:
            raise ValueError(f"a degree-{self.g} field has {size} nontrivial characters")
        return self


def _parse(document: Union[str, bytes, Path, Mapping[str, Any]]) -> FieldDocument:
    try:
        if isinstance(document, Path):
            return FieldDocument.model_validate_json(document.read_text())
        if isinstance(document, (str, bytes)):
            return FieldDocument.model_validate_json(document)
        return FieldDocument.model_validate(dict(document))
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or None
        raise FieldDataError(
            f"Invalid field document: {first['msg']}", field=location
        ) from exc


def load_external_field(
    document: Union[str, bytes, Path, Mapping[str, Any]],
) -> EmbeddedField:
    """Validated field data from a document (JSON text, path or mapping).

    For g = 2 without ``characters`` the Kronecker character of d is implied.
    Characters must be even and have conductors prime to p.
    """
    parsed = _parse(document)
    p, N = parsed.p, parsed.N
    try:
        if parsed.characters is not None:
            characters = tuple(c.build() for c in parsed.characters)
        elif parsed.g == 2:
            characters = (kronecker_char(parsed.d),)
        else:
            characters = ()
        for chi in characters:
            if not chi.is_even or chi.is_trivial:
                raise FieldDataError(
                    f"{chi} is not a nontrivial even character", field="characters"
                )
        field_data = EmbeddedField(
            label=parsed.label,
            g=parsed.g,
            d=parsed.d,
            h=parsed.h,
            p=p,
            N=N,
            sqrt_d=PadicInt(p, N, parsed.sqrt_d),
            units=tuple(
                tuple(PadicInt(p, N, r) for r in row) for row in parsed.units
            ),
            characters=characters,
            orientation=parsed.orientation,
        )
    except FieldDataError:
        raise
    except AppError as exc:
        raise FieldDataError(f"Invalid field document: {exc.detail}") from exc
    logger.info("Loaded field %s (g=%s, p=%s, N=%s)", parsed.label, parsed.g, p, N)
    return field_data


def export_field_document(F: QuadFieldData, p: int, N: int) -> Dict[str, Any]:
    """The field document of a quadratic field at p with the canonical embedding."""
    embedded = embed_field(F, p, N)
    document = FieldDocument(
        label=embedded.label,
        g=embedded.g,
        d=embedded.d,
        h=embedded.h,
        p=p,
        N=N,
        sqrt_d=embedded.sqrt_d.r,
        units=[[entry.r for entry in row] for row in embedded.units],
        characters=[CharacterDocument(d=F.d)],
        orientation=embedded.orientation,
    )
    return document.model_dump(mode="json", exclude_none=True)


def dump_field_document(document: Mapping[str, Any]) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"
