"""Real quadratic fields: units, class numbers, p-adic embeddings, field documents."""

from src.quadfield.external import (
    CharacterDocument,
    FieldDocument,
    dump_field_document,
    export_field_document,
    load_external_field,
)
from src.quadfield.fields import embed_field, quad_field, real_quadratic_field
from src.quadfield.forms import (
    class_number,
    class_number_by_ideals,
    cycle_of,
    form_cycles,
    is_reduced,
    reduce_form,
    reduced_forms,
    rho,
)
from src.quadfield.models import EmbeddedField, QuadFieldData, SplitType
from src.quadfield.units import (
    embed_unit,
    fundamental_discriminant,
    fundamental_unit,
    fundamental_unit_by_search,
    radicand,
    splitting_type,
)

__all__ = [
    "CharacterDocument",
    "EmbeddedField",
    "FieldDocument",
    "QuadFieldData",
    "SplitType",
    "class_number",
    "class_number_by_ideals",
    "cycle_of",
    "dump_field_document",
    "embed_field",
    "embed_unit",
    "export_field_document",
    "form_cycles",
    "fundamental_discriminant",
    "fundamental_unit",
    "fundamental_unit_by_search",
    "is_reduced",
    "load_external_field",
    "quad_field",
    "radicand",
    "real_quadratic_field",
    "reduce_form",
    "reduced_forms",
    "rho",
    "splitting_type",
]
