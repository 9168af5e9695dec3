from pydantic import BaseModel, ConfigDict


class FrozenModel(BaseModel):
    """Base schema: immutable, strict about unknown fields.

    Reports and documents are files, not an API contract, so field names stay
    snake_case on the wire.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")
