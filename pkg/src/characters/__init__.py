"""Primitive Dirichlet characters and their p-adically embedded values."""

from src.characters.models import (
    CharacterKind,
    DirichletChar,
    EmbeddedRootOfUnity,
    RootChoice,
)
from src.characters.operations import (
    char_residue,
    cyclic_char,
    embedding_generator,
    eval_char,
    gauss_sum,
    is_fundamental_discriminant,
    kronecker_char,
    primitive_root_of_unity,
    tabulated_char,
    trivial_char,
)

__all__ = [
    "CharacterKind",
    "DirichletChar",
    "EmbeddedRootOfUnity",
    "RootChoice",
    "char_residue",
    "cyclic_char",
    "embedding_generator",
    "eval_char",
    "gauss_sum",
    "is_fundamental_discriminant",
    "kronecker_char",
    "primitive_root_of_unity",
    "tabulated_char",
    "trivial_char",
]
