from functools import lru_cache

from src.characters import is_fundamental_discriminant, kronecker_char
from src.padic import hensel_sqrt
from src.quadfield.forms import class_number
from src.quadfield.models import EmbeddedField, QuadFieldData
from src.quadfield.units import (
    embed_unit,
    fundamental_discriminant,
    fundamental_unit,
    radicand,
)
from src.shared.exceptions import FieldDataError


@lru_cache(maxsize=256)
def quad_field(d: int) -> QuadFieldData:
    """Field data of Q(sqrt d) from its fundamental discriminant."""
    if not is_fundamental_discriminant(d):
        raise FieldDataError(f"{d} is not a fundamental discriminant", field="d")
    x, y, norm = fundamental_unit(d)
    m = radicand(d)
    h, hplus = class_number(d)
    return QuadFieldData(m=m, d=d, x=x, y=y, norm=norm, h=h, hplus=hplus)


def real_quadratic_field(m: int) -> QuadFieldData:
    return quad_field(fundamental_discriminant(m))


def embed_field(
    F: QuadFieldData, p: int, N: int, *, conjugate: bool = False
) -> EmbeddedField:
    """The 1x1 unit matrix of F at p, with the canonical (or swapped) embedding."""
    z, z_conj = embed_unit(F, p, N)
    unit = z_conj if conjugate else z
    return EmbeddedField(
        label=f"Q(sqrt {F.m})",
        g=2,
        d=F.d,
        h=F.h,
        p=p,
        N=N,
        sqrt_d=hensel_sqrt(F.d, p, N),
        units=((unit,),),
        characters=(kronecker_char(F.d),),
        orientation="conjugate" if conjugate else "canonical",
    )
