"""Class numbers from indefinite binary quadratic forms.

A form (a, b, c) stands for a x^2 + b x y + c y^2 of discriminant
d = b^2 - 4ac. Reduced forms of a fixed discriminant fall into cycles under
the reduction step rho; the number of cycles is the narrow class number.
"""

import logging
from math import isqrt
from typing import List, Set, Tuple

from sympy import divisors

from src.quadfield.units import fundamental_unit
from src.shared.exceptions import FieldDataError

logger = logging.getLogger(__name__)

Form = Tuple[int, int, int]


def is_reduced(form: Form, d: int) -> bool:
    """0 < b < sqrt d and sqrt d - b < 2|a| < sqrt d + b, in exact integers."""
    a, b, _ = form
    if b <= 0 or b * b >= d:
        return False
    two_a = 2 * abs(a)
    if (two_a + b) ** 2 <= d:
        return False
    return two_a - b < 0 or (two_a - b) ** 2 < d


def _normalize_b(b: int, c: int, d: int) -> int:
    """The representative of b mod 2|c| used by rho."""
    root = isqrt(d)
    span = 2 * abs(c)
    if c * c > d:
        r = b % span
        return r - span if r > abs(c) else r
    return root - (root - b) % span


def rho(form: Form, d: int) -> Form:
    """(a, b, c) -> (c, b', (b'^2 - d) / 4c) with b' = -b mod 2|c|."""
    _, b, c = form
    b_next = _normalize_b(-b, c, d)
    return c, b_next, (b_next * b_next - d) // (4 * c)


def reduce_form(form: Form, d: int) -> Form:
    while not is_reduced(form, d):
        form = rho(form, d)
    return form


def reduced_forms(d: int) -> List[Form]:
    """All reduced forms of discriminant d, sorted."""
    root = isqrt(d)
    forms = []
    for b in range(d % 2 or 2, root + 1, 2):
        ac = (b * b - d) // 4
        for divisor in divisors(-ac):
            for a in (divisor, -divisor):
                form = (a, b, ac // a)
                if is_reduced(form, d):
                    forms.append(form)
    return sorted(forms)


def cycle_of(form: Form, d: int) -> List[Form]:
    cycle = [form]
    current = rho(form, d)
    while current != form:
        cycle.append(current)
        current = rho(current, d)
    return cycle


def form_cycles(d: int) -> List[List[Form]]:
    seen: Set[Form] = set()
    cycles = []
    for form in reduced_forms(d):
        if form in seen:
            continue
        cycle = cycle_of(form, d)
        seen.update(cycle)
        cycles.append(cycle)
    return cycles


def _check_discriminant(d: int) -> None:
    if d <= 1 or d % 4 not in (0, 1) or isqrt(d) ** 2 == d:
        raise FieldDataError(f"{d} is not a non-square discriminant > 1", field="d")


def class_number(d: int) -> Tuple[int, int]:
    """(h, hplus): hplus counts rho-cycles; h = hplus / 2 when norm(eps) = +1."""
    _check_discriminant(d)
    _, _, norm = fundamental_unit(d)
    hplus = len(form_cycles(d))
    h = hplus if norm == -1 else hplus // 2
    logger.debug("d=%s: h=%s, h+=%s", d, h, hplus)
    return h, hplus


def class_number_by_ideals(d: int) -> int:
    """Wide class number from ideals of norm N <= sqrt(d)/2.

    Each ideal [N, (-b + sqrt d)/2] gives the form (N, b, (b^2 - d)/4N). Forms
    are reduced and identified up to their rho-cycle and up to the negation
    (a, b, c) -> (-a, b, -c), which is how wide classes merge narrow ones.
    """
    _check_discriminant(d)
    classes: Set[Form] = set()
    N = 1
    while 4 * N * N <= d:
        for b in range(2 * N):
            if (b * b - d) % (4 * N) == 0:
                reduced = reduce_form((N, b, (b * b - d) // (4 * N)), d)
                cycle = cycle_of(reduced, d)
                classes.add(min(min(f, (-f[0], f[1], -f[2])) for f in cycle))
        N += 1
    return len(classes)
