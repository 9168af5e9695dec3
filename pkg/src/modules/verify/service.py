import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional

from src.modules.verify.checks import CHECKS, CheckContext, FieldBuilder
from src.modules.verify.enums import PairStatus
from src.modules.verify.grid import GridPoint, classify, classify_external, expand
from src.characters import embedding_generator
from src.modules.verify.schemas import (
    CheckSpec,
    CongruenceReport,
    EmbeddingRecord,
    Residue,
)
from src.quadfield import EmbeddedField, embed_field, load_external_field, quad_field
from src.shared.exceptions import (
    AppError,
    ConfigurationError,
    OutOfScopeError,
    PrecisionError,
)

logger = logging.getLogger(__name__)


def _external_builder(field: EmbeddedField) -> FieldBuilder:
    def build(W: int) -> EmbeddedField:
        try:
            return field.reduce(W)
        except PrecisionError as exc:
            raise ConfigurationError(
                f"Field document {field.label} has precision {field.N}; "
                f"this check needs {W}",
                field="N",
            ) from exc

    return build


def _quadratic_builder(d: int, p: int) -> FieldBuilder:
    def build(W: int) -> EmbeddedField:
        return embed_field(quad_field(d), p, W)

    return build


def _prepare(spec: CheckSpec, point: GridPoint):
    """Status, field builder and unit orientation of a grid point."""
    claim = point.claim
    if point.field_index is not None:
        field = load_external_field(spec.fields[point.field_index].model_dump())
        status = PairStatus.ok
        if claim.needs_field:
            status = classify_external(claim, field)
        return status, _external_builder(field), field.orientation
    if not claim.needs_field:
        return PairStatus.ok, None, None
    status = classify(claim, point.d, point.p)
    return status, _quadratic_builder(point.d, point.p), "canonical"


def evaluate_point(
    spec: CheckSpec, point: GridPoint, ctx: CheckContext, stable: bool = False
) -> CongruenceReport:
    """Runs one grid point and always returns exactly one report.

    ``ConfigurationError`` propagates; any other application error becomes an
    ``error`` report so the rest of the grid still runs.
    """
    started = time.perf_counter()
    base = {
        "claim": point.claim,
        "label": point.label,
        "d": point.d,
        "p": point.p,
        "n": point.n,
    }
    status, builder, orientation = _prepare(spec, point)
    base["embedding"] = EmbeddingRecord(
        orientation=orientation, generator=embedding_generator(point.p)
    )
    if status != PairStatus.ok:
        logger.debug(
            "%s %s p=%s: %s", point.claim.value, point.label, point.p, status.value
        )
        return CongruenceReport(**base, status=status)
    try:
        outcome = CHECKS[point.claim](point, builder, ctx)
    except ConfigurationError:
        raise
    except OutOfScopeError as exc:
        return CongruenceReport(
            **base, status=PairStatus(exc.status), detail=exc.detail
        )
    except AppError as exc:
        logger.warning(
            "%s %s p=%s n=%s failed: %s",
            point.claim.value,
            point.label,
            point.p,
            point.n,
            exc.detail,
        )
        return CongruenceReport(
            **base, status=PairStatus.error, detail=f"{exc.code}: {exc.detail}"
        )
    elapsed = None if stable else round((time.perf_counter() - started) * 1000, 3)
    if outcome.status != PairStatus.ok:
        return CongruenceReport(
            **base,
            status=outcome.status,
            working_precision=outcome.working_precision,
            detail=outcome.detail,
            elapsed_ms=elapsed,
        )
    selected = outcome.selected
    lhs, rhs = (None, None)
    if selected is not None:
        lhs, rhs = outcome.sides.get(selected.variant, (None, None))
    passed = any(result.passed for result in outcome.results)
    report = CongruenceReport(
        **base,
        status=PairStatus.ok,
        lhs=Residue.from_padic(lhs) if lhs is not None else None,
        rhs=Residue.from_padic(rhs) if rhs is not None else None,
        variants=outcome.results,
        required_valuation=selected.required if selected else outcome.required,
        working_precision=outcome.working_precision,
        passed=passed,
        variant=selected.variant if selected and selected.passed else None,
        detail=outcome.detail,
        elapsed_ms=elapsed,
    )
    log = logger.info if passed else logger.warning
    log(
        "%s %s p=%s n=%s: %s",
        point.claim.value,
        point.label,
        point.p,
        point.n,
        f"pass ({report.variant})" if passed else "FAIL",
    )
    return report


class VerificationService:
    """Runs check specs over their grids and returns reports in report order.

    With ``workers > 1`` grid points are evaluated in a process pool; the
    report list is sorted afterwards, so completion order never shows.
    """

    def __init__(
        self,
        ctx: Optional[CheckContext] = None,
        *,
        workers: int = 1,
        stable: bool = False,
    ):
        self.ctx = ctx or CheckContext()
        self.workers = workers
        self.stable = stable

    def run_check(self, spec: CheckSpec) -> List[CongruenceReport]:
        return self.run([spec])

    def run(self, specs: Iterable[CheckSpec]) -> List[CongruenceReport]:
        jobs = [(spec, point) for spec in specs for point in expand(spec)]
        logger.info(
            "Evaluating %s grid point(s) with %s worker(s)", len(jobs), self.workers
        )
        if self.workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                reports = list(
                    pool.map(
                        evaluate_point,
                        [spec for spec, _ in jobs],
                        [point for _, point in jobs],
                        [self.ctx] * len(jobs),
                        [self.stable] * len(jobs),
                    )
                )
        else:
            reports = [
                evaluate_point(spec, point, self.ctx, self.stable)
                for spec, point in jobs
            ]
        return sorted(reports, key=CongruenceReport.sort_key)
