"""Report rendering: text table, flat csv and json (the only parseable format)."""

import csv
import io
from typing import Dict, Iterable, List, Optional

from src.modules.verify.enums import ClaimId, PairStatus, ReportFormat
from src.modules.verify.schemas import CongruenceReport, ReportDocument

CSV_COLUMNS = [
    "claim",
    "label",
    "d",
    "p",
    "n",
    "status",
    "orientation",
    "xi_generator",
    "lhs",
    "lhs_modulus",
    "rhs",
    "rhs_modulus",
    "valuations",
    "required_valuation",
    "working_precision",
    "passed",
    "variant",
    "detail",
    "elapsed_ms",
]


def variant_summary(reports: Iterable[CongruenceReport]) -> Dict[str, List[str]]:
    """Per claim, the variants that pass every executed point of that claim."""
    supported: Dict[ClaimId, List[str]] = {}
    for report in sorted(reports, key=CongruenceReport.sort_key):
        if report.status != PairStatus.ok:
            continue
        passing = [v.variant for v in report.variants if v.passed]
        if report.claim not in supported:
            supported[report.claim] = passing
        else:
            supported[report.claim] = [
                v for v in supported[report.claim] if v in passing
            ]
    return {claim.value: variants for claim, variants in supported.items()}


def _cell(value) -> str:
    return "" if value is None else str(value)


def _render_csv(reports: List[CongruenceReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [
                r.claim.value,
                r.label,
                _cell(r.d),
                r.p,
                _cell(r.n),
                r.status.value,
                _cell(r.embedding and r.embedding.orientation),
                _cell(r.embedding and r.embedding.generator),
                _cell(r.lhs and r.lhs.value),
                _cell(r.lhs and f"{r.lhs.p}^{r.lhs.precision}"),
                _cell(r.rhs and r.rhs.value),
                _cell(r.rhs and f"{r.rhs.p}^{r.rhs.precision}"),
                ";".join(f"{v.variant}:{v.valuation}" for v in r.variants),
                _cell(r.required_valuation),
                _cell(r.working_precision),
                _cell(r.passed),
                _cell(r.variant),
                _cell(r.detail),
                _cell(r.elapsed_ms),
            ]
        )
    return buffer.getvalue()


def _render_text(
    reports: List[CongruenceReport], notes: List[str], summary: Dict[str, List[str]]
) -> str:
    header = (
        "claim",
        "field",
        "p",
        "n",
        "embedding",
        "status",
        "v_p / req",
        "result",
        "variant",
    )
    rows = [header]
    for r in reports:
        best = max((v.valuation for v in r.variants), default=None)
        measured = "" if best is None else f"{best} / {r.required_valuation}"
        result = "" if r.passed is None else ("PASS" if r.passed else "FAIL")
        rows.append(
            (
                r.claim.value,
                r.label,
                str(r.p),
                _cell(r.n),
                _cell(r.embedding),
                r.status.value,
                measured,
                result,
                _cell(r.variant),
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]
    for note in notes:
        lines.append(f"note: {note}")
    for claim, variants in summary.items():
        supported = ", ".join(variants) or "no single variant"
        lines.append(f"{claim} supported by: {supported}")
    return "\n".join(lines) + "\n"


def emit_report(
    reports: Iterable[CongruenceReport],
    fmt: ReportFormat | str = ReportFormat.text,
    *,
    notes: Optional[List[str]] = None,
) -> str:
    """Renders reports sorted by (claim, d, p, n)."""
    fmt = ReportFormat(fmt)
    ordered = sorted(reports, key=CongruenceReport.sort_key)
    notes = list(notes or [])
    summary = variant_summary(ordered)
    if fmt == ReportFormat.csv:
        return _render_csv(ordered)
    if fmt == ReportFormat.json:
        document = ReportDocument(notes=notes, reports=ordered, summary=summary)
        return document.model_dump_json(indent=2) + "\n"
    return _render_text(ordered, notes, summary)


def parse_report(text: str) -> List[CongruenceReport]:
    """Reports back from a json document produced by ``emit_report``."""
    return ReportDocument.model_validate_json(text).reports
