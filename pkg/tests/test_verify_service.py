"""Integration tests for the verify service: grids, classification and claims.

Every claim runs end to end over real fields; the expensive grids mirror the
shipped acceptance grid.
"""

import itertools
from dataclasses import replace

import pytest

from src.characters import RootChoice
from src.lfunctions import leopoldt_Lp
from src.modules.verify.checks import CHECKS, CheckContext, Outcome
from src.modules.verify.enums import ClaimId, PairStatus
from src.modules.verify.grid import (
    DEFAULT_D,
    DEFAULT_P,
    GridPoint,
    classify,
    default_grid,
    expand,
)
from src.modules.verify.reports import variant_summary
from src.modules.verify.schemas import CheckSpec, EmbeddingRecord, VariantResult
from src.modules.verify.service import VerificationService, evaluate_point
from src.padic import PadicInt
from src.quadfield import FieldDocument, export_field_document, quad_field
from src.shared.exceptions import ConfigurationError, ConvergenceError


def _run(ctx, *specs):
    return VerificationService(ctx, stable=True).run(list(specs))


def _ok(reports):
    return [r for r in reports if r.status == PairStatus.ok]


# --- Grid -----------------------------------------------------------------------


def test_identity_claims_expand_per_prime():
    points = expand(CheckSpec(claim=ClaimId.p13, p=[5, 7], n=[1, 2]))
    assert [(pt.p, pt.n, pt.d) for pt in points] == [(5, None, None), (7, None, None)]
    assert points[0].label == "units mod 5"
    assert len(expand(CheckSpec(claim=ClaimId.l22, p=[5, 7], n=[1, 2]))) == 4


def test_field_claims_expand_over_discriminants():
    points = expand(CheckSpec(claim=ClaimId.t26, d=[5, 40], p=[11], n=[1, 2]))
    assert [(pt.d, pt.n) for pt in points] == [(5, 1), (5, 2), (40, 1), (40, 2)]
    assert points[2].label == "Q(sqrt 10)"


def test_non_fundamental_discriminant_is_a_configuration_error():
    with pytest.raises(ConfigurationError):
        expand(CheckSpec(claim=ClaimId.t15, d=[20], p=[11]))


def test_default_grid_covers_every_claim():
    specs = default_grid()
    assert [spec.claim for spec in specs] == list(ClaimId)
    assert all(spec.d == list(DEFAULT_D) for spec in specs)
    assert all(spec.p == list(DEFAULT_P) for spec in specs)


@pytest.mark.parametrize(
    "claim,d,p,status",
    [
        (ClaimId.t26, 5, 11, PairStatus.ok),
        (ClaimId.t26, 5, 5, PairStatus.skipped_ramified),
        (ClaimId.t26, 5, 7, PairStatus.skipped_inert),
        (ClaimId.t26, 40, 13, PairStatus.ok),
        (ClaimId.t26, 5, 19, PairStatus.ok),
        (ClaimId.cnf, 5, 19, PairStatus.skipped_embedding),
        (ClaimId.p11, 13, 17, PairStatus.skipped_embedding),
        (ClaimId.t15, 316, 7, PairStatus.ok),
    ],
)
def test_classification(claim, d, p, status):
    assert classify(claim, d, p) == status


def test_skipped_points_still_report(ctx):
    reports = _run(ctx, CheckSpec(claim=ClaimId.t26, d=[5], p=[5, 7], n=[1]))
    assert [r.status for r in reports] == [
        PairStatus.skipped_ramified,
        PairStatus.skipped_inert,
    ]
    assert not any(r.is_failure for r in reports)
    assert [r.embedding for r in reports] == [
        EmbeddingRecord(orientation="canonical", generator=2),
        EmbeddingRecord(orientation="canonical", generator=3),
    ]


def test_reports_record_their_embedding(ctx):
    reports = _run(
        ctx,
        CheckSpec(claim=ClaimId.t26, d=[5], p=[11], n=[1]),
        CheckSpec(claim=ClaimId.p13, p=[13]),
    )
    by_claim = {r.claim: r for r in reports}
    field, units = by_claim[ClaimId.t26], by_claim[ClaimId.p13]
    assert field.embedding == EmbeddingRecord(orientation="canonical", generator=2)
    assert str(field.embedding) == "canonical, g=2"
    assert units.embedding == EmbeddingRecord(orientation=None, generator=2)
    assert str(units.embedding) == "g=2"


# --- Identities ------------------------------------------------------------------


def test_identity_suite(ctx):
    reports = _run(
        ctx,
        CheckSpec(claim=ClaimId.p13, p=[5, 7, 11, 13]),
        CheckSpec(claim=ClaimId.l22, p=[5, 7, 11, 13], n=[1, 2, 3]),
    )
    assert len(reports) == 4 + 12
    assert all(r.status == PairStatus.ok and r.passed for r in reports)
    assert all(r.variant == "identity" for r in reports)


def test_level_regulator_identity(ctx):
    reports = _run(
        ctx, CheckSpec(claim=ClaimId.p23, d=[5, 8, 13, 40], p=[11, 19], n=[1, 2, 3])
    )
    ok = _ok(reports)
    assert ok
    assert all(r.passed for r in ok)
    assert all(r.required_valuation == r.n + 2 for r in ok)


# --- L-value claims ------------------------------------------------------------------


def test_leopoldt_sum_against_bernoulli_numbers(ctx):
    reports = _run(
        ctx,
        CheckSpec(claim=ClaimId.p11, d=[5], p=[11, 31]),
        CheckSpec(claim=ClaimId.p11, d=[12], p=[13]),
        CheckSpec(claim=ClaimId.p11, d=[8], p=[17]),
    )
    assert len(reports) == 4
    assert all(r.status == PairStatus.ok and r.passed for r in reports)
    assert len({r.variant for r in reports}) == 1


def test_leopoldt_claim_needs_every_root_choice(ctx, mocker):
    def canonical_only(chi, p, N, choice=RootChoice.CANONICAL):
        value = leopoldt_Lp(chi, p, N, choice)
        if choice == RootChoice.CONJUGATE:
            return replace(value, value=value.value + 1)
        return value

    spy = mocker.patch(
        "src.modules.verify.checks.leopoldt_Lp", side_effect=canonical_only
    )
    reports = _run(ctx, CheckSpec(claim=ClaimId.p11, d=[5], p=[11]))
    assert {call.args[3] for call in spy.call_args_list} == set(RootChoice)
    assert reports[0].status == PairStatus.ok
    assert reports[0].passed is False
    assert all(v.valuation == 0 for v in reports[0].variants)


def test_padic_class_number_formula(ctx):
    reports = _run(ctx, CheckSpec(claim=ClaimId.cnf, d=[5], p=[11, 19, 31]))
    by_prime = {r.p: r for r in reports}
    assert by_prime[11].passed and by_prime[31].passed
    assert by_prime[11].required_valuation == 3
    assert by_prime[19].status == PairStatus.skipped_embedding


def test_class_number_formula_modulus_follows_precision():
    ctx = CheckContext(precision=4)
    reports = _run(ctx, CheckSpec(claim=ClaimId.cnf, d=[5], p=[11]))
    assert reports[0].required_valuation == 4
    assert reports[0].passed


def test_defining_sum_against_interpolated_values(ctx):
    reports = _run(
        ctx,
        CheckSpec(claim=ClaimId.p24, d=[5], p=[11], n=[1, 2]),
        CheckSpec(claim=ClaimId.p24, d=[5], p=[31], n=[1]),
    )
    assert len(reports) == 3
    assert all(r.status == PairStatus.ok and r.passed for r in reports)
    assert variant_summary(reports)["CHK-P24"]


# --- Main congruences -----------------------------------------------------------------


def test_mod_p_congruence_over_the_default_grid(ctx):
    reports = _run(
        ctx, CheckSpec(claim=ClaimId.t15, d=list(DEFAULT_D), p=list(DEFAULT_P))
    )
    ok = _ok(reports)
    assert len(ok) >= 5
    assert not any(r.is_failure for r in reports)
    assert variant_summary(reports)["CHK-T15"]


def test_level_n_congruence_over_the_default_grid(ctx):
    reports = _run(
        ctx,
        CheckSpec(claim=ClaimId.t26, d=list(DEFAULT_D), p=list(DEFAULT_P), n=[1, 2]),
    )
    ok = _ok(reports)
    assert len(ok) >= 10
    assert not any(r.is_failure for r in reports)
    assert variant_summary(reports)["CHK-T26"]
    for report in ok:
        assert report.working_precision > report.required_valuation


def test_unit_claims_hold_where_hypotheses_hold(ctx):
    reports = _run(
        ctx,
        CheckSpec(claim=ClaimId.c27, d=list(DEFAULT_D), p=list(DEFAULT_P), n=[1, 2]),
        CheckSpec(claim=ClaimId.t29, d=list(DEFAULT_D), p=list(DEFAULT_P)),
    )
    executed = _ok(reports)
    assert any(r.claim == ClaimId.c27 for r in executed)
    assert any(r.claim == ClaimId.t29 for r in executed)
    assert all(r.passed for r in executed)
    assert variant_summary(reports)["CHK-T29"]


# --- External fields ---------------------------------------------------------------


def test_external_quadratic_field_reproduces_internal_reports(ctx):
    document = FieldDocument.model_validate(
        export_field_document(quad_field(5), 11, 10)
    )
    internal = _run(ctx, CheckSpec(claim=ClaimId.t26, d=[5], p=[11], n=[1, 2]))
    external = _run(
        ctx, CheckSpec(claim=ClaimId.t26, p=[], n=[1, 2], fields=[document])
    )
    assert [r.model_dump() for r in external] == [r.model_dump() for r in internal]


def test_external_field_reports_its_own_orientation(ctx):
    raw = export_field_document(quad_field(5), 11, 10)
    raw.pop("orientation", None)
    document = FieldDocument.model_validate(raw)
    report = _run(ctx, CheckSpec(claim=ClaimId.t26, n=[1], fields=[document]))[0]
    assert report.embedding == EmbeddingRecord(orientation="external", generator=2)


def test_external_field_without_enough_digits(ctx):
    document = FieldDocument.model_validate(export_field_document(quad_field(5), 11, 3))
    with pytest.raises(ConfigurationError):
        _run(ctx, CheckSpec(claim=ClaimId.t26, n=[1], fields=[document]))


def test_measured_hypothesis_failure(ctx):
    raw = export_field_document(quad_field(5), 11, 8)
    raw["units"] = [[1]]
    document = FieldDocument.model_validate(raw)
    reports = _run(ctx, CheckSpec(claim=ClaimId.c27, n=[1], fields=[document]))
    assert reports[0].status == PairStatus.hypothesis_failed
    assert not reports[0].is_failure


# --- Service mechanics ---------------------------------------------------------------


def _point(claim=ClaimId.p13, p=5):
    return GridPoint(claim=claim, p=p, n=None, d=None, label=f"units mod {p}")


def test_application_errors_become_error_reports(ctx, mocker):
    def explode(point, field_at, ctx):
        raise ConvergenceError("did not stabilize")

    mocker.patch.dict(CHECKS, {ClaimId.p13: explode})
    spec = CheckSpec(claim=ClaimId.p13, p=[5])
    report = evaluate_point(spec, _point(), ctx, stable=True)
    assert report.status == PairStatus.error
    assert report.detail == "NO_CONVERGENCE: did not stabilize"
    assert report.is_failure


def test_configuration_errors_propagate(ctx, mocker):
    def misconfigured(point, field_at, ctx):
        raise ConfigurationError("bad grid")

    mocker.patch.dict(CHECKS, {ClaimId.p13: misconfigured})
    with pytest.raises(ConfigurationError):
        evaluate_point(CheckSpec(claim=ClaimId.p13, p=[5]), _point(), ctx)


def test_failing_variant_is_reported(ctx, mocker):
    def failing(point, field_at, ctx):
        outcome = Outcome(required=2, working_precision=5)
        outcome.add("identity", PadicInt(5, 5, 1), PadicInt(5, 5, 2))
        return outcome

    mocker.patch.dict(CHECKS, {ClaimId.p13: failing})
    report = evaluate_point(CheckSpec(claim=ClaimId.p13, p=[5]), _point(), ctx, True)
    assert report.passed is False
    assert report.variant is None
    assert report.variants == [
        VariantResult(variant="identity", valuation=0, required=2, passed=False)
    ]
    assert report.is_failure


def test_timing_is_recorded_unless_stable(ctx, mocker):
    mocker.patch(
        "src.modules.verify.service.time.perf_counter",
        side_effect=itertools.count(1.0, 0.25),
    )
    spec = CheckSpec(claim=ClaimId.p13, p=[5])
    assert evaluate_point(spec, _point(), ctx).elapsed_ms == 250.0
    assert evaluate_point(spec, _point(), ctx, stable=True).elapsed_ms is None


def test_process_pool_preserves_report_order(ctx):
    specs = [
        CheckSpec(claim=ClaimId.l22, p=[7, 5], n=[2, 1]),
        CheckSpec(claim=ClaimId.p23, d=[13, 5], p=[11], n=[1]),
    ]
    serial = VerificationService(ctx, workers=1, stable=True).run(specs)
    parallel = VerificationService(ctx, workers=2, stable=True).run(specs)
    assert serial == parallel
    assert [(r.claim, r.p, r.n) for r in serial][:4] == [
        (ClaimId.l22, 5, 1),
        (ClaimId.l22, 5, 2),
        (ClaimId.l22, 7, 1),
        (ClaimId.l22, 7, 2),
    ]
