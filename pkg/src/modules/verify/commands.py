"""Command-line surface: ``verify`` plus small inspection subcommands.

Application errors are caught here, logged, echoed as ``CODE: detail`` on
stderr and mapped to their exit codes (0 pass or skip, 1 failure, 2 bad input).
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from src.bernoulli import classical_L_value, gen_bernoulli_exact
from src.characters import kronecker_char
from src.lfunctions import leopoldt_Lp
from src.modules.verify.checks import DENOMINATOR_READING, CheckContext
from src.modules.verify.enums import (
    ClaimId,
    EulerVariant,
    PPowerVariant,
    ReportFormat,
    SignPolicy,
)
from src.modules.verify.grid import DEFAULT_D, DEFAULT_N, DEFAULT_P, load_fields
from src.modules.verify.reports import emit_report
from src.modules.verify.schemas import CheckSpec, VerifyConfigFile
from src.modules.verify.service import VerificationService
from src.quadfield import (
    class_number_by_ideals,
    dump_field_document,
    embed_field,
    export_field_document,
    quad_field,
)
from src.regulators import cnf_lhs, regulator_bundle
from src.shared.config import config
from src.shared.exceptions import AppError, ConfigurationError

logger = logging.getLogger(__name__)


def _read_config_file(path: Optional[str]) -> VerifyConfigFile:
    if path is None:
        return VerifyConfigFile()
    try:
        return VerifyConfigFile.model_validate_json(Path(path).read_text())
    except OSError as exc:
        raise ConfigurationError(f"Cannot read config file {path}: {exc}") from exc
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or None
        raise ConfigurationError(
            f"Invalid config file {path}: {first['msg']}", field=location
        ) from exc


def resolve_options(args: argparse.Namespace) -> Dict[str, Any]:
    """Flags override the config file, which overrides built-in defaults."""
    file_options = _read_config_file(args.config).model_dump()
    defaults = {
        "checks": list(ClaimId),
        "d": list(DEFAULT_D),
        "p": list(DEFAULT_P),
        "n": list(DEFAULT_N),
        "prec": None,
        "sign_policy": SignPolicy.either,
        "euler_variant": list(EulerVariant),
        "p_power_variant": list(PPowerVariant),
        "format": ReportFormat.text,
        "stable": False,
        "field_file": [],
        "output": None,
        "workers": config.MAX_WORKERS,
    }
    options = {}
    for key, default in defaults.items():
        flag = getattr(args, key, None)
        if flag is not None:
            options[key] = flag
        elif file_options.get(key) is not None:
            options[key] = file_options[key]
        else:
            options[key] = default
    return options


def build_specs(options: Dict[str, Any]) -> List[CheckSpec]:
    documents = load_fields(options["field_file"])
    try:
        return [
            CheckSpec(
                claim=claim,
                d=options["d"],
                p=options["p"],
                n=options["n"],
                precision=options["prec"],
                sign_policy=options["sign_policy"],
                euler_variants=options["euler_variant"],
                p_power_variants=options["p_power_variant"],
                fields=documents,
            )
            for claim in options["checks"]
        ]
    except ValidationError as exc:
        message = exc.errors()[0]["msg"]
        raise ConfigurationError(f"Invalid check spec: {message}") from exc


def build_context(options: Dict[str, Any]) -> CheckContext:
    return CheckContext(
        signs=SignPolicy(options["sign_policy"]).signs,
        euler_variants=tuple(EulerVariant(v) for v in options["euler_variant"]),
        p_power_variants=tuple(PPowerVariant(v) for v in options["p_power_variant"]),
        slack=config.PRECISION_SLACK,
        precision=options["prec"],
        units_per_prime=config.RANDOM_UNITS_PER_PRIME,
        seed=config.RANDOM_SEED,
        exact_bound=config.EXACT_BERNOULLI_BOUND,
        k_ceiling=config.POWER_SUM_K_CEILING,
        guard=config.POWER_SUM_GUARD_DIGITS,
    )


def _write(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    Path(output).write_text(text)
    logger.info("Report written to %s", output)


def cmd_verify(args: argparse.Namespace) -> int:
    options = resolve_options(args)
    specs = build_specs(options)
    service = VerificationService(
        build_context(options), workers=options["workers"], stable=options["stable"]
    )
    reports = service.run(specs)
    notes = []
    if ClaimId.c27 in [spec.claim for spec in specs]:
        notes.append(DENOMINATOR_READING)
    _write(emit_report(reports, options["format"], notes=notes), options["output"])
    failures = [r for r in reports if r.is_failure]
    if failures:
        logger.warning("%s of %s grid point(s) failed", len(failures), len(reports))
        return 1
    return 0


def cmd_unit(args: argparse.Namespace) -> int:
    F = quad_field(args.d)
    print(f"{F} (d={F.d}): eps = ({F.x} + {F.y} sqrt {F.d})/2, norm {F.norm:+d}")
    return 0


def cmd_classnum(args: argparse.Namespace) -> int:
    F = quad_field(args.d)
    print(f"{F} (d={F.d}): h = {F.h}, h+ = {F.hplus}")
    print(f"ideal enumeration: h = {class_number_by_ideals(F.d)}")
    return 0


def cmd_bernoulli(args: argparse.Namespace) -> int:
    chi = kronecker_char(args.chi_d)
    print(f"B_{{{args.n},{chi}}} = {gen_bernoulli_exact(args.n, chi)}")
    print(f"L(1-{args.n}; {chi}) = {classical_L_value(args.n, chi)}")
    return 0


def cmd_lp(args: argparse.Namespace) -> int:
    chi = kronecker_char(args.d)
    print(f"L_p({chi}) at p={args.p}: {leopoldt_Lp(chi, args.p, args.prec)}")
    return 0


def cmd_regulator(args: argparse.Namespace) -> int:
    F = quad_field(args.d)
    field = embed_field(F, args.p, max(args.prec, args.n + 2))
    bundle = regulator_bundle(field, args.n)
    level, mod_p = cnf_lhs(field, args.n)
    print(f"{F} at p={args.p} ({bundle.sign_choice} embedding)")
    print(f"R_p          = {bundle.Rp} (v_p = {bundle.Rp.valuation_text()})")
    print(f"R^(p,{args.n})     = {bundle.Rpn}")
    print(f"R^(p)        = {bundle.Rp_mod_p}")
    print(f"2hR^(p,{args.n})/sqrt d = {level}")
    print(f"2hR^(p)/sqrt d   = {mod_p}")
    return 0


def cmd_export_field(args: argparse.Namespace) -> int:
    document = export_field_document(quad_field(args.d), args.p, args.prec)
    _write(dump_field_document(document), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-cnf",
        description="Verify p-adic class number congruences for real abelian fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Run congruence checks over a grid.")
    verify.add_argument(
        "--checks", nargs="+", type=ClaimId, metavar="CHK", help="Claim ids to run."
    )
    verify.add_argument("--d", nargs="*", type=int, help="Fundamental discriminants.")
    verify.add_argument("--p", nargs="*", type=int, help="Primes > 3.")
    verify.add_argument("--n", nargs="+", type=int, help="Levels n >= 1.")
    verify.add_argument("--prec", type=int, help="Working precision floor.")
    verify.add_argument("--sign-policy", dest="sign_policy", type=SignPolicy)
    verify.add_argument(
        "--euler-variant", dest="euler_variant", nargs="+", type=EulerVariant
    )
    verify.add_argument(
        "--p-power-variant", dest="p_power_variant", nargs="+", type=PPowerVariant
    )
    verify.add_argument("--format", type=ReportFormat)
    verify.add_argument(
        "--stable",
        action="store_true",
        default=None,
        help="Omit timings so identical runs give byte-identical output.",
    )
    verify.add_argument(
        "--field-file", dest="field_file", action="append", help="Field document."
    )
    verify.add_argument("--config", help="JSON file mirroring these flags.")
    verify.add_argument("--output", help="Write the report here instead of stdout.")
    verify.add_argument("--workers", type=int, help="Process pool size.")
    verify.set_defaults(handler=cmd_verify)

    unit = sub.add_parser("unit", help="Fundamental unit of Q(sqrt d).")
    unit.add_argument("--d", type=int, required=True)
    unit.set_defaults(handler=cmd_unit)

    classnum = sub.add_parser("classnum", help="Class numbers of Q(sqrt d).")
    classnum.add_argument("--d", type=int, required=True)
    classnum.set_defaults(handler=cmd_classnum)

    bernoulli = sub.add_parser("bernoulli", help="B_{n,chi} for chi = (d/.).")
    bernoulli.add_argument("--n", type=int, required=True)
    bernoulli.add_argument("--chi-d", dest="chi_d", type=int, required=True)
    bernoulli.set_defaults(handler=cmd_bernoulli)

    lp = sub.add_parser("lp", help="Leopoldt's defining sum for chi = (d/.).")
    lp.add_argument("--d", type=int, required=True)
    lp.add_argument("--p", type=int, required=True)
    lp.add_argument("--prec", type=int, default=3)
    lp.set_defaults(handler=cmd_lp)

    regulator = sub.add_parser("regulator", help="Regulators of Q(sqrt d) at p.")
    regulator.add_argument("--d", type=int, required=True)
    regulator.add_argument("--p", type=int, required=True)
    regulator.add_argument("--n", type=int, default=1)
    regulator.add_argument("--prec", type=int, default=5)
    regulator.set_defaults(handler=cmd_regulator)

    export = sub.add_parser(
        "export-field", help="Write the field document of Q(sqrt d)."
    )
    export.add_argument("--d", type=int, required=True)
    export.add_argument("--p", type=int, required=True)
    export.add_argument("--prec", type=int, default=8)
    export.add_argument("--output")
    export.set_defaults(handler=cmd_export_field)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except AppError as exc:
        logger.error("%s: %s", exc.code, exc.detail)
        print(f"{exc.code}: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except Exception:
        logger.exception("Unexpected error in %s", args.command)
        return 2
