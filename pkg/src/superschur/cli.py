"""
Command-line interface.

Usage:
    superschur validate ALGEBRA.json
    superschur info ALGEBRA.json
    superschur multiplier ALGEBRA.json [--representatives]
    superschur invariants ALGEBRA.json
    superschur capability ALGEBRA.json [--candidate a:1,b:-1/2 ...] [--no-center]
    superschur classify ALGEBRA.json [--key KEY]
    superschur catalog list [--json]
    superschur catalog emit KEY [--p P] [--m M --n N] [--out FILE]
    superschur scan KEY [VALUE ...]
    superschur verify-paper [--out FILE] [--seed N]

Exit codes: 0 success, 1 axiom or check failure, 2 parse or usage error,
3 engine disagreement.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from .algebra_file import AlgebraFileError, dumps_algebra, read_algebra
from .analysis import capability_report, classify_maximal_class, proposition_p1_predicate
from .catalog import CatalogAccessor, CatalogError, default_catalog, parameter_scan
from .config import VerifyConfig
from .homology import schur_multiplier, schur_multiplier_cochain_oracle
from .invariants import compute_invariants
from .report import run_verification
from .superalg import (
    EngineDisagreement,
    LieSuperalgebra,
    PreconditionError,
    SuperalgebraError,
    ValidationReport,
    Vector,
    ZERO,
    center,
    derived_subalgebra,
    format_scalar,
    is_maximal_class,
    is_nilpotent,
    is_trivial_ls,
    lower_central_series,
    nilpotency_class,
    to_scalar,
    validate,
)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_ENGINE = 3


def _dims(dims: tuple[int, int]) -> str:
    return f"({dims[0]}|{dims[1]})"


# =========================================================================
# FORMATTING
# =========================================================================


def format_validation(L: LieSuperalgebra, report: ValidationReport) -> str:
    lines = [f"{L.name} {_dims(L.dims)}"]
    for label, ok in (
        ("homogeneity", report.homogeneity_ok),
        ("antisymmetry", report.antisymmetry_ok),
        ("even squares", report.even_square_ok),
        ("super Jacobi", report.jacobi_ok),
    ):
        lines.append(f"  {label:<13} {'ok' if ok else 'FAILED'}")
    for violation in report.violations:
        lines.append(f"  - {violation}")
    lines.append("accepted" if report.accepted else "rejected")
    return "\n".join(lines)


def format_info(L: LieSuperalgebra) -> str:
    series = lower_central_series(L)
    cls = nilpotency_class(L)
    Z = center(L)
    lines = [
        str(L),
        f"  dims:               {_dims(L.dims)}",
        f"  L^2 dims:           {_dims(derived_subalgebra(L).dims)}",
        f"  lower central:      {' > '.join(_dims(term.dims) for term in series)}",
        f"  class:              {cls if cls is not None else 'not nilpotent'}",
        f"  center dims:        {_dims(Z.dims)}",
        f"  center:             {Z.format(L)}",
        f"  trivial ([L1,L1] = 0): {is_trivial_ls(L)}",
        f"  maximal class:      {is_maximal_class(L)}",
    ]
    return "\n".join(lines)


def format_multiplier(L: LieSuperalgebra, representatives: bool = False) -> str:
    """
    Raises:
        EngineDisagreement: If the chain engine and the cochain oracle differ
    """
    result = schur_multiplier(L)
    oracle = schur_multiplier_cochain_oracle(L)
    if result.dims != oracle:
        raise EngineDisagreement(f"{L.name}: chain engine {result.dims}, cochain oracle {oracle}")
    lines = [
        f"M({L.name}) = {result.type_label}",
        f"  chain engine:   {_dims(result.dims)}",
        f"  cochain oracle: {_dims(oracle)}",
    ]
    if representatives:
        lines.append(f"  {result}")
        for label, reps in result.format_representatives().items():
            lines.append(f"  {label} representatives: {', '.join(reps) or '-'}")
    return "\n".join(lines)


def format_invariants(L: LieSuperalgebra) -> str:
    report = compute_invariants(L)
    s = report.s_inv if report.s_inv is not None else report.s_note
    lines = [
        f"{report.name} {_dims(report.dims)}",
        f"  L^2 dims:     {_dims(report.derived_dims)}",
        f"  M(L):         A{_dims(report.multiplier_dims)}, dim {report.multiplier_dim}",
        f"  t:            {report.t}",
        f"  s:            {s}",
        "  bound checks:",
    ]
    lines.extend(f"    {check}" for check in report.bound_checks)
    for check in report.bound_checks:
        lines.extend(f"    warning: {w}" for w in check.warnings)
    verdict = proposition_p1_predicate(L)
    if verdict.computed:
        lines.append(f"  dim L^2 = dim M(L) = m+n-2: candidates {', '.join(verdict.candidates)}")
    return "\n".join(lines)


def format_capability(L: LieSuperalgebra, candidates: Sequence[Vector], include_center: bool) -> str:
    report = capability_report(L, candidates, include_center=include_center)
    lines = [f"{report.name}: center dims {_dims(report.center_dims)}"]
    for c in report.candidates:
        verdict = "injective (x in Z*(L))" if c.injective else f"kernel dim {c.kernel_dim}"
        lines.append(
            f"  <{c.label}> ({c.parity}): {verdict}; dim M {c.source_dim} -> {c.target_dim}, "
            f"dim(<x> ∩ L^2) = {c.intersection_dim}"
        )
    lines.append(f"conclusion: {report.summary()}")
    if report.conclusion != "not capable" and not report.exhaustive:
        lines.append(f"  note: {report.exhaustiveness_note}")
    return "\n".join(lines)


def format_classification(L: LieSuperalgebra, key: str | None) -> str:
    result = classify_maximal_class(L, key=key)
    lines = [
        f"{result.name}: s = {result.s}",
        f"  bucket members:     {', '.join(result.bucket_members) or '-'}",
        f"  fingerprint match:  {', '.join(result.fingerprint_matches) or '-'} ({result.disclaimer})",
    ]
    lines.extend(f"  {note}" for note in result.notes)
    return "\n".join(lines)


def format_catalog(catalog: CatalogAccessor, as_json: bool = False) -> str:
    rows = []
    for entry in catalog.entries():
        rows.append(
            {
                "key": entry.key,
                "family": entry.family,
                "kind": entry.kind,
                "dims": list(entry.dims),
                "params": {k: str(v) for k, v in entry.params.items()},
                "claimed_dim": entry.claimed_multiplier_dim,
                "claimed_type": entry.claimed_type_label,
                "s_bucket": entry.claimed_s_bucket,
                "note": entry.note,
            }
        )
    if as_json:
        return json.dumps({"entries": rows}, ensure_ascii=False, indent=2)

    lines = ["Catalog", "=" * 60]
    for row in rows:
        claim = f"claimed {row['claimed_type']} (dim {row['claimed_dim']})" if row["claimed_dim"] is not None else "no claim"
        params = ", ".join(f"{k}={v}" for k, v in row["params"].items())
        lines.append(f"\n{row['key']}  ({row['dims'][0]}|{row['dims'][1]})  [{row['family']}]")
        lines.append(f"  {claim}" + (f", s-bucket {row['s_bucket']}" if row["s_bucket"] is not None else ""))
        if params:
            lines.append(f"  params: {params}")
        if row["note"]:
            lines.append(f"  note: {row['note']}")
    lines.append(f"\n{'=' * 60}")
    lines.append(f"Summary: {len(rows)} entries")
    return "\n".join(lines)


def parse_candidate(L: LieSuperalgebra, text: str) -> Vector:
    """
    Parse "name[:coeff],..." into a coordinate vector, e.g. "a:1,b:-1/2".

    Raises:
        ValueError: Unknown basis name or bad coefficient
    """
    vector = [ZERO] * L.dim
    for term in text.split(","):
        term = term.strip()
        if not term:
            continue
        name, _, raw = term.partition(":")
        if name not in L.names:
            raise ValueError(f"unknown basis name {name!r} in candidate {text!r}")
        vector[L.index(name)] += to_scalar(raw) if raw else to_scalar(1)
    return tuple(vector)


# =========================================================================
# COMMANDS
# =========================================================================


def _load_valid(path: str) -> LieSuperalgebra | None:
    """Read an algebra and check its axioms; None (after printing) when rejected."""
    L = read_algebra(path)
    report = validate(L)
    if not report.accepted:
        print(format_validation(L, report), file=sys.stderr)
        return None
    return L


def cmd_validate(args: argparse.Namespace) -> int:
    L = read_algebra(args.path)
    report = validate(L)
    print(format_validation(L, report))
    return EXIT_OK if report.accepted else EXIT_FAILED


def cmd_info(args: argparse.Namespace) -> int:
    L = _load_valid(args.path)
    if L is None:
        return EXIT_FAILED
    print(format_info(L))
    return EXIT_OK


def cmd_multiplier(args: argparse.Namespace) -> int:
    L = _load_valid(args.path)
    if L is None:
        return EXIT_FAILED
    print(format_multiplier(L, args.representatives))
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    L = _load_valid(args.path)
    if L is None:
        return EXIT_FAILED
    print(format_invariants(L))
    return EXIT_OK


def cmd_capability(args: argparse.Namespace) -> int:
    L = _load_valid(args.path)
    if L is None:
        return EXIT_FAILED
    try:
        candidates = [parse_candidate(L, text) for text in args.candidate]
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_PARSE
    print(format_capability(L, candidates, include_center=not args.no_center))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    L = _load_valid(args.path)
    if L is None:
        return EXIT_FAILED
    print(format_classification(L, args.key))
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    catalog = default_catalog()
    if args.action == "list":
        print(format_catalog(catalog, as_json=args.json))
        return EXIT_OK

    if args.key is None:
        print("Error: catalog emit needs a KEY", file=sys.stderr)
        return EXIT_PARSE
    L = catalog.build(args.key, p=args.p, m=args.m, n=args.n)
    text = dumps_algebra(L)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {L.name} to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    values = args.values or list(VerifyConfig().scan_values)
    rows = parameter_scan(args.key, values)
    print(f"{args.key}: multiplier over p")
    for row in rows:
        line = f"  p = {format_scalar(row.p):<6} A{_dims(row.dims)}"
        if row.exceptional:
            line += f"  exceptional, cochain oracle {_dims(row.oracle_dims)}"
        print(line)
    if not all(row.confirmed for row in rows):
        raise EngineDisagreement(f"{args.key}: cochain oracle disagrees on an exceptional value")
    return EXIT_OK


def cmd_verify_paper(args: argparse.Namespace) -> int:
    config = VerifyConfig.from_env() if args.seed is None else VerifyConfig(seed=args.seed)
    report = run_verification(config)
    csv_path = report.write(Path(args.out))
    print(report.render_text(), end="")
    print(f"wrote {args.out} and {csv_path}")
    return report.exit_code


# =========================================================================
# ENTRY POINT
# =========================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superschur",
        description="Schur multipliers and invariants of Lie superalgebras over Q",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("validate", cmd_validate, "Check the axioms of an algebra file"),
        ("info", cmd_info, "Series, center and class of an algebra"),
        ("invariants", cmd_invariants, "t, s and the bound checks"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", help="Algebra JSON file")
        p.set_defaults(func=func)

    p = sub.add_parser("multiplier", help="Schur multiplier by both engines")
    p.add_argument("path", help="Algebra JSON file")
    p.add_argument("--representatives", action="store_true", help="Print representative cycles")
    p.set_defaults(func=cmd_multiplier)

    p = sub.add_parser("capability", help="Epicenter evidence for central lines")
    p.add_argument("path", help="Algebra JSON file")
    p.add_argument(
        "--candidate",
        action="append",
        default=[],
        metavar="NAME[:COEFF],...",
        help="Central homogeneous vector, e.g. a:1,b:-1/2 (repeatable)",
    )
    p.add_argument("--no-center", action="store_true", help="Test only the given candidates")
    p.set_defaults(func=cmd_capability)

    p = sub.add_parser("classify", help="s-bucket placement of a maximal-class algebra")
    p.add_argument("path", help="Algebra JSON file")
    p.add_argument("--key", help="Catalog key to compare the published placement with")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", help="List or export catalog algebras")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("key", nargs="?", help="Catalog key (emit)")
    p.add_argument("--p", help="Parameter of the one-parameter families (rational > 0)")
    p.add_argument("--m", type=int, help="Even dimension for A and H(1,0)+A")
    p.add_argument("--n", type=int, help="Odd dimension for A and H(1,0)+A")
    p.add_argument("--out", help="Output file (default: stdout)")
    p.add_argument("--json", action="store_true", help="List as JSON")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("scan", help="Multiplier of a p-family over parameter values")
    p.add_argument("key", help="Catalog key of a one-parameter family")
    p.add_argument("values", nargs="*", help="Values of p (default: 1/4 1/3 1/2 1 2 3)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-paper", help="Compare published claims with computed values")
    p.add_argument("--out", default="verify_report.txt", help="Text report path; the CSV goes next to it")
    p.add_argument("--seed", type=int, help="Random seed (default: $SUPERSCHUR_SEED or 0)")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(name)s:%(levelname)s:%(message)s")

    try:
        return args.func(args)
    except AlgebraFileError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (CatalogError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except EngineDisagreement as e:
        log.error("engine disagreement: %s", e)
        print(f"Internal error: {e}", file=sys.stderr)
        return EXIT_ENGINE
    except (PreconditionError, SuperalgebraError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
