"""Command-line surface.

Subcommands: index, classify, lefschetz, count, validate, verify.  Every
subcommand accepts a positional scenario path or --fixture NAME, plus
--precision and --format json|table.  Exit codes: 0 success, 1 domain
error, 2 parse/usage/IO error.  Domain errors print a machine-readable
error object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GermIndexError, NonIsolated, ParseError, ScenarioError
from .germs import branches, classify_branch, decompose, iterate, local_index
from .oracle import fixed_index_positive, fixed_multiplicity
from .reports import emit_json, jsonable, render_table
from .scenario import FIXTURE_NAMES, Scenario, load_fixture, load_scenario_file
from .surface import (
    count_isolated_periodic,
    lefschetz_number,
    validate_periodic_inventory,
)


def _common(sub: argparse.ArgumentParser):
    sub.add_argument("scenario", nargs="?", help="path to a scenario JSON document")
    sub.add_argument("--fixture", choices=FIXTURE_NAMES,
                     help="use a bundled fixture instead of a scenario path")
    sub.add_argument("--precision", type=int, default=None,
                     help="truncation degree override")
    sub.add_argument("--format", choices=("json", "table"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="germindex",
        description="Exact fixed-point indices, curve classification and "
                    "periodic-point counts for plane germs and surface models.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("index", help="local index report for a germ")
    _common(p)
    p.add_argument("--germ", help="germ label (defaults to the only germ)")
    p.add_argument("--n", type=int, default=1, help="iterate to analyze")

    p = subs.add_parser("classify", help="branch classification table")
    _common(p)
    p.add_argument("--germ", help="restrict to one germ label")

    p = subs.add_parser("lefschetz", help="Lefschetz numbers over a range")
    _common(p)
    p.add_argument("--n-range", required=True, help="inclusive range a..b")

    p = subs.add_parser("count", help="isolated periodic point counts")
    _common(p)
    p.add_argument("--n-range", required=True, help="inclusive range a..b")

    p = subs.add_parser("validate", help="inventory and witness validation")
    _common(p)

    p = subs.add_parser("verify", help="cross-run the elimination oracle "
                                       "against the germ engine")
    _common(p)
    p.add_argument("--n-max", type=int, default=2)
    return parser


def _load(args) -> Scenario:
    if args.fixture and args.scenario:
        raise ScenarioError("give either a scenario path or --fixture, not both")
    if args.fixture:
        return load_fixture(args.fixture, precision=args.precision)
    if args.scenario:
        return load_scenario_file(args.scenario, precision=args.precision)
    raise ScenarioError("no input: give a scenario path or --fixture")


def _pick_germ(scn: Scenario, label: str | None):
    if label is not None:
        if label not in scn.germs:
            raise ScenarioError(f"unknown germ {label!r}; available: "
                                f"{', '.join(sorted(scn.germs))}")
        return label, scn.germs[label]
    if len(scn.germs) == 1:
        return next(iter(scn.germs.items()))
    if "origin" in scn.germs:
        return "origin", scn.germs["origin"]
    raise ScenarioError("scenario has several germs; pick one with --germ")


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError as exc:
        raise ScenarioError(f"bad range {text!r}, expected a..b") from exc
    if lo < 1:
        raise ScenarioError(f"range {text!r} must start at 1 or later")
    return range(lo, hi + 1)  # hi < lo yields an empty range


def cmd_index(args) -> tuple[int, str]:
    scn = _load(args)
    label, germ = _pick_germ(scn, args.germ)
    report = local_index(iterate(germ, args.n))
    payload = {"germ": label, "n": args.n, **jsonable(report)}
    if args.format == "json":
        return 0, emit_json(payload)
    rows = [dict(germ=label, n=args.n, delta=report.delta, nu_A=report.nu_A)]
    text = render_table(rows, ["germ", "n", "delta", "nu_A"])
    if report.branches:
        text += "\n\n" + render_table(
            [jsonable(b) for b in report.branches],
            ["factor", "nu_p", "type", "mu_p"])
    return 0, text


def cmd_classify(args) -> tuple[int, str]:
    scn = _load(args)
    labels = [args.germ] if args.germ else sorted(scn.germs)
    rows = []
    for label in labels:
        if label not in scn.germs:
            raise ScenarioError(f"unknown germ {label!r}")
        dec = decompose(scn.germs[label])
        for b in branches(dec):
            done = classify_branch(dec, b)
            rows.append({
                "germ": label,
                "factor": done.defining_polynomial,
                "nu_p": done.nu_p,
                "type": done.branch_type,
                "mu_p": done.mu_p,
            })
    curve_rows = []
    if scn.model is not None:
        for c in scn.model.curves:
            curve_rows.append({
                "curve": c.label,
                "prime_period": c.prime_period,
                "type": c.curve_type,
                "nu_C": c.nu_C,
                "tau": c.self_intersection,
            })
    if args.format == "json":
        return 0, emit_json({"branches": rows, "curves": curve_rows})
    text = render_table(rows, ["germ", "factor", "nu_p", "type", "mu_p"])
    if curve_rows:
        text += "\n\n" + render_table(
            curve_rows, ["curve", "prime_period", "type", "nu_C", "tau"])
    return 0, text


def cmd_lefschetz(args) -> tuple[int, str]:
    scn = _load(args)
    model = scn.require_model()
    rows = [{"n": n, "lefschetz": lefschetz_number(model.action, n)}
            for n in _parse_range(args.n_range)]
    if args.format == "json":
        return 0, emit_json(rows)
    return 0, render_table(rows, ["n", "lefschetz"])


def cmd_count(args) -> tuple[int, str]:
    scn = _load(args)
    model = scn.require_model()
    reports = [count_isolated_periodic(model, n) for n in _parse_range(args.n_range)]
    rows = [{
        "n": r.n,
        "lefschetz": r.lefschetz,
        "xi": r.xi_breakdown,
        "isolated_periodic": r.count_isolated,
        "algebraically_stable": r.algebraically_stable,
        "growth_ok": None if r.growth is None else r.growth.within_bound,
    } for r in reports]
    if args.format == "json":
        return 0, emit_json(rows)
    if not rows:
        return 0, "(empty)"
    return 0, render_table(
        rows, ["n", "lefschetz", "xi", "isolated_periodic",
               "algebraically_stable", "growth_ok"])


def cmd_validate(args) -> tuple[int, str]:
    scn = _load(args)
    model = scn.require_model()
    witness_issues = model.validate()
    violations = validate_periodic_inventory(model, scn.intersections)
    payload = {
        "witness_issues": witness_issues,
        "violations": jsonable(violations),
        "algebraically_stable": model.action.algebraically_stable,
    }
    if args.format == "json":
        return 0, emit_json(payload)
    lines = [f"algebraic stability asserted: {model.action.algebraically_stable}"]
    if not witness_issues and not violations:
        lines.append("no violations")
    for issue in witness_issues:
        lines.append(f"witness: {issue}")
    for v in violations:
        lines.append(f"{v.kind}: {v.message}")
    return 0, "\n".join(lines)


def cmd_verify(args) -> tuple[int, str]:
    scn = _load(args)
    checks = []
    for label in sorted(scn.germs):
        origin = scn.germ_origins.get(label)
        if origin is None or origin.map_label is None:
            continue
        pmap = scn.maps[origin.map_label]
        point = origin.base_point
        germ = scn.germs[label]
        for n in range(1, args.n_max + 1):
            report = local_index(iterate(germ, n))
            if report.branches:
                oracle = fixed_index_positive(pmap, point, n)
                agree = oracle == (report.nu_A > 0)
                checks.append({
                    "germ": label, "n": n, "check": "index_positivity",
                    "engine": report.nu_A, "oracle": oracle, "agree": agree,
                })
            else:
                try:
                    mult = fixed_multiplicity(pmap, point, n)
                except NonIsolated:
                    checks.append({
                        "germ": label, "n": n, "check": "multiplicity",
                        "engine": report.nu_A, "oracle": "non-isolated",
                        "agree": False,
                    })
                    continue
                checks.append({
                    "germ": label, "n": n, "check": "multiplicity",
                    "engine": report.nu_A, "oracle": mult,
                    "agree": mult == report.nu_A,
                })
    ok = all(c["agree"] for c in checks)
    if args.format == "json":
        return (0 if ok else 1), emit_json({"checks": checks, "all_agree": ok})
    text = render_table(checks, ["germ", "n", "check", "engine", "oracle", "agree"])
    return (0 if ok else 1), text


_COMMANDS = {
    "index": cmd_index,
    "classify": cmd_classify,
    "lefschetz": cmd_lefschetz,
    "count": cmd_count,
    "validate": cmd_validate,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        code, text = _COMMANDS[args.command](args)
    except (ParseError, ScenarioError) as exc:
        print(json.dumps({"error": {"kind": type(exc).__name__,
                                    "message": str(exc)}}), file=sys.stderr)
        return 2
    except GermIndexError as exc:
        print(json.dumps({"error": {"kind": type(exc).__name__,
                                    "message": str(exc)}}), file=sys.stderr)
        return 1
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
