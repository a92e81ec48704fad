"""Command-line entry point: ``weightone {census,modular,catalog,roots}``.

Exit codes: 0 success, 1 internal verification failure, 2 usage error,
3 size-guard refusal.  Machine output goes to stdout (or --out); summary
lines go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import catalog, census, qseries, rootcheck
from .exactnum import fmt_rational

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
FORMATS = ("json", "csv", "table")


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump_table(header, rows) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) if rows else len(str(h)) for i, h in enumerate(header)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def solution_to_json(sol: census.CensusSolution) -> dict:
    return {
        "total_sdim": sol.total_sdim,
        "ratio": fmt_rational(sol.ratio),
        "purely_even": sol.purely_even,
        "components": [
            {
                "algebra": c.algebra.name,
                "level": c.level,
                "sdim": c.algebra.sdim,
                "h_dual": fmt_rational(c.algebra.h_dual),
            }
            for c in sol.components
        ],
    }


def report_to_json(rep: census.CensusReport) -> dict:
    return {
        "central_charge": rep.central_charge,
        "shift": rep.shift,
        "sdim_range": [rep.sdim_lo, rep.sdim_hi],
        "count_total": rep.count_total,
        "count_purely_even": rep.count_purely_even,
        "count_super": rep.count_super,
        "count_bare_algebras": rep.count_bare_algebras,
        "max_total_sdim": rep.max_total_sdim,
        "excluded": ["V1 = 0", "sdim(V1) = 24"],
        "solutions": [solution_to_json(s) for s in rep.solutions],
    }


def render_report(rep: census.CensusReport, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(report_to_json(rep))
    header = ["total_sdim", "ratio", "purely_even", "components"]
    rows = [[s.total_sdim, fmt_rational(s.ratio), str(s.purely_even).lower(), s.label()] for s in rep.solutions]
    if fmt == "csv":
        return _dump_csv(header, rows)
    return _dump_table(header, rows)


def _emit(text: str, out: str | None, meta: dict):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)
    # timing lives in a sidecar so the payload stays byte-reproducible
    with open(out + ".meta.json", "w", encoding="utf-8") as fh:
        fh.write(_dump_json(meta))


def cmd_census(args) -> int:
    if args.max_sdim is not None and args.max_sdim < 1:
        print("error: --max-sdim must be positive", file=sys.stderr)
        return EXIT_USAGE
    rep = census.solve_weight_one(
        args.central_charge, args.precision, shards=args.shards, sdim_hi=args.max_sdim
    )
    bad = [s for s in rep.solutions if not census.verify_solution(s, rep.shift)]
    print(rep.summary(), file=sys.stderr)
    print("(V1 = 0 and sdim(V1) = 24 are excluded from the census)", file=sys.stderr)
    if bad:
        print(f"verification failed for {len(bad)} solutions, e.g. {bad[0].label()}", file=sys.stderr)
        return EXIT_VERIFY
    args._payload = render_report(rep, args.format)
    return EXIT_OK


def modular_payload(precision: int) -> tuple[dict, dict]:
    series = {
        "E2": qseries.eisenstein(2, precision),
        "E4": qseries.eisenstein(4, precision),
        "E6": qseries.eisenstein(6, precision),
        "E14": qseries.eisenstein(14, precision),
        "Delta": qseries.delta(precision),
        "j_cube_root": qseries.j_cube_root(precision),
    }
    relation = qseries.derive_fundamental_relation(precision)
    ratio = qseries.weight14_constraint(precision).a1_over_a0
    sc = {c: qseries.supercharacter_dimension(c, precision) for c in (8, 16)}
    e4, e6 = series["E4"], series["E6"]
    checks = {
        "delta_cusp_monic": series["Delta"][0] == 0 and series["Delta"][1] == 1,
        "E14_equals_E4sq_E6": (e4 * e4 * e6).coeffs == series["E14"].coeffs,
        "j_cube_root_cubed": (series["j_cube_root"] ** 3).coeffs == qseries.j_invariant(precision).coeffs,
        "weight14_one_dimensional": qseries.dim_modular_forms(14) == 1,
        "relation_vanishes_at_24": relation(24) == 0,
        "supercharacter_doubling": sc[16] == 2 * sc[8],
    }
    payload = {
        "precision": precision,
        "series": {k: v.to_json() for k, v in series.items()},
        "dim_modular_forms": {str(w): qseries.dim_modular_forms(w) for w in range(0, 25, 2)},
        "weight14_ratio": fmt_rational(ratio),
        "fundamental_relation": relation.pretty(),
        "fundamental_relation_coeffs": [fmt_rational(c) for c in relation.coeffs],
        "supercharacter_dimension": {str(c): v for c, v in sc.items()},
        "checks": checks,
    }
    return payload, {k: str(v) for k, v in series.items()}


def cmd_modular(args) -> int:
    if args.precision < 3:
        print("error: --precision must be at least 3", file=sys.stderr)
        return EXIT_USAGE
    payload, pretty = modular_payload(args.precision)
    if args.format == "json":
        text = _dump_json(payload)
    else:
        rows = [[k, v] for k, v in pretty.items()]
        rows += [[f"dim M_{w}", d] for w, d in payload["dim_modular_forms"].items()]
        rows += [
            ["weight14 a1/a0", payload["weight14_ratio"]],
            ["killing / <u,v>", payload["fundamental_relation"]],
            ["sdim(V1) at c=8", payload["supercharacter_dimension"]["8"]],
            ["sdim(V1) at c=16", payload["supercharacter_dimension"]["16"]],
        ]
        rows += [[f"check {k}", str(v).lower()] for k, v in payload["checks"].items()]
        text = (_dump_csv if args.format == "csv" else _dump_table)(["quantity", "value"], rows)
    failed = [k for k, ok in payload["checks"].items() if not ok]
    if failed:
        print(f"identity checks failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_VERIFY
    print(f"modular: all {len(payload['checks'])} identity checks passed", file=sys.stderr)
    args._payload = text
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.max_sdim < 1:
        print("error: --max-sdim must be positive", file=sys.stderr)
        return EXIT_USAGE
    algebras = catalog.enumerate_catalog(args.max_sdim)
    minval, minalg = catalog.min_sdim_over_hsq(algebras)
    cutoffs = catalog.family_cutoffs()
    rows = [
        {
            "algebra": a.name,
            "dim_even": a.dim_even,
            "dim_odd": a.dim_odd,
            "sdim": a.sdim,
            "h_dual": fmt_rational(a.h_dual),
            "killing_multiplier": fmt_rational(catalog.killing_multiplier(a)),
            "sdim_over_hsq": fmt_rational(catalog.sdim_over_hsq(a)),
            "eligible": catalog.is_eligible(a),
        }
        for a in algebras
    ]
    print(
        f"catalog: {len(rows)} members with sdim <= {args.max_sdim}; "
        f"min sdim/h^2 = {fmt_rational(minval)} at {minalg.name}",
        file=sys.stderr,
    )
    if args.format == "json":
        args._payload = _dump_json(
            {
                "max_sdim": args.max_sdim,
                "algebras": rows,
                "min_sdim_over_hsq": {"value": fmt_rational(minval), "algebra": minalg.name},
                "family_cutoffs": cutoffs,
            }
        )
        return EXIT_OK
    header = list(rows[0]) if rows else ["algebra"]
    body = [[str(r[h]).lower() if isinstance(r[h], bool) else r[h] for h in header] for r in rows]
    args._payload = (_dump_csv if args.format == "csv" else _dump_table)(header, body)
    return EXIT_OK


def roots_payload(family: str, p1: int, p2: int) -> dict:
    rd = rootcheck.build_root_datum(family, p1, p2)
    return {
        "root_datum": rd.to_json(),
        "norm_signs": rootcheck.norm_sign_report(rd).to_json(),
        "defect": rootcheck.defect_bruteforce(rd),
        "positivity_obstruction": rootcheck.positivity_obstruction(rd),
        "killing_degenerate": rd.killing_degenerate,
    }


def cmd_roots(args) -> int:
    try:
        payload = roots_payload(args.family, args.p1, args.p2)
    except rootcheck.RootDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except rootcheck.GuardRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    label = payload["root_datum"]["label"]
    print(f"{label}: defect {payload['defect']}, obstruction {payload['positivity_obstruction']}", file=sys.stderr)
    if args.format == "json":
        args._payload = _dump_json(payload)
        return EXIT_OK
    signs = payload["norm_signs"]
    rows = [
        ["label", label],
        ["even_roots", len(payload["root_datum"]["even_roots"])],
        ["odd_roots", len(payload["root_datum"]["odd_roots"])],
        ["form_scale", payload["root_datum"]["form_scale"]],
        ["has_positive_even", str(signs["has_positive_even"]).lower()],
        ["has_negative_even", str(signs["has_negative_even"]).lower()],
        ["has_isotropic_odd", str(signs["has_isotropic_odd"]).lower()],
        ["defect", payload["defect"]],
        ["positivity_obstruction", str(payload["positivity_obstruction"]).lower()],
    ]
    args._payload = (_dump_csv if args.format == "csv" else _dump_table)(["quantity", "value"], rows)
    return EXIT_OK


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, metavar="FILE")
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="weightone", parents=[common], description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", parents=[common], help="enumerate weight-one structures")
    c.add_argument("--central-charge", type=int, choices=(8, 16, 24), default=24)
    c.add_argument("--max-sdim", type=int, default=None)
    c.add_argument("--shards", type=_positive_int, default=1)
    c.set_defaults(func=cmd_census)

    m = sub.add_parser("modular", parents=[common], help="q-expansion identities")
    m.set_defaults(func=cmd_modular)

    k = sub.add_parser("catalog", parents=[common], help="dump the algebra catalog")
    k.add_argument("--max-sdim", type=int, default=census.PAPER_SDIM_BOUND)
    k.set_defaults(func=cmd_catalog)

    r = sub.add_parser("roots", parents=[common], help="root data, defect and norm signs")
    r.add_argument("family", choices=("sl", "osp"))
    r.add_argument("p1", type=int)
    r.add_argument("p2", type=int)
    r.set_defaults(func=cmd_roots)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "table")
    args.out = getattr(args, "out", None)
    args.precision = getattr(args, "precision", qseries.DEFAULT_PRECISION)
    started = time.perf_counter()
    code = args.func(args)
    if code == EXIT_OK:
        meta = {
            "argv": sys.argv[1:] if argv is None else list(argv),
            "elapsed_seconds": round(time.perf_counter() - started, 6),
        }
        _emit(args._payload, args.out, meta)
    return code


if __name__ == "__main__":
    sys.exit(main())
