"""Command-line interface.

Subcommands: analyze, verify, family (incl. `family sweep`), isoclinic.
Exit codes: 0 success, 2 when a verification found counterexamples or a sweep
found violations, 1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import AnalysisConfig
from .chartable import character_degrees
from .corpus import (
    AnalysisCache,
    analyze_corpus,
    analyze_group_file,
    group_file_from_group,
    load_corpus,
    resolve_group_ref,
)
from .errors import GdsError
from .families import Family, FamilySpec, family_invariants, sweep_all, sweep_family
from .isoclinism import are_isoclinic, multiplicity_proportion_check
from .verifier import CLAIM_IDS, evaluate_claim, verify_claims


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gds",
        description="Exact character degree sums and commuting probabilities of finite groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="print the full analysis record of one group")
    p_analyze.add_argument("group", help="builtin:<spec> or a path to a JSON group file")
    p_analyze.add_argument("--cache-dir", default=None)

    p_verify = sub.add_parser("verify", help="run the claim suite over a corpus")
    p_verify.add_argument("--claims", default="all", help="comma-separated claim ids or 'all'")
    p_verify.add_argument("--corpus", required=True, help="directory of JSON group files")
    p_verify.add_argument("--max-order", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--out", default=None, help="write a JSONL report here")
    p_verify.add_argument("--cache-dir", default=None)

    p_family = sub.add_parser("family", help="family formulas and parameter sweeps")
    p_family.add_argument("mode", nargs="?", choices=["sweep"], default=None)
    p_family.add_argument("--name", default=None, help="family name (e.g. psl2, suzuki)")
    p_family.add_argument("--q", type=int, default=None)
    p_family.add_argument("--q-max", type=int, default=1024)
    p_family.add_argument("--out", default=None, help="write sweep rows as JSONL here")

    p_iso = sub.add_parser("isoclinic", help="decide isoclinism of two groups")
    p_iso.add_argument("group1")
    p_iso.add_argument("group2")
    return parser


def _parse_family(name: str) -> Family:
    for fam in Family:
        if fam.value == name:
            return fam
    raise GdsError(f"unknown family {name!r}; choose from "
                   + ", ".join(f.value for f in Family))


def _cmd_analyze(args) -> int:
    G = resolve_group_ref(args.group)
    gf = group_file_from_group(G)
    cache = AnalysisCache(args.cache_dir) if args.cache_dir else None
    record = analyze_group_file(gf, AnalysisConfig(), cache)
    print(json.dumps(record.to_json_dict(), sort_keys=True, indent=2))
    return 0


def _cmd_verify(args) -> int:
    if args.claims.strip() == "all":
        claim_ids = CLAIM_IDS
    else:
        claim_ids = tuple(c.strip() for c in args.claims.split(",") if c.strip())
        unknown = [c for c in claim_ids if c not in CLAIM_IDS]
        if unknown:
            raise GdsError(f"unknown claim ids: {', '.join(unknown)}")
    group_files = load_corpus(Path(args.corpus))
    if args.max_order is not None:
        kept = []
        for gf in group_files:
            from .corpus import build_group

            G = build_group(gf)
            if G.order <= args.max_order:
                kept.append(gf)
        group_files = kept
    config = AnalysisConfig()
    cache = AnalysisCache(args.cache_dir)
    records = analyze_corpus(group_files, config, jobs=args.jobs, cache=cache)
    reports = verify_claims(records, claim_ids, config)
    lines = []
    for claim_id in claim_ids:
        for record in records:
            triggered, ok, detail = evaluate_claim(claim_id, record, config)
            row = {
                "type": "result",
                "claim": claim_id,
                "group": record.name,
                "triggered": bool(triggered),
                "ok": bool(ok),
            }
            if detail:
                row["detail"] = detail
            lines.append(json.dumps(row, sort_keys=True))
    for report in reports:
        lines.append(json.dumps(report.to_json_dict(), sort_keys=True))
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    bad = [r for r in reports if not r.clean]
    for report in reports:
        status = "ok" if report.clean else f"{len(report.counterexamples)} COUNTEREXAMPLES"
        print(
            f"{report.claim_id}: checked {report.groups_checked}, "
            f"triggered {report.hypotheses_triggered}, {status}",
            file=sys.stderr,
        )
    return 2 if bad else 0


def _cmd_family(args) -> int:
    if args.mode == "sweep":
        if args.name is not None:
            rows, violations = sweep_family(_parse_family(args.name), q_max=args.q_max)
        else:
            rows, violations = sweep_all(q_max=args.q_max)
        lines = [json.dumps(r.to_json_dict(), sort_keys=True) for r in rows]
        text = "\n".join(lines) + "\n"
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        for v in violations:
            print(v, file=sys.stderr)
        print(
            f"swept {len(rows)} parameters, {len(violations)} violations",
            file=sys.stderr,
        )
        return 2 if violations else 0
    if args.name is None or args.q is None:
        raise GdsError("family needs --name and --q (or the 'sweep' mode)")
    inv = family_invariants(FamilySpec(_parse_family(args.name), args.q))
    print(
        json.dumps(
            {
                "family": inv.spec.family.value,
                "q": inv.spec.q,
                "order": inv.order,
                "class_number": inv.class_number,
                "class_number_exact": inv.class_number_exact,
                "d_num": inv.d_value.numerator,
                "d_den": inv.d_value.denominator,
                "d_exact": inv.d_exact,
                "largest_prime": inv.largest_prime,
            },
            sort_keys=True,
            indent=2,
        )
    )
    return 0


def _cmd_isoclinic(args) -> int:
    G = resolve_group_ref(args.group1)
    H = resolve_group_ref(args.group2)
    verdict = are_isoclinic(G, H)
    proportion = multiplicity_proportion_check(
        G, H, character_degrees(G), character_degrees(H)
    )
    print(
        json.dumps(
            {
                "group1": G.name,
                "group2": H.name,
                "isoclinic": verdict,
                "proportion_ok": proportion.ok,
                "degree_sum_ratio_equal": proportion.degree_sum_ratio_equal,
                "details": [list(row) for row in proportion.details],
            },
            sort_keys=True,
            indent=2,
        )
    )
    return 0


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "family":
            return _cmd_family(args)
        if args.command == "isoclinic":
            return _cmd_isoclinic(args)
    except GdsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    return 1


def main() -> None:
    raise SystemExit(run_cli())
