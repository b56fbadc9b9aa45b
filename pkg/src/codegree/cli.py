"""Command-line entry points: cod, solve, verify-lemma, verify-theorem."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .catalog import GroupId
from .chartab import codegrees_of_table, parse_table
from .diophantine import ExprFamily, solve
from .elimination import DEFAULT_SAMPLES, replay_lemma
from .factored_int import parse_factored
from .finale import verify_main_theorem


def cod_main(argv: Optional[list[str]] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="cod",
        description="Print the codegree set of a character table file.")
    ap.add_argument("--table", required=True, metavar="FILE",
                    help="character table in the line-oriented text format")
    args = ap.parse_args(argv)
    with open(args.table, "rb") as fh:
        table = parse_table(fh.read())
    for element in codegrees_of_table(table):
        print(element)
    return 0


def solve_main(argv: Optional[list[str]] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="solve",
        description="Solve one parametric codegree equation for a target.")
    ap.add_argument("--family", required=True,
                    choices=[f.value for f in ExprFamily])
    ap.add_argument("--target", required=True,
                    help="factored integer, e.g. \"3^2*5^2*17\"")
    ap.add_argument("--emit-json", action="store_true",
                    help="emit the result with its bracketing bounds")
    args = ap.parse_args(argv)
    target = parse_factored(args.target)
    result = solve(ExprFamily(args.family), target, emit_result=True)
    if args.emit_json:
        print(json.dumps({
            "family": result.family.value,
            "target": result.target,
            "parameter": result.parameter,
            "lower": result.lower,
            "upper": result.upper,
            "over_bound": result.over_bound,
        }))
    else:
        print("none" if result.parameter is None else result.parameter)
    return 0


def _parse_samples(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


def verify_lemma_main(argv: Optional[list[str]] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="verify-lemma",
        description="Replay the candidate-elimination scan for one target.")
    ap.add_argument("--target", required=True,
                    choices=[g.value for g in GroupId])
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--samples", type=_parse_samples, default=DEFAULT_SAMPLES,
                    metavar="Q1,Q2,...",
                    help="sampled parameters for the parametric target")
    args = ap.parse_args(argv)
    report = replay_lemma(args.target, samples=args.samples)
    if args.json:
        print(json.dumps([v.to_json_dict() for v in report.verdicts]))
    else:
        for v in report.verdicts:
            print(f"{v.case_label}: {v.verdict.value} ({v.reason.value})")
        print(f"{report.target}: {report.overall}")
    return 0 if report.overall == "Verified" else 1


def verify_theorem_main(argv: Optional[list[str]] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="verify-theorem",
        description="Run the full verification chain for the targets.")
    group = ap.add_mutually_exclusive_group(required=True)
    group.add_argument("--target", choices=[g.value for g in GroupId])
    group.add_argument("--all", action="store_true")
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--samples", type=_parse_samples, default=DEFAULT_SAMPLES,
                    metavar="Q1,Q2,...")
    args = ap.parse_args(argv)
    targets = [g.value for g in GroupId] if args.all else [args.target]
    all_ok = True
    payload = []
    for name in targets:
        report = verify_main_theorem(name, samples=args.samples)
        all_ok = all_ok and report.overall == "Verified"
        if args.json:
            payload.append({
                "target": report.target,
                "overall": report.overall,
                "step": "final",
                "square_witness": str(report.square_witness),
                "trivial_multiplier": report.covers.trivial_multiplier,
                "gl_pairs": list(report.gl_pairs),
                "divergences": list(report.divergences),
                "eliminations": len(report.replay.eliminated),
                "verdicts": [v.to_json_dict() for v in report.replay.verdicts],
            })
        else:
            print(f"{report.target}: {report.overall} "
                  f"(eliminated {len(report.replay.eliminated)} of "
                  f"{len(report.replay.verdicts)} cases)")
    if args.json:
        print(json.dumps(payload))
    return 0 if all_ok else 1
