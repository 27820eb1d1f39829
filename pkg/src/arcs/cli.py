"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error
(including unsupported k), 3 internal construction failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from arcs.base import ConstructionError, UnsupportedK, check_k, is_supported
from arcs.construct import build_lemma_input, case_label, generate
from arcs.document import DocumentError, parse, render_text, serialize
from arcs.lemma import ConditionError, check_conditions, missing_differences
from arcs.verify import verify_arcs

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _err(msg: str) -> None:
    print(f"arcs: {msg}", file=sys.stderr)


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        system, _ = generate(args.k)
    except UnsupportedK as exc:
        _err(str(exc))
        return EXIT_USAGE
    except (ConstructionError, ConditionError) as exc:
        _err(f"internal failure: {exc}")
        return EXIT_INTERNAL
    text = serialize(system) if args.format == "json" else render_text(system)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        _err(f"cannot read {args.input}: {exc}")
        return EXIT_USAGE
    try:
        system = parse(text)
    except DocumentError as exc:
        _err(f"parse error at {exc}")
        return EXIT_USAGE
    report = verify_arcs(system)
    print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_check_conditions(args: argparse.Namespace) -> int:
    k = args.k
    try:
        check_k(k)
        inp = build_lemma_input(k)
    except UnsupportedK as exc:
        _err(str(exc))
        return EXIT_USAGE
    except ConstructionError as exc:
        _err(f"internal failure: {exc}")
        return EXIT_INTERNAL
    print(
        f"k={k} v={inp.v} case={case_label(k)} (a1,b1)=({inp.a1b1.a},{inp.a1b1.b}) "
        f"(a2,b2)=({inp.a2b2.a},{inp.a2b2.b}) d2={inp.d2} d3={inp.d3}"
    )
    report = check_conditions(inp)
    print("\n".join(report.lines()))
    for q in (2, 3):
        print(f"missing differences at level {q}: {missing_differences(inp, q)}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _sweep_one(k: int) -> tuple[int, bool, str]:
    start = time.perf_counter()
    try:
        system, report = generate(k)
        ok = report.passed
        classes = f"{len(system.almost_parallel_classes)}+1"
        edges = report.stats["edges"]
    except Exception as exc:  # report and keep sweeping
        return k, False, f"k={k} FAIL {type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    status = "PASS" if ok else "FAIL"
    return k, ok, f"k={k} v={4 * k + 1} classes={classes} edges={edges} {status} {elapsed:.2f}s"


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.start > args.stop:
        _err(f"--from ({args.start}) must not exceed --to ({args.stop})")
        return EXIT_USAGE
    if args.jobs < 1:
        _err("--jobs must be at least 1")
        return EXIT_USAGE
    ks = [k for k in range(args.start, args.stop + 1) if is_supported(k)]
    if not ks:
        print("warning: 0 values tested (no supported k in range)", file=sys.stderr)
        return EXIT_OK
    failed = []
    if args.jobs == 1:
        results = map(_sweep_one, ks)
        for k, ok, line in results:
            print(line, flush=True)
            if not ok:
                failed.append(k)
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for k, ok, line in pool.map(_sweep_one, ks):
                print(line, flush=True)
                if not ok:
                    failed.append(k)
    print(f"{len(ks)} values tested, {len(ks) - len(failed)} passed")
    if failed:
        print(f"failing k: {' '.join(map(str, failed))}")
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arcs", description="Almost resolvable k-cycle systems of order 4k+1")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="construct, verify and emit the system for one k")
    p.add_argument("--k", type=int, required=True, help="cycle length (odd, >= 11)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="certify a JSON document")
    p.add_argument("--input", required=True, help="path to a JSON document")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-conditions", help="report the five difference conditions for one k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_check_conditions)

    p = sub.add_parser("sweep", help="generate and verify every supported k in a range")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (parallel over k)")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
