"""Command-line frontend: values, parities, verification suites, densities.

Every invocation is deterministic: no timestamps, no machine-dependent
content, sharded work merged in shard order. Exit codes: 0 success, 1
verification discrepancy, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .characterize import Parity, predict_parity
from .congruence import all_families, verify_family
from .density import density_8m7, sparse_odd_census
from .numtheory import is_prime
from .etaq import DISSECTION_CLASSES, a_parity_series, dissection_by_extraction, dissection_series, identity_suite
from .partition_oracle import RECOMMENDED_TABLE_LIMIT, build_table

THREADS_ENV = "ODDMULT_THREADS"

_DENSITY_TAGS = {"even": "even", "4m1": "4m+1", "8m3": "8m+3", "8m7": "8m+7"}


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    limit: int
    output: str | None
    format: str
    threads: int


def _default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise SystemExit(f"{THREADS_ENV} must be an integer, got {env!r}")
        if value < 1:
            raise SystemExit(f"{THREADS_ENV} must be >= 1, got {value}")
        return value
    return os.cpu_count() or 1


# -- a-value / a-parity ---------------------------------------------------


def _cmd_value(args, config: RunConfig) -> int:
    print(build_table(args.n)[args.n])
    return 0


def _parity_line(n: int, parity_bit: int) -> tuple[str, bool]:
    verdict = predict_parity(n)
    actual = "odd" if parity_bit else "even"
    if verdict.parity is Parity.UNKNOWN:
        return f"n={n}: unknown [{verdict.reason}] series={actual}", True
    agree = verdict.parity.value == actual
    return (
        f"n={n}: {verdict.parity.value} [{verdict.reason}] series={actual} "
        f"agree={'yes' if agree else 'NO'}",
        agree,
    )


def _cmd_parity(args, config: RunConfig) -> int:
    lo, hi = args.range
    parity = a_parity_series(hi + 1)
    ok = True
    for n in range(lo, hi + 1):
        line, agrees = _parity_line(n, parity[n])
        print(line)
        ok = ok and agrees
    return 0 if ok else 1


# -- verify ----------------------------------------------------------------


def _verify_identities(limit: int) -> int:
    failures = 0
    for name, lhs, rhs in identity_suite(limit):
        diff = lhs + rhs
        if diff.is_zero():
            print(f"ok   {name}  [to {limit}]")
        else:
            failures += 1
            print(f"FAIL {name}: first mismatch at degree {diff.support()[0]}")
    for tag in DISSECTION_CLASSES:
        closed = dissection_series(tag, limit)
        extracted = dissection_by_extraction(tag, limit)
        diff = closed + extracted
        if diff.is_zero():
            print(f"ok   dissection {tag}: closed form matches extraction  [to {limit}]")
        else:
            failures += 1
            print(f"FAIL dissection {tag}: first mismatch at index {diff.support()[0]}")
    return failures


def _theorem_shard(task: tuple[int, int, bytes]) -> tuple[int, list[tuple[int, str, str, str]]]:
    start, stop, blob = task
    bits = int.from_bytes(blob, "little")
    mismatches = []
    checked = 0
    for n in range(start, stop):
        if n % 8 == 7:
            continue
        checked += 1
        verdict = predict_parity(n)
        actual = "odd" if bits >> (n - start) & 1 else "even"
        if verdict.parity.value != actual:
            mismatches.append((n, verdict.parity.value, actual, verdict.reason))
    return checked, mismatches


def _verify_theorems(limit: int, threads: int) -> int:
    parity = a_parity_series(limit)
    bit_array = parity.to_bit_array()
    n_shards = max(1, min(threads, limit // 1000 or 1))
    bounds = [limit * i // n_shards for i in range(n_shards + 1)]
    shards = [
        (lo, hi, np.packbits(bit_array[lo:hi], bitorder="little").tobytes())
        for lo, hi in zip(bounds[:-1], bounds[1:])
    ]
    if n_shards == 1:
        results = [_theorem_shard(shards[0])]
    else:
        with ProcessPoolExecutor(max_workers=n_shards) as pool:
            results = list(pool.map(_theorem_shard, shards))
    checked = sum(c for c, _ in results)
    mismatches = [m for _, ms in results for m in ms]
    for n, predicted, actual, reason in mismatches:
        print(f"FAIL n={n}: predicted {predicted} via [{reason}], series says {actual}")
    print(f"checked {checked} values below {limit} (class 8m+7 excluded): "
          f"{len(mismatches)} discrepancies")
    return len(mismatches)


def _verify_congruences(limit: int) -> int:
    parity = a_parity_series(limit)
    failures = 0
    for family in all_families():
        result = verify_family(family, limit, parity)
        origin = f" (p={family.p}, r={family.r})" if family.p is not None else ""
        if result.ok:
            print(f"ok   {family.label} == 0 (mod 2){origin}: {result.checked} indices below {limit}")
        else:
            failures += 1
            print(f"FAIL {family.label}{origin}: a({result.counterexample}) is odd")
    return failures


def _cmd_verify(args, config: RunConfig) -> int:
    if args.suite == "identities":
        failures = _verify_identities(args.limit)
    elif args.suite == "theorems":
        failures = _verify_theorems(args.limit, config.threads)
    else:
        failures = _verify_congruences(args.limit)
    print("PASS" if failures == 0 else f"FAIL ({failures} discrepancies)")
    return 0 if failures == 0 else 1


# -- congruences -----------------------------------------------------------


def _cmd_congruences(args, config: RunConfig) -> int:
    if args.p is not None:
        from .congruence import generate_12p_family, generate_24p_family

        families = []
        if args.p >= 5:
            families.extend(generate_12p_family(args.p))
        families.extend(generate_24p_family(args.p))
    else:
        families = all_families()
    for family in families:
        origin = f" (p={family.p}, r={family.r})" if family.p is not None else ""
        print(f"{family.label} == 0 (mod 2){origin}  [{family.source}]")
    return 0


# -- density ---------------------------------------------------------------


def _write_csv_block(fh, class_tag: str, series_name: str, limit: int, checkpoints) -> None:
    fh.write(f"# class: {class_tag}\n")
    fh.write(f"# series: {series_name}\n")
    fh.write(f"# limit: {limit}\n")
    fh.write("checkpoint,odd_count,density\n")
    for mark in checkpoints:
        fh.write(f"{mark.x},{mark.odd_count},{mark.density:.9f}\n")


def _cmd_density(args, config: RunConfig) -> int:
    wanted = list(_DENSITY_TAGS) if args.cls == "all" else [args.cls]
    blocks = []
    status = 0

    census_tags = [t for t in wanted if t != "8m7"]
    if census_tags:
        census = {r.class_tag: r for r in sparse_odd_census(args.limit, workers=config.threads)}
        for short in census_tags:
            result = census[_DENSITY_TAGS[short]]
            name = f"f3 / f1^3 extracted at n = {result.class_tag}"
            if not result.agree:
                status = 1
                print(f"FAIL {result.class_tag}: predicate and series counts disagree")
            for mark in result.predicate.checkpoints:
                print(f"class {result.class_tag}: X={mark.x} odd={mark.odd_count} density={mark.density:.9f}")
            print(f"class {result.class_tag}: final density {result.predicate.final_density:.9f} "
                  f"(routes agree: {'yes' if result.agree else 'NO'})")
            blocks.append((result.class_tag, name, args.limit, result.predicate.checkpoints))

    if "8m7" in wanted:
        report = density_8m7(args.limit)
        for mark in report.checkpoints:
            print(f"class 8m+7: X={mark.x} odd={mark.odd_count} density={mark.density:.9f}")
        print(f"class 8m+7: final density {report.final_density:.9f} "
              f"(cross-checked {report.cross_checked} indices against extraction)")
        blocks.append(("8m+7", "f3^8 / f1^3", args.limit, report.checkpoints))

    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            for block in blocks:
                _write_csv_block(fh, *block)
        print(f"wrote {args.csv}")
    return status


# -- parser ----------------------------------------------------------------


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 0 or hi < lo:
        raise ValueError(f"bad range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddmult",
        description="Parity of a(n), the number of partitions of n whose parts "
        "all appear with odd multiplicity.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        help=f"worker count for sharded verification (default: {THREADS_ENV} or CPU count)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_value = sub.add_parser("a-value", parents=[common], help="print a(n) exactly")
    p_value.add_argument("n", type=int)

    p_parity = sub.add_parser(
        "a-parity", parents=[common], help="parity verdict for n or a range A..B"
    )
    p_parity.add_argument("range", type=str)

    p_verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p_verify.add_argument("suite", choices=["identities", "theorems", "congruences"])
    p_verify.add_argument("--limit", type=int, default=10_000)

    p_cong = sub.add_parser("congruences", parents=[common], help="list congruence families")
    p_cong.add_argument("action", choices=["list"])
    p_cong.add_argument("--p", type=int, default=None, help="only families for this prime")

    p_density = sub.add_parser(
        "density", parents=[common], help="odd-density experiment per residue class"
    )
    p_density.add_argument("cls", choices=["even", "4m1", "8m3", "8m7", "all"])
    p_density.add_argument("--limit", type=int, default=1_000_000)
    p_density.add_argument("--csv", type=str, default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    threads = args.threads if args.threads is not None else _default_threads()
    if threads < 1:
        parser.error("--threads must be >= 1")

    if args.subcommand == "a-value":
        if not 0 <= args.n <= RECOMMENDED_TABLE_LIMIT:
            parser.error(f"a-value supports 0 <= n <= {RECOMMENDED_TABLE_LIMIT}")
        limit = args.n
    elif args.subcommand == "a-parity":
        try:
            args.range = _parse_range(args.range)
        except ValueError as exc:
            parser.error(str(exc))
        limit = args.range[1]
    else:
        limit = getattr(args, "limit", 1)
        if limit < 1:
            parser.error("--limit must be >= 1")
        if getattr(args, "p", None) is not None and (args.p < 3 or not is_prime(args.p)):
            parser.error(f"--p must be an odd prime, got {args.p}")

    config = RunConfig(
        subcommand=args.subcommand,
        limit=limit,
        output=getattr(args, "csv", None),
        format="csv" if getattr(args, "csv", None) else "plain",
        threads=threads,
    )

    commands = {
        "a-value": _cmd_value,
        "a-parity": _cmd_parity,
        "verify": _cmd_verify,
        "congruences": _cmd_congruences,
        "density": _cmd_density,
    }
    return commands[args.subcommand](args, config)


if __name__ == "__main__":
    sys.exit(main())
