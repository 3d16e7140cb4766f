"""Command-line front end.

Subcommands: count, detect, gen, selftest, bench. Exit codes: 0 success,
1 self-test failure, 2 usage or input error. Results go to stdout,
diagnostics to stderr, one line each.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from dataclasses import dataclass
from math import comb
from pathlib import Path

from . import oracle, selftest, solver
from .core import (
    EmptyInput,
    Permutation,
    PpmError,
    PpmInstance,
    format_permutation,
    parse_permutation,
)
from .rng import SplitMix64, random_permutation

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_USAGE = 2

_ALGOS = ("fast", "bkm", "brute")


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, independent of argparse."""

    algorithm: str = "fast"
    mode: str = "count"
    sigma_text: str | None = None
    sigma_path: str | None = None
    pattern_text: str | None = None
    pattern_path: str | None = None
    seed: int = 0
    threads: int = 1
    n: int | None = None
    max_n: int = 6
    repetitions: int = 5
    pairs: tuple[tuple[int, int], ...] = ()


def cmd_count(cfg: RunConfig) -> int:
    instance = _load_instance(cfg)
    print(_count_with(cfg.algorithm, instance, cfg.threads))
    return EXIT_OK


def cmd_detect(cfg: RunConfig) -> int:
    instance = _load_instance(cfg)
    if cfg.algorithm == "fast":
        found = solver.detect_ppm(instance)
    else:
        found = _count_with(cfg.algorithm, instance, cfg.threads) > 0
    print("true" if found else "false")
    return EXIT_OK


def cmd_gen(cfg: RunConfig) -> int:
    if cfg.n is None:
        raise PpmError("gen requires --n")
    print(format_permutation(random_permutation(cfg.n, cfg.seed)))
    return EXIT_OK


def cmd_selftest(cfg: RunConfig) -> int:
    failed = False
    for name, ok, detail in selftest.run_suites(cfg.max_n):
        print(f"{name}: {'pass' if ok else 'fail'}")
        if not ok:
            failed = True
            print(f"  {detail}", file=sys.stderr)
    return EXIT_SELFTEST_FAILED if failed else EXIT_OK


def cmd_bench(cfg: RunConfig) -> int:
    if not cfg.pairs:
        raise PpmError("bench requires --pairs n:k,...")
    print("algo,n,k,decompositions,count,nanos_median")
    seeds = SplitMix64(cfg.seed)
    for n, k in cfg.pairs:
        instance = PpmInstance(
            random_permutation(n, seeds.next_u64()),
            random_permutation(k, seeds.next_u64()),
        )
        timings = []
        count = 0
        for _rep in range(cfg.repetitions):
            start = time.perf_counter_ns()
            count = _count_with(cfg.algorithm, instance, cfg.threads)
            timings.append(time.perf_counter_ns() - start)
        decompositions = _decomposition_bound(cfg.algorithm, n, k)
        print(f"{cfg.algorithm},{n},{k},{decompositions},{count},{int(statistics.median(timings))}")
    return EXIT_OK


def _count_with(algorithm: str, instance: PpmInstance, threads: int) -> int:
    if algorithm == "fast":
        return solver.count_ppm(instance, threads=threads)
    if algorithm == "bkm":
        return oracle.bkm_count(instance)
    if algorithm == "brute":
        return oracle.brute_force_count(instance)
    raise PpmError(f"unknown algorithm {algorithm!r}")


def _decomposition_bound(algorithm: str, n: int, k: int) -> int:
    if algorithm == "fast":
        return comb(n // 2, k // 2)
    if algorithm == "bkm":
        return comb(n, k // 2)
    return 0


def _load_instance(cfg: RunConfig) -> PpmInstance:
    return PpmInstance(
        _load_permutation(cfg.sigma_text, cfg.sigma_path, line=1, role="--sigma"),
        _load_permutation(cfg.pattern_text, cfg.pattern_path, line=2, role="--pattern"),
    )


def _load_permutation(text: str | None, path: str | None, line: int, role: str) -> Permutation:
    if text is not None:
        return parse_permutation(text)
    if path is None:
        raise EmptyInput(f"missing {role} (inline text or {role}-file)")
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise EmptyInput(f"{path}: no data lines")
    # Instance files carry sigma on line 1 and the pattern on line 2; a
    # single-line file serves either role.
    if line > 1 and len(lines) >= line:
        return parse_permutation(lines[line - 1])
    return parse_permutation(lines[0])


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for chunk in text.split(","):
        n_str, _, k_str = chunk.partition(":")
        try:
            pairs.append((int(n_str), int(k_str)))
        except ValueError as exc:
            raise PpmError(f"bad pair {chunk!r}, expected n:k") from exc
    return tuple(pairs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppm", description="Exact permutation pattern matching: count and detect."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--algo", choices=_ALGOS, default="fast")
        g1 = p.add_mutually_exclusive_group(required=True)
        g1.add_argument("--sigma", help="text permutation, one-line notation")
        g1.add_argument("--sigma-file", help="file with sigma on its first line")
        g2 = p.add_mutually_exclusive_group(required=True)
        g2.add_argument("--pattern", help="pattern permutation, one-line notation")
        g2.add_argument("--pattern-file", help="file with the pattern on its second line (or only line)")
        p.add_argument("--threads", type=int, default=1)

    p_count = sub.add_parser("count", help="print the exact number of occurrences")
    add_instance_flags(p_count)

    p_detect = sub.add_parser("detect", help="print true/false for containment")
    add_instance_flags(p_detect)

    p_gen = sub.add_parser("gen", help="print a seeded uniformly random permutation")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)

    p_self = sub.add_parser("selftest", help="run the built-in invariant suites")
    p_self.add_argument("--max-n", type=int, default=6)

    p_bench = sub.add_parser("bench", help="time counting runs, CSV to stdout")
    p_bench.add_argument("--pairs", required=True, help="comma list of n:k")
    p_bench.add_argument("--algo", choices=_ALGOS, default="fast")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.add_argument("--threads", type=int, default=1)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        algorithm=getattr(args, "algo", "fast"),
        mode=args.command,
        sigma_text=getattr(args, "sigma", None),
        sigma_path=getattr(args, "sigma_file", None),
        pattern_text=getattr(args, "pattern", None),
        pattern_path=getattr(args, "pattern_file", None),
        seed=getattr(args, "seed", 0),
        threads=getattr(args, "threads", 1),
        n=getattr(args, "n", None),
        max_n=getattr(args, "max_n", 6),
        repetitions=getattr(args, "reps", 5),
        pairs=_parse_pairs(args.pairs) if getattr(args, "pairs", None) else (),
    )


_COMMANDS = {
    "count": cmd_count,
    "detect": cmd_detect,
    "gen": cmd_gen,
    "selftest": cmd_selftest,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        _validate_config(cfg)
        return _COMMANDS[args.command](cfg)
    except PpmError as exc:
        print(f"ppm: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"ppm: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _validate_config(cfg: RunConfig) -> None:
    if cfg.threads < 1:
        raise PpmError(f"--threads must be >= 1, got {cfg.threads}")
    if cfg.seed < 0 or cfg.seed >= 1 << 64:
        raise PpmError(f"--seed must be an unsigned 64-bit integer, got {cfg.seed}")
    if cfg.repetitions < 1:
        raise PpmError(f"--reps must be >= 1, got {cfg.repetitions}")
    for n, k in cfg.pairs:
        if not 1 <= k <= n:
            raise PpmError(f"bad pair n={n} k={k}, need 1 <= k <= n")


if __name__ == "__main__":
    sys.exit(main())
