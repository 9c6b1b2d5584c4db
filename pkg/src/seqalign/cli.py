"""Command-line entry point: align, verify, and bench subcommands.

Exit codes are part of the interface: 0 success, 1 usage or parse error,
2 no full-coverage alignment without --partial, 3 verification found a
counterexample. Errors go to standard error prefixed with "error: ".
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from . import baselines, bench, chainer, gapstats, io, matcher, oracle
from .core import (
    ComparisonCounters,
    AlignmentReport,
    ScoringScheme,
    SeqalignError,
    Sequence,
    get_alphabet,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_FULL_COVER = 2
EXIT_VERIFY_FAILED = 3

ERROR_PREFIX = "error: "

_POLICY_BY_FLAG = {
    "mean": "mean_then_variance",
    "variance": "variance_only",
    "mean-only": "mean_only",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="seqalign", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_align = sub.add_parser("align", help="align a fragment against a reference")
    p_align.add_argument("files", nargs="*", help="two FASTA or plain-text sequence files")
    p_align.add_argument("--s", dest="s_literal", help="reference sequence literal")
    p_align.add_argument("--v", dest="v_literal", help="fragment sequence literal")
    p_align.add_argument("--algo", choices=("proposed", "nw", "sw"), default="proposed")
    p_align.add_argument(
        "--select", choices=tuple(_POLICY_BY_FLAG), default="mean",
        help="candidate selection policy (default: mean, i.e. mean then variance)",
    )
    p_align.add_argument("--swap", action="store_true",
                         help="swap operands so gaps read as insertions")
    p_align.add_argument("--min-window", type=int, default=1, metavar="K")
    p_align.add_argument("--max-candidates", type=int, default=1024, metavar="N")
    p_align.add_argument("--beam", type=int, default=256, metavar="B")
    p_align.add_argument("--partial", action="store_true",
                         help="accept best partial coverage instead of failing")
    p_align.add_argument("--format", choices=("text", "json"), default="text")
    p_align.add_argument("--scheme", default="1,-1,-1", metavar="MATCH,MISMATCH,GAP",
                         help="scoring for the nw/sw baselines")
    p_align.add_argument(
        "--alphabet", choices=("upper", "dna"),
        default=os.environ.get("SEQALIGN_ALPHABET", "upper"),
        help="alphabet preset (env SEQALIGN_ALPHABET overrides the default)",
    )
    p_align.set_defaults(func=cmd_align)

    p_verify = sub.add_parser("verify", help="cross-check modules against brute-force oracles")
    p_verify.add_argument("--suite", choices=("matcher", "chainer", "nw", "sw", "all"),
                          default="all")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--cases", type=int, default=100, metavar="N")
    p_verify.add_argument("--max-m", type=int, default=None,
                          help="reference length bound (suite defaults: matcher 20, "
                               "chainer 12; nw/sw hard-capped at 8 by the brute-force scorer)")
    p_verify.add_argument("--max-n", type=int, default=None,
                          help="fragment length bound (suite defaults: matcher 10, "
                               "chainer 6; nw/sw hard-capped at 8)")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="measure comparison-count growth")
    p_bench.add_argument("--m-range", default="256:4096:x2", metavar="SPEC",
                         help="comma list or lo:hi:xF geometric spec")
    p_bench.add_argument("--n-range", default="16", metavar="SPEC")
    p_bench.add_argument("--alphabet", default="ACGT", metavar="SYMBOLS",
                         help="symbols to draw random sequences from")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--repeats", type=int, default=1)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def _parse_scheme(text: str) -> ScoringScheme:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError("--scheme expects MATCH,MISMATCH,GAP")
    try:
        match, mismatch, gap = (float(p) for p in parts)
        return ScoringScheme(match_score=match, mismatch_penalty=mismatch, gap_penalty=gap)
    except ValueError as exc:
        raise UsageError(f"bad --scheme: {exc}") from None


def _load_pair(args) -> tuple:
    alphabet = get_alphabet(args.alphabet)
    if args.s_literal is not None or args.v_literal is not None:
        if args.files or args.s_literal is None or args.v_literal is None:
            raise UsageError("give either two files or both --s and --v")
        s = io.parse_plain(args.s_literal, id="s", alphabet=alphabet)
        v = io.parse_plain(args.v_literal, id="v", alphabet=alphabet)
        return s, v
    if len(args.files) != 2:
        raise UsageError("give either two files or both --s and --v")
    s = io.load_sequences(args.files[0], alphabet)[0]
    v = io.load_sequences(args.files[1], alphabet)[0]
    return s, v


def cmd_align(args) -> int:
    scheme = _parse_scheme(args.scheme)  # validated even when unused
    s, v = _load_pair(args)
    if args.swap:
        s, v = chainer.swap_for_insertions(s, v)

    if args.algo in ("nw", "sw"):
        align = baselines.needleman_wunsch if args.algo == "nw" else baselines.smith_waterman
        scored = align(s, v, scheme)
        report = AlignmentReport(
            algorithm=args.algo,
            s=s,
            v=v,
            scored=scored,
            # Each DP cell inspects one symbol pair.
            counters=ComparisonCounters(char_comparisons=len(s) * len(v)),
            swapped=args.swap,
            options={
                "scheme": [scheme.match_score, scheme.mismatch_penalty, scheme.gap_penalty]
            },
        )
        sys.stdout.write(io.emit_report(report, args.format))
        return EXIT_OK

    policy = gapstats.SelectionPolicy(mode=_POLICY_BY_FLAG[args.select])
    try:
        opts = matcher.MatchOptions(min_window=args.min_window)
        chain_opts = chainer.ChainOptions(
            max_candidates=args.max_candidates,
            beam_width=args.beam,
            require_full_coverage=not args.partial,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    index = matcher.enumerate_matches(s, v, opts)
    result = chainer.enumerate_candidates(index, s, v, chain_opts, policy=policy)
    selected = gapstats.select(result.entries, policy) if result.entries else 0
    report = AlignmentReport(
        algorithm="proposed",
        s=s,
        v=v,
        entries=result.entries,
        selected=selected,
        policy=policy.mode,
        counters=index.counters,
        swapped=args.swap,
        full_coverage=result.full_coverage,
        truncated=result.truncated,
        options={
            "min_window": opts.min_window,
            "max_candidates": chain_opts.max_candidates,
            "beam_width": chain_opts.beam_width,
            "require_full_coverage": chain_opts.require_full_coverage,
        },
    )
    sys.stdout.write(io.emit_report(report, args.format))
    if not result.full_coverage and not args.partial:
        return EXIT_NO_FULL_COVER
    return EXIT_OK


def _random_seq(rng: random.Random, length: int, symbols: str, id: str) -> Sequence:
    return Sequence(id=id, residues="".join(rng.choice(symbols) for _ in range(length)))


def _verify_matcher(rng, cases, max_m, max_n):
    max_m = max_m or 20
    max_n = max_n or 10
    for case in range(cases):
        symbols = "AC" if case % 2 == 0 else "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
        m = rng.randint(1, max_m)
        n = rng.randint(1, min(m, max_n))
        if case % 10 == 9:
            s, v = Sequence("s", "A" * m), Sequence("v", "A" * n)
        else:
            s, v = _random_seq(rng, m, symbols, "s"), _random_seq(rng, n, symbols, "v")
        index = matcher.enumerate_matches(s, v)
        for j in range(1, n + 1):
            got = set(index.by_size.get(j, ()))
            want = set(oracle.naive_match_scan(s, v, j))
            if got != want:
                return f"case {case}: S={s.residues} V={v.residues} window {j}: {sorted(got ^ want)}"
    return None


def _verify_chainer(rng, cases, max_m, max_n):
    max_m = max_m or 12
    max_n = max_n or 6
    uncapped = chainer.ChainOptions(max_candidates=10**9, beam_width=10**9)
    for case in range(cases):
        m = rng.randint(1, max_m)
        n = rng.randint(1, min(m, max_n))
        s, v = _random_seq(rng, m, "AB", "s"), _random_seq(rng, n, "AB", "v")
        index = matcher.enumerate_matches(s, v)
        result = chainer.enumerate_candidates(index, s, v, uncapped)
        got = {chain.key() for chain in result.chains} if result.full_coverage else set()
        want = {chain.key() for chain in oracle.exhaustive_chains(index, n)}
        if got != want:
            return f"case {case}: S={s.residues} V={v.residues}: chains differ {sorted(got ^ want)}"
    return None


def _verify_dp(rng, cases, max_m, max_n, local):
    limit = oracle.MAX_SCORE_LEN
    max_m = min(max_m or limit, limit)
    max_n = min(max_n or limit, limit)
    schemes = (ScoringScheme(1, -1, -1), ScoringScheme(2, -3, -1))
    align = baselines.smith_waterman if local else baselines.needleman_wunsch
    brute = oracle.exhaustive_local_score if local else oracle.exhaustive_global_score
    for case in range(cases):
        m = rng.randint(1, max_m)
        n = rng.randint(1, max_n)
        s, v = _random_seq(rng, m, "ACGT", "s"), _random_seq(rng, n, "ACGT", "v")
        for scheme in schemes:
            got = align(s, v, scheme).score
            want = brute(s, v, scheme)
            if got != want:
                return (
                    f"case {case}: S={s.residues} V={v.residues} scheme={scheme}: "
                    f"dp={got} brute={want}"
                )
    return None


def cmd_verify(args) -> int:
    if args.cases < 1:
        raise UsageError("--cases must be >= 1")
    suites = {
        "matcher": _verify_matcher,
        "chainer": _verify_chainer,
        "nw": lambda r, c, mm, mn: _verify_dp(r, c, mm, mn, local=False),
        "sw": lambda r, c, mm, mn: _verify_dp(r, c, mm, mn, local=True),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    for name in names:
        rng = random.Random(args.seed)
        failure = suites[name](rng, args.cases, args.max_m, args.max_n)
        if failure is not None:
            print(f"FAIL {name} (seed {args.seed}): {failure}")
            return EXIT_VERIFY_FAILED
        print(f"ok {name}: {args.cases} cases (seed {args.seed})")
    return EXIT_OK


def _parse_size_range(spec: str) -> list:
    try:
        if ":" in spec:
            lo_s, hi_s, step = spec.split(":")
            lo, hi = int(lo_s), int(hi_s)
            if not step.startswith("x"):
                raise ValueError("step must look like x2")
            factor = float(step[1:])
            if lo < 1 or hi < lo or factor <= 1:
                raise ValueError("range must grow")
            values = []
            x = float(lo)
            while round(x) <= hi:
                values.append(int(round(x)))
                x *= factor
            return values
        return [int(p) for p in spec.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"bad size range {spec!r}: {exc}") from None


def cmd_bench(args) -> int:
    m_values = _parse_size_range(args.m_range)
    n_values = _parse_size_range(args.n_range)
    try:
        report = bench.measure_growth(
            m_values, n_values, symbols=args.alphabet, seed=args.seed, repeats=args.repeats
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(bench.format_table(report))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"{ERROR_PREFIX}{exc}", file=sys.stderr)
        return EXIT_USAGE
    except SeqalignError as exc:
        print(f"{ERROR_PREFIX}{exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
