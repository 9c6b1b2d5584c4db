"""Build candidate alignments from a match index.

A candidate is a chain of match blocks, strictly ordered and non-overlapping
in both sequences. With full coverage required the blocks tile the whole
fragment (deletions-only reading); otherwise coverage is maximized and the
leftover fragment symbols are placed into the reference gap next to their
neighboring block and reported as substitution sites.

Chains are generated directly in canonical form: an extension that is
contiguous with its predecessor in both sequences is skipped, because the
merged block is itself in the index and produces the same canonical chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import gapstats
from .core import (
    CandidateAlignment,
    EmptyInputError,
    Sequence,
    StructuralViolationError,
    canonicalize,
    validate_chain,
)
from .gapstats import SelectionPolicy
from .matcher import MatchIndex


@dataclass(frozen=True)
class ChainOptions:
    """Caps and preferences for candidate enumeration.

    max_candidates bounds the emitted list (after sorting, so the best
    survive). beam_width bounds the partial chains kept per frontier group;
    groups are keyed by the next fragment position and pruned by current
    interior gap total, then gap variance.
    """

    max_candidates: int = 1024
    beam_width: int = 256
    require_full_coverage: bool = True
    prefer_larger_blocks: bool = True

    def __post_init__(self):
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be >= 1")
        if self.beam_width < 1:
            raise ValueError("beam_width must be >= 1")


@dataclass(frozen=True)
class ChainResult:
    """Outcome of enumerate_candidates.

    entries holds (chain, statistics) pairs in policy order. full_coverage
    is False when no chain covers the whole fragment and the entries are the
    best partial-coverage chains instead (possibly none at all).
    """

    entries: tuple
    truncated: bool
    full_coverage: bool

    @property
    def chains(self) -> tuple:
        return tuple(chain for chain, _ in self.entries)


class _State(NamedTuple):
    blocks: tuple
    v_end: int
    s_end: int
    runs: tuple


def _beam_key(state: _State):
    total = sum(state.runs)
    if state.runs:
        mean = total / len(state.runs)
        var = sum((r - mean) ** 2 for r in state.runs) / len(state.runs)
    else:
        var = 0.0
    return (total, var, tuple((b.v_start, b.s_start, b.length) for b in state.blocks))


def _grouped_blocks(index: MatchIndex, prefer_larger: bool) -> dict:
    by_v: dict = {}
    for blocks in index.by_size.values():
        for b in blocks:
            by_v.setdefault(b.v_start, []).append(b)
    order = (lambda b: (-b.length, b.s_start)) if prefer_larger else (lambda b: (b.s_start, b.length))
    for lst in by_v.values():
        lst.sort(key=order)
    return by_v


def _search(index: MatchIndex, n: int, m: int, opts: ChainOptions, full_cover: bool) -> list:
    """Frontier search over fragment positions; returns completed chains.

    In full-coverage mode blocks must tile the fragment exactly; in partial
    mode the next block may skip fragment symbols provided the reference gap
    has room to hold them (so every emitted chain can be rendered).
    """
    by_v = _grouped_blocks(index, opts.prefer_larger_blocks)
    frontier: dict = {0: [_State((), 0, 0, ())]}
    complete: list = []

    for v_pos in range(n):
        group = frontier.pop(v_pos, None)
        if not group:
            continue
        if len(group) > opts.beam_width:
            group.sort(key=_beam_key)
            group = group[: opts.beam_width]
        for state in group:
            starts = [v_pos] if full_cover else range(v_pos, n)
            for v_start in starts:
                for b in by_v.get(v_start, ()):
                    v_gap = b.v_start - state.v_end
                    if state.blocks:
                        s_gap = b.s_start - state.s_end
                        # Strict gap when contiguous in V keeps the chain
                        # canonical; a skipped V span needs that much room.
                        if s_gap < max(v_gap, 1):
                            continue
                    else:
                        if not full_cover and b.s_start < b.v_start:
                            continue  # no room to place the leading span
                        s_gap = 0
                    runs = state.runs + (s_gap,) if state.blocks and s_gap > 0 else state.runs
                    new = _State(state.blocks + (b,), b.v_end, b.s_end, runs)
                    if full_cover:
                        if new.v_end == n:
                            complete.append(new)
                        else:
                            frontier.setdefault(new.v_end, []).append(new)
                    else:
                        if m - new.s_end >= n - new.v_end:
                            complete.append(new)
                        if new.v_end < n:
                            frontier.setdefault(new.v_end, []).append(new)
    return complete


def enumerate_candidates(
    index: MatchIndex,
    s: Sequence,
    v: Sequence,
    opts: ChainOptions | None = None,
    policy: SelectionPolicy | None = None,
) -> ChainResult:
    """Enumerate canonical candidate chains, ordered by the selection policy.

    With require_full_coverage set and no full-coverage chain available, the
    result carries the best partial-coverage chains and full_coverage=False
    so callers can tell the difference from an empty outcome.
    """
    opts = opts or ChainOptions()
    policy = policy or SelectionPolicy()
    n, m = len(v), len(s)
    if index.n != n or index.m != m:
        raise StructuralViolationError("match index does not belong to these sequences")

    states = _search(index, n, m, opts, full_cover=True) if opts.require_full_coverage else []
    full_coverage = bool(states)
    if not states:
        states = _search(index, n, m, opts, full_cover=False)
        if states:
            best = max(sum(b.length for b in st.blocks) for st in states)
            states = [st for st in states if sum(b.length for b in st.blocks) == best]
            full_coverage = best == n

    seen = set()
    entries = []
    for st in states:
        chain = canonicalize(CandidateAlignment(blocks=st.blocks))
        key = chain.key()
        if key in seen:
            continue
        seen.add(key)
        entries.append((chain, gapstats.chain_statistics(chain, m)))

    entries.sort(key=gapstats.sort_key(policy))
    truncated = len(entries) > opts.max_candidates
    if truncated:
        entries = entries[: opts.max_candidates]
    return ChainResult(entries=tuple(entries), truncated=truncated, full_coverage=full_coverage)


def swap_for_insertions(s: Sequence, v: Sequence) -> tuple:
    """Swap operand roles so that gaps in the result row read as insertions
    relative to the original reference; swapping twice restores the input."""
    return v, s


@dataclass(frozen=True)
class RenderedAlignment:
    """Three-line display: reference, match markers, placed fragment."""

    s_line: str
    marker_line: str
    v_line: str
    substitutions: tuple = ()  # reference positions of placed-but-unmatched symbols

    def text(self) -> str:
        return "\n".join((self.s_line, self.marker_line, self.v_line))


def render(chain: CandidateAlignment, s: Sequence, v: Sequence) -> RenderedAlignment:
    """Render a chain in the dash format: line 1 is the reference verbatim,
    line 2 marks matched positions with '|', line 3 places each fragment
    symbol at its reference position with '-' elsewhere (always length m).
    """
    if not chain.blocks:
        raise EmptyInputError("cannot render an empty chain")
    validate_chain(chain, s, v)
    m, n = len(s), len(v)
    row = ["-"] * m
    markers = [" "] * m
    for b in chain.blocks:
        for i in range(b.length):
            row[b.s_start + i] = v.residues[b.v_start + i]
            markers[b.s_start + i] = "|"

    subs = []

    def place(v_from: int, v_to: int, at: int) -> None:
        span = v_to - v_from
        for i in range(span):
            row[at + i] = v.residues[v_from + i]
            subs.append(at + i)

    first, last = chain.blocks[0], chain.blocks[-1]
    lead = first.v_start
    if lead:
        if first.s_start < lead:
            raise StructuralViolationError("no room for the unmatched leading span")
        place(0, lead, first.s_start - lead)
    prev = first
    for b in chain.blocks[1:]:
        skip = b.v_start - prev.v_end
        if skip:
            if b.s_start - prev.s_end < skip:
                raise StructuralViolationError("no room for an unmatched interior span")
            place(prev.v_end, b.v_start, prev.s_end)
        prev = b
    trail = n - last.v_end
    if trail:
        if m - last.s_end < trail:
            raise StructuralViolationError("no room for the unmatched trailing span")
        place(last.v_end, n, last.s_end)

    return RenderedAlignment(
        s_line=s.residues,
        marker_line="".join(markers),
        v_line="".join(row),
        substitutions=tuple(subs),
    )
