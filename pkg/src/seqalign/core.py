"""Shared domain types: sequences, match blocks, chains, gap statistics, scoring."""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .baselines import ScoredAlignment


class SeqalignError(Exception):
    """Base class for every error raised by this package."""


class EmptyInputError(SeqalignError):
    """An operation received an empty sequence, chain, or candidate list."""


class OrderViolationError(SeqalignError):
    """The fragment is longer than the reference; caller should swap operands."""


class StructuralViolationError(SeqalignError):
    """A block or chain violates ordering, bounds, or symbol-equality invariants."""


class SizeLimitError(SeqalignError):
    """A brute-force verifier was asked to run beyond its hard size limit."""


class ParseError(SeqalignError):
    """Malformed textual input; carries a 1-based line/column when known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        elif column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)


@dataclass(frozen=True)
class Alphabet:
    """A named set of admissible residue symbols."""

    name: str
    symbols: frozenset

    def validate(self, residues: str) -> None:
        """Raise ParseError at the first symbol outside the alphabet (1-based column)."""
        for i, ch in enumerate(residues):
            if ch not in self.symbols:
                raise ParseError(
                    f"symbol {ch!r} not in alphabet {self.name!r}", column=i + 1
                )


UPPERCASE = Alphabet("upper", frozenset(string.ascii_uppercase))
DNA = Alphabet("dna", frozenset("ACGT"))

ALPHABETS = {a.name: a for a in (UPPERCASE, DNA)}


def get_alphabet(name: str) -> Alphabet:
    try:
        return ALPHABETS[name]
    except KeyError:
        raise ParseError(f"unknown alphabet {name!r}; choose from {sorted(ALPHABETS)}") from None


@dataclass(frozen=True)
class Sequence:
    """An identified string of residues over uppercase ASCII letters."""

    id: str
    residues: str

    def __post_init__(self):
        bad = next((c for c in self.residues if c not in UPPERCASE.symbols), None)
        if bad is not None:
            raise ParseError(f"residue {bad!r} is not an uppercase ASCII letter")

    def __len__(self) -> int:
        return len(self.residues)


@dataclass(frozen=True, order=True)
class MatchBlock:
    """One recorded substring match: V[v_start:v_start+length] == S[s_start:s_start+length]."""

    v_start: int
    s_start: int
    length: int

    def __post_init__(self):
        if self.v_start < 0 or self.s_start < 0 or self.length < 1:
            raise StructuralViolationError(f"bad block coordinates {self!r}")

    @property
    def v_end(self) -> int:
        return self.v_start + self.length

    @property
    def s_end(self) -> int:
        return self.s_start + self.length


def validate_block(block: MatchBlock, s: Sequence, v: Sequence) -> None:
    """Check bounds and symbol-by-symbol equality of a block against both sequences."""
    if block.v_end > len(v) or block.s_end > len(s):
        raise StructuralViolationError(f"block {block} out of bounds for m={len(s)}, n={len(v)}")
    if v.residues[block.v_start : block.v_end] != s.residues[block.s_start : block.s_end]:
        raise StructuralViolationError(f"block {block} does not match the sequences")


def _check_chain_blocks(blocks: tuple) -> None:
    prev = None
    for b in blocks:
        if not isinstance(b, MatchBlock):
            raise StructuralViolationError(f"chain element {b!r} is not a MatchBlock")
        if prev is not None:
            if b.v_start < prev.v_end or b.s_start < prev.s_end:
                raise StructuralViolationError(
                    f"blocks {prev} and {b} overlap or cross"
                )
        prev = b


@dataclass(frozen=True)
class CandidateAlignment:
    """An ordered, compatible chain of match blocks placing V along S.

    Blocks are sorted by v_start and never overlap or cross in either
    sequence. `canonical` is set once consecutive blocks contiguous in
    both sequences have been merged.
    """

    blocks: tuple
    canonical: bool = False

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        _check_chain_blocks(self.blocks)

    @property
    def coverage(self) -> int:
        return sum(b.length for b in self.blocks)

    def key(self) -> tuple:
        """Lexicographic key on the block coordinate list; total order on chains."""
        return tuple((b.v_start, b.s_start, b.length) for b in self.blocks)


def canonicalize(chain: CandidateAlignment) -> CandidateAlignment:
    """Merge every consecutive block pair that is contiguous in both sequences.

    The rendering of the input and output chains is identical; the result is
    the unique canonical form, and the operation is idempotent.
    """
    merged = []
    for b in chain.blocks:
        if merged and merged[-1].v_end == b.v_start and merged[-1].s_end == b.s_start:
            last = merged.pop()
            merged.append(MatchBlock(last.v_start, last.s_start, last.length + b.length))
        else:
            merged.append(b)
    return CandidateAlignment(blocks=tuple(merged), canonical=True)


def validate_chain(chain: CandidateAlignment, s: Sequence, v: Sequence) -> None:
    """Re-validate every block of the chain against the actual sequences."""
    for b in chain.blocks:
        validate_block(b, s, v)


@dataclass(frozen=True)
class GapStatistics:
    """Interior gap runs of a chain with their mean and population variance."""

    runs: tuple
    mean: float
    variance: float


@dataclass(frozen=True)
class ScoringScheme:
    """Match/mismatch/gap parameters for the DP baselines (linear gap costs)."""

    match_score: float = 1.0
    mismatch_penalty: float = -1.0
    gap_penalty: float = -1.0

    def __post_init__(self):
        if self.mismatch_penalty > 0:
            raise ValueError("mismatch_penalty must be <= 0")
        if self.gap_penalty > 0:
            raise ValueError("gap_penalty must be <= 0")
        if not self.match_score > self.mismatch_penalty:
            raise ValueError("match_score must exceed mismatch_penalty")

    def score(self, a: str, b: str) -> float:
        return self.match_score if a == b else self.mismatch_penalty


@dataclass(frozen=True)
class ComparisonCounters:
    """Work counters for one matching run.

    substring_comparisons counts whole-substring equality tests,
    char_comparisons counts individual symbols inspected, and
    claimed_comparisons is the value of the advertised closed-form count
    sum((m - (n - k)) * (n - k) for k in 0..n-1), reported alongside the
    measured numbers for contrast.
    """

    substring_comparisons: int = 0
    char_comparisons: int = 0
    claimed_comparisons: int = 0

    def __post_init__(self):
        if min(self.substring_comparisons, self.char_comparisons, self.claimed_comparisons) < 0:
            raise ValueError("counters must be non-negative")


@dataclass(frozen=True)
class AlignmentReport:
    """Outcome of one CLI/library alignment run, ready for serialization.

    For the proposed algorithm `entries` holds (chain, statistics) pairs and
    `selected` indexes the winner; for the DP baselines `scored` holds the
    single scored alignment and `entries` is empty.
    """

    algorithm: str  # "proposed" | "nw" | "sw"
    s: Sequence
    v: Sequence
    entries: tuple = ()
    scored: Optional["ScoredAlignment"] = None
    selected: int = 0
    policy: Optional[str] = None
    counters: ComparisonCounters = field(default_factory=ComparisonCounters)
    swapped: bool = False
    full_coverage: bool = True
    truncated: bool = False
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.algorithm not in ("proposed", "nw", "sw"):
            raise ValueError(f"unknown algorithm tag {self.algorithm!r}")
        if self.entries and not 0 <= self.selected < len(self.entries):
            raise ValueError("selected index out of range")
