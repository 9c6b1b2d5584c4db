"""Reference global (Needleman-Wunsch) and local (Smith-Waterman) aligners.

Plain dynamic programming with linear gap costs. Traceback ties break with
fixed priority diagonal > up > left ("up" consumes a reference symbol,
"left" a fragment symbol); for the local aligner the start cell is the
first maximum in row-major order. Both choices are part of the contract so
outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import EmptyInputError, ScoringScheme, Sequence

GAP = "-"


@dataclass(frozen=True)
class ScoredAlignment:
    """A pair of gapped rows with the score of their column-wise sum."""

    aligned_s: str
    aligned_v: str
    score: float
    match_mask: tuple

    def __post_init__(self):
        if len(self.aligned_s) != len(self.aligned_v):
            raise ValueError("aligned rows must have equal length")


def column_score(aligned_s: str, aligned_v: str, scheme: ScoringScheme) -> float:
    """Recompute the score of an alignment column by column."""
    total = 0.0
    for a, b in zip(aligned_s, aligned_v, strict=True):
        if a == GAP and b == GAP:
            raise ValueError("column with a gap in both rows")
        if a == GAP or b == GAP:
            total += scheme.gap_penalty
        else:
            total += scheme.score(a, b)
    return total


def _match_mask(aligned_s: str, aligned_v: str) -> tuple:
    return tuple(
        a == b and a != GAP for a, b in zip(aligned_s, aligned_v)
    )


def needleman_wunsch(s: Sequence, v: Sequence, scheme: ScoringScheme | None = None) -> ScoredAlignment:
    """Optimal global alignment of the two sequences under the scheme."""
    scheme = scheme or ScoringScheme()
    a, b = s.residues, v.residues
    m, n = len(a), len(b)
    if m == 0 or n == 0:
        raise EmptyInputError("needleman_wunsch requires two non-empty sequences")

    gap = scheme.gap_penalty
    grid = [[0.0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        grid[i][0] = gap * i
    for j in range(1, n + 1):
        grid[0][j] = gap * j
    for i in range(1, m + 1):
        row, above = grid[i], grid[i - 1]
        ai = a[i - 1]
        for j in range(1, n + 1):
            row[j] = max(
                above[j - 1] + scheme.score(ai, b[j - 1]),
                above[j] + gap,
                row[j - 1] + gap,
            )

    out_s: list = []
    out_v: list = []
    i, j = m, n
    while i > 0 or j > 0:
        here = grid[i][j]
        if i > 0 and j > 0 and here == grid[i - 1][j - 1] + scheme.score(a[i - 1], b[j - 1]):
            out_s.append(a[i - 1])
            out_v.append(b[j - 1])
            i, j = i - 1, j - 1
        elif i > 0 and here == grid[i - 1][j] + gap:
            out_s.append(a[i - 1])
            out_v.append(GAP)
            i -= 1
        else:
            out_s.append(GAP)
            out_v.append(b[j - 1])
            j -= 1
    aligned_s = "".join(reversed(out_s))
    aligned_v = "".join(reversed(out_v))
    return ScoredAlignment(
        aligned_s=aligned_s,
        aligned_v=aligned_v,
        score=grid[m][n],
        match_mask=_match_mask(aligned_s, aligned_v),
    )


def smith_waterman(s: Sequence, v: Sequence, scheme: ScoringScheme | None = None) -> ScoredAlignment:
    """Best-scoring local alignment (zero floor); empty alignment scores 0."""
    scheme = scheme or ScoringScheme()
    a, b = s.residues, v.residues
    m, n = len(a), len(b)
    if m == 0 or n == 0:
        raise EmptyInputError("smith_waterman requires two non-empty sequences")

    gap = scheme.gap_penalty
    grid = [[0.0] * (n + 1) for _ in range(m + 1)]
    best, best_i, best_j = 0.0, 0, 0
    for i in range(1, m + 1):
        row, above = grid[i], grid[i - 1]
        ai = a[i - 1]
        for j in range(1, n + 1):
            val = max(
                0.0,
                above[j - 1] + scheme.score(ai, b[j - 1]),
                above[j] + gap,
                row[j - 1] + gap,
            )
            row[j] = val
            if val > best:  # strict: keeps the first maximum in row-major order
                best, best_i, best_j = val, i, j

    out_s: list = []
    out_v: list = []
    i, j = best_i, best_j
    while grid[i][j] > 0:
        here = grid[i][j]
        if i > 0 and j > 0 and here == grid[i - 1][j - 1] + scheme.score(a[i - 1], b[j - 1]):
            out_s.append(a[i - 1])
            out_v.append(b[j - 1])
            i, j = i - 1, j - 1
        elif i > 0 and here == grid[i - 1][j] + gap:
            out_s.append(a[i - 1])
            out_v.append(GAP)
            i -= 1
        else:
            out_s.append(GAP)
            out_v.append(b[j - 1])
            j -= 1
    aligned_s = "".join(reversed(out_s))
    aligned_v = "".join(reversed(out_v))
    return ScoredAlignment(
        aligned_s=aligned_s,
        aligned_v=aligned_v,
        score=best,
        match_mask=_match_mask(aligned_s, aligned_v),
    )
