"""Sequence ingestion, dash-format alignment parsing, and report output.

Supports standard FASTA plus a plain-text mode (one raw sequence per file)
for letter-string inputs that are not DNA. Reports serialize either as the
three-line text display with a statistics table, or as a versioned JSON
document; JSON carries full-precision numbers while text rounds statistics
to three decimals.
"""

from __future__ import annotations

import json
import warnings
from typing import Optional

from . import chainer
from .baselines import ScoredAlignment
from .core import (
    Alphabet,
    AlignmentReport,
    CandidateAlignment,
    ComparisonCounters,
    EmptyInputError,
    GapStatistics,
    MatchBlock,
    ParseError,
    Sequence,
    UPPERCASE,
    canonicalize,
    validate_chain,
)

SCHEMA_VERSION = 1

_WS = " \t\r"


def _clean_line(raw: str, line_no: int, alphabet: Alphabet) -> str:
    """Uppercase one sequence line, dropping whitespace; error at the exact column."""
    out = []
    for col, ch in enumerate(raw, start=1):
        if ch in _WS:
            continue
        up = ch.upper()
        if up not in alphabet.symbols:
            raise ParseError(
                f"symbol {ch!r} not in alphabet {alphabet.name!r}", line=line_no, column=col
            )
        out.append(up)
    return "".join(out)


def parse_fasta(stream, alphabet: Alphabet = UPPERCASE) -> list:
    """Parse FASTA records into validated sequences.

    Sequence lines are concatenated with whitespace stripped and symbols
    uppercased. Duplicate ids get a deterministic numeric suffix and a
    warning.
    """
    text = stream if isinstance(stream, str) else stream.read()
    records: list = []
    header: Optional[str] = None
    parts: list = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            if header is not None:
                records.append((header, "".join(parts)))
            header = line[1:].strip() or f"seq{len(records) + 1}"
            parts = []
        else:
            if header is None:
                raise ParseError("sequence data before the first '>' header", line=line_no)
            parts.append(_clean_line(raw, line_no, alphabet))
    if header is not None:
        records.append((header, "".join(parts)))
    if not records:
        raise EmptyInputError("no FASTA records found")

    seen: dict = {}
    out = []
    for rid, residues in records:
        seen[rid] = seen.get(rid, 0) + 1
        if seen[rid] > 1:
            new_id = f"{rid}.{seen[rid]}"
            warnings.warn(f"duplicate sequence id {rid!r} renamed to {new_id!r}")
            rid = new_id
        out.append(Sequence(id=rid, residues=residues))
    return out


def emit_fasta(seqs, width: int = 60) -> str:
    lines = []
    for seq in seqs:
        lines.append(f">{seq.id}")
        for i in range(0, len(seq.residues), width):
            lines.append(seq.residues[i : i + width])
        if not seq.residues:
            lines.append("")
    return "\n".join(lines) + "\n"


def parse_plain(text: str, id: str = "seq", alphabet: Alphabet = UPPERCASE) -> Sequence:
    """One raw sequence: all whitespace dropped, symbols uppercased and validated."""
    parts = [
        _clean_line(raw, line_no, alphabet)
        for line_no, raw in enumerate(text.splitlines(), start=1)
    ]
    residues = "".join(parts)
    if not residues:
        raise EmptyInputError("no sequence symbols in plain-text input")
    return Sequence(id=id, residues=residues)


def load_sequences(path, alphabet: Alphabet = UPPERCASE) -> list:
    """Read a FASTA or plain-text sequence file (FASTA when it starts with '>')."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith(">"):
        return parse_fasta(text, alphabet)
    name = str(path).rsplit("/", 1)[-1]
    return [parse_plain(text, id=name, alphabet=alphabet)]


def parse_rendered(block, s: Sequence, v: Sequence) -> CandidateAlignment:
    """Recover the canonical chain from a three-line dash-format display.

    Line 3 may omit trailing dashes (they are padded back to length m);
    every non-dash symbol must be the next fragment symbol in order, and
    '|'-marked columns must agree with the reference.
    """
    lines = block.splitlines() if isinstance(block, str) else [str(ln) for ln in block]
    if len(lines) < 3:
        raise ParseError("expected a three-line alignment block")
    s_line, marker_line, v_line = (ln.rstrip("\n") for ln in lines[:3])
    m, n = len(s), len(v)
    if s_line and s_line != s.residues:
        raise ParseError("line 1 does not reproduce the reference sequence")
    if len(v_line) > m:
        raise ParseError(f"line 3 is longer ({len(v_line)}) than the reference ({m})")
    v_line = v_line.ljust(m, "-")
    marker_line = marker_line.ljust(m)
    # A blank marker line means markers were omitted; infer a match wherever
    # the placed symbol agrees with the reference.
    has_markers = "|" in marker_line

    blocks: list = []
    k = 0  # next fragment symbol to account for
    for c in range(m):
        ch = v_line[c]
        marked = marker_line[c] == "|" if has_markers else ch != "-" and ch == s.residues[c]
        if ch == "-":
            if marked:
                raise ParseError("match marker over a gap", column=c + 1)
            continue
        if k >= n or ch != v.residues[k]:
            raise ParseError(
                f"symbol {ch!r} is not the next fragment symbol", column=c + 1
            )
        if marked:
            if ch != s.residues[c]:
                raise ParseError(
                    f"marked symbol {ch!r} disagrees with the reference", column=c + 1
                )
            last = blocks[-1] if blocks else None
            if last is not None and last.s_end == c and last.v_end == k:
                blocks[-1] = MatchBlock(last.v_start, last.s_start, last.length + 1)
            else:
                blocks.append(MatchBlock(k, c, 1))
        k += 1
    if k != n:
        raise ParseError(f"only {k} of {n} fragment symbols appear in line 3")
    if not blocks:
        raise ParseError("alignment contains no matched positions")
    chain = canonicalize(CandidateAlignment(blocks=tuple(blocks)))
    validate_chain(chain, s, v)
    return chain


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _candidate_payload(report: AlignmentReport) -> list:
    out = []
    for chain, stats in report.entries:
        rendered = chainer.render(chain, report.s, report.v)
        out.append(
            {
                "blocks": [[b.v_start, b.s_start, b.length] for b in chain.blocks],
                "coverage": chain.coverage,
                "runs": list(stats.runs),
                "mean": stats.mean,
                "variance": stats.variance,
                "rendered": [rendered.s_line, rendered.marker_line, rendered.v_line],
                "substitutions": list(rendered.substitutions),
            }
        )
    return out


def emit_report(report: AlignmentReport, format: str = "text") -> str:
    if format == "json":
        return _emit_json(report)
    if format == "text":
        return _emit_text(report)
    raise ValueError(f"unknown report format {format!r}")


def _emit_json(report: AlignmentReport) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "algorithm": report.algorithm,
        "s": {"id": report.s.id, "residues": report.s.residues},
        "v": {"id": report.v.id, "residues": report.v.residues},
        "swapped": report.swapped,
        "policy": report.policy,
        "options": report.options,
        "counters": {
            "substring_comparisons": report.counters.substring_comparisons,
            "char_comparisons": report.counters.char_comparisons,
            "claimed_comparisons": report.counters.claimed_comparisons,
        },
        "full_coverage": report.full_coverage,
        "truncated": report.truncated,
        "selected": report.selected,
        "candidates": _candidate_payload(report),
        "scored": None
        if report.scored is None
        else {
            "aligned_s": report.scored.aligned_s,
            "aligned_v": report.scored.aligned_v,
            "score": report.scored.score,
            "match_mask": list(report.scored.match_mask),
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def _emit_text(report: AlignmentReport) -> str:
    lines = [
        f"algorithm: {report.algorithm}",
        f"s: {report.s.id}  m={len(report.s)}",
        f"v: {report.v.id}  n={len(report.v)}",
    ]
    if report.swapped:
        lines.append("note: operands swapped; gap runs mark insertions relative to the original reference")
    if report.algorithm == "proposed":
        lines.append(f"policy: {report.policy}")
        coverage = "full" if report.full_coverage else "partial"
        lines.append(
            f"coverage: {coverage}  candidates: {len(report.entries)}"
            + ("  (truncated)" if report.truncated else "")
        )
        c = report.counters
        lines.append(
            "counters: "
            f"substring_comparisons={c.substring_comparisons} "
            f"char_comparisons={c.char_comparisons} "
            f"claimed_comparisons={c.claimed_comparisons}"
        )
        if not report.entries:
            lines.append("no alignment: the sequences share no admissible match blocks")
        for i, (chain, stats) in enumerate(report.entries):
            mark = " *" if i == report.selected else ""
            runs = ",".join(str(r) for r in stats.runs) or "none"
            lines.append("")
            lines.append(
                f"#{i + 1}{mark} gap mean/variance: {_fmt(stats.mean)} {_fmt(stats.variance)}"
                f"  runs: {runs}  coverage: {chain.coverage}/{len(report.v)}"
            )
            lines.append(chainer.render(chain, report.s, report.v).text())
    else:
        lines.append(f"score: {report.scored.score:g}")
        mask = "".join("|" if hit else " " for hit in report.scored.match_mask)
        lines.append(report.scored.aligned_s)
        lines.append(mask)
        lines.append(report.scored.aligned_v)
    return "\n".join(lines) + "\n"


def report_from_json(text: str) -> AlignmentReport:
    """Rebuild an AlignmentReport from its JSON form (schema version 1)."""
    doc = json.loads(text)
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported report schema_version {version!r}")
    entries = []
    for cand in doc["candidates"]:
        chain = CandidateAlignment(
            blocks=tuple(MatchBlock(*b) for b in cand["blocks"]), canonical=True
        )
        stats = GapStatistics(
            runs=tuple(cand["runs"]), mean=cand["mean"], variance=cand["variance"]
        )
        entries.append((chain, stats))
    scored = None
    if doc["scored"] is not None:
        sc = doc["scored"]
        scored = ScoredAlignment(
            aligned_s=sc["aligned_s"],
            aligned_v=sc["aligned_v"],
            score=sc["score"],
            match_mask=tuple(sc["match_mask"]),
        )
    counters = doc["counters"]
    return AlignmentReport(
        algorithm=doc["algorithm"],
        s=Sequence(**doc["s"]),
        v=Sequence(**doc["v"]),
        entries=tuple(entries),
        scored=scored,
        selected=doc["selected"],
        policy=doc["policy"],
        counters=ComparisonCounters(
            substring_comparisons=counters["substring_comparisons"],
            char_comparisons=counters["char_comparisons"],
            claimed_comparisons=counters["claimed_comparisons"],
        ),
        swapped=doc["swapped"],
        full_coverage=doc["full_coverage"],
        truncated=doc["truncated"],
        options=doc["options"],
    )
