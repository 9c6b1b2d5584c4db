import random

import pytest

from seqalign import (
    CandidateAlignment,
    ChainOptions,
    EmptyInputError,
    MatchBlock,
    SelectionPolicy,
    Sequence,
    StructuralViolationError,
    canonicalize,
    enumerate_candidates,
    enumerate_matches,
    gap_runs,
    render,
    select,
    swap_for_insertions,
)
from seqalign.oracle import exhaustive_chains
from conftest import KNOWN_PLACEMENTS, S_DNA, V_DNA, chain_of

UNCAPPED = ChainOptions(max_candidates=10**9, beam_width=10**9)


def _random_pair(rng, max_m, max_n, symbols):
    m = rng.randint(1, max_m)
    n = rng.randint(1, min(m, max_n))
    return (
        Sequence("s", "".join(rng.choice(symbols) for _ in range(m))),
        Sequence("v", "".join(rng.choice(symbols) for _ in range(n))),
    )


def test_dna_example_contains_known_placements(dna_pair):
    s, v = dna_pair
    result = enumerate_candidates(enumerate_matches(s, v), s, v)  # default caps
    keys = {chain.key() for chain in result.chains}
    for coords in KNOWN_PLACEMENTS:
        assert coords in keys
    assert result.full_coverage
    for chain in result.chains:
        assert chain.coverage == len(v)
        assert chain.canonical


def test_identity_pair_single_candidate():
    s = v = Sequence("x", "ABC")
    result = enumerate_candidates(enumerate_matches(s, v), s, v)
    assert result.full_coverage
    assert len(result.entries) == 1
    chain, stats = result.entries[0]
    assert chain.blocks == (MatchBlock(0, 0, 3),)
    assert stats.runs == ()


def test_uncapped_equals_exhaustive_on_dna_example(dna_pair):
    s, v = dna_pair
    index = enumerate_matches(s, v)
    got = enumerate_candidates(index, s, v, UNCAPPED)
    want = exhaustive_chains(index, len(v))
    assert {c.key() for c in got.chains} == {c.key() for c in want}
    assert not got.truncated


def test_uncapped_equals_exhaustive_on_random_instances():
    rng = random.Random(5)
    for _ in range(60):
        s, v = _random_pair(rng, 12, 6, "AB")
        index = enumerate_matches(s, v)
        result = enumerate_candidates(index, s, v, UNCAPPED)
        want = {c.key() for c in exhaustive_chains(index, len(v))}
        got = {c.key() for c in result.chains} if result.full_coverage else set()
        assert got == want, (s.residues, v.residues)


def test_emitted_chains_are_unique_and_canonical():
    rng = random.Random(9)
    for _ in range(40):
        s, v = _random_pair(rng, 12, 6, "AB")
        result = enumerate_candidates(enumerate_matches(s, v), s, v, UNCAPPED)
        keys = [c.key() for c in result.chains]
        assert len(keys) == len(set(keys))
        for chain in result.chains:
            assert canonicalize(chain).blocks == chain.blocks


def test_beam_keeps_policy_optimal_chain():
    rng = random.Random(3)
    policy = SelectionPolicy()
    for _ in range(50):
        s, v = _random_pair(rng, 12, 6, "AB")
        index = enumerate_matches(s, v)
        full = enumerate_candidates(index, s, v, UNCAPPED, policy=policy)
        if not full.entries or not full.full_coverage:
            continue
        beamed = enumerate_candidates(index, s, v, ChainOptions(), policy=policy)
        best_full = full.entries[select(full.entries, policy)]
        best_beamed = beamed.entries[select(beamed.entries, policy)]
        assert best_beamed[0].key() == best_full[0].key()


def test_truncation_reports_flag(dna_pair):
    s, v = dna_pair
    result = enumerate_candidates(
        enumerate_matches(s, v), s, v, ChainOptions(max_candidates=2, beam_width=256)
    )
    assert result.truncated
    assert len(result.entries) == 2


def test_ordering_follows_policy(dna_pair):
    s, v = dna_pair
    index = enumerate_matches(s, v)
    by_var = enumerate_candidates(index, s, v, policy=SelectionPolicy(mode="variance_only"))
    variances = [stats.variance for _, stats in by_var.entries]
    assert variances == sorted(variances)
    by_mean = enumerate_candidates(index, s, v)
    means = [stats.mean for _, stats in by_mean.entries]
    assert means == sorted(means)


def test_no_full_cover_outcome_keeps_best_partial():
    s, v = Sequence("s", "AAAA"), Sequence("v", "AB")
    result = enumerate_candidates(enumerate_matches(s, v), s, v)
    assert not result.full_coverage
    assert result.entries  # distinguishable from an empty result
    assert all(chain.coverage == 1 for chain in result.chains)
    # The unmatched fragment symbol needs room in the reference, so the
    # matched A can sit anywhere except the last position.
    assert {chain.blocks[0].s_start for chain in result.chains} == {0, 1, 2}


def test_disjoint_alphabets_yield_empty_partial_result():
    s, v = Sequence("s", "AAAA"), Sequence("v", "BB")
    result = enumerate_candidates(enumerate_matches(s, v), s, v)
    assert not result.full_coverage
    assert result.entries == ()


def test_relaxed_coverage_mode_maximizes_coverage():
    s, v = Sequence("s", "AAAA"), Sequence("v", "AB")
    opts = ChainOptions(require_full_coverage=False)
    result = enumerate_candidates(enumerate_matches(s, v), s, v, opts)
    assert not result.full_coverage
    assert {chain.coverage for chain in result.chains} == {1}


def test_prefer_larger_blocks_flag_does_not_change_output(dna_pair):
    s, v = dna_pair
    index = enumerate_matches(s, v)
    a = enumerate_candidates(index, s, v, ChainOptions(prefer_larger_blocks=True))
    b = enumerate_candidates(index, s, v, ChainOptions(prefer_larger_blocks=False))
    assert [c.key() for c in a.chains] == [c.key() for c in b.chains]


def test_index_sequence_mismatch_rejected(dna_pair):
    s, v = dna_pair
    index = enumerate_matches(s, v)
    with pytest.raises(StructuralViolationError):
        enumerate_candidates(index, s, Sequence("v", "TACT"))


def test_chain_options_validation():
    with pytest.raises(ValueError):
        ChainOptions(max_candidates=0)
    with pytest.raises(ValueError):
        ChainOptions(beam_width=0)


def test_swap_is_a_pure_involution(dna_pair):
    s, v = dna_pair
    swapped = swap_for_insertions(s, v)
    assert swapped == (v, s)
    assert swap_for_insertions(*swapped) == (s, v)


def test_swap_exposes_insertions_as_gap_runs():
    # The fragment carries an extra G relative to the reference; after the
    # swap the alignment's single gap run sits exactly on that insertion.
    reference, fragment = Sequence("s", "ACT"), Sequence("v", "ACGT")
    s, v = swap_for_insertions(reference, fragment)
    assert (s, v) == (fragment, reference)
    result = enumerate_candidates(enumerate_matches(s, v), s, v)
    assert result.full_coverage
    chain = result.chains[select(result.entries)]
    assert gap_runs(chain, len(s)) == (1,)
    assert chain.blocks == (MatchBlock(0, 0, 2), MatchBlock(2, 3, 1))


def test_render_known_placement(dna_pair):
    s, v = dna_pair
    rendered = render(chain_of(KNOWN_PLACEMENTS[0]), s, v)
    assert rendered.s_line == S_DNA
    assert rendered.v_line == "--T---ACTAG--------G---AG-------"
    assert len(rendered.v_line) == len(S_DNA)
    assert rendered.marker_line.count("|") == len(V_DNA)
    assert rendered.substitutions == ()


def test_render_identity():
    s = v = Sequence("x", "ABC")
    rendered = render(chain_of(((0, 0, 3),)), s, v)
    assert rendered.v_line == "ABC"
    assert rendered.marker_line == "|||"


def test_render_line_length_and_symbol_order():
    rng = random.Random(21)
    for _ in range(40):
        s, v = _random_pair(rng, 14, 7, "AC")
        result = enumerate_candidates(enumerate_matches(s, v), s, v, UNCAPPED)
        for chain in result.chains[:20]:
            rendered = render(chain, s, v)
            assert len(rendered.v_line) == len(s)
            # Every emitted chain is renderable, and the placement rule puts
            # all fragment symbols on the line in order: matched ones under
            # their blocks, leftover spans in the neighboring gaps.
            placed = [c for c in rendered.v_line if c != "-"]
            assert "".join(placed) == v.residues
            assert rendered.marker_line.count("|") == chain.coverage


def test_render_places_substituted_span():
    s, v = Sequence("s", "AXXB"), Sequence("v", "ACB")
    chain = chain_of(((0, 0, 1), (2, 3, 1)))
    rendered = render(chain, s, v)
    assert rendered.v_line == "AC-B"
    assert rendered.substitutions == (1,)
    assert rendered.marker_line == "|  |"


def test_render_rejects_bad_input():
    s, v = Sequence("s", "ACGT"), Sequence("v", "AC")
    with pytest.raises(EmptyInputError):
        render(CandidateAlignment(blocks=()), s, v)
    with pytest.raises(StructuralViolationError):
        render(chain_of(((0, 2, 2),)), s, v)  # symbols disagree
    # No room to place the unmatched leading symbol.
    with pytest.raises(StructuralViolationError):
        render(chain_of(((1, 0, 1),)), Sequence("s", "CGT"), Sequence("v", "AC"))
