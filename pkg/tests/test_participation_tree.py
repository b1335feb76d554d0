from hypothesis import given, settings

from fpindex import EfoList, Fingerprint, build_participation_tree, build_suffix_tree, normalize
from fpindex.oracle import check_phi, oracle_all
from fpindex.participation_tree import efo_step, root_paths

from conftest import A, rank_str, simple_sequences


def pt_of(raw):
    seq, al = normalize(raw)
    return seq, al, build_participation_tree(build_suffix_tree(seq))


def efo_at(seq, i):
    efo = EfoList(seq)
    while efo.i > i:
        efo_step(efo, seq, efo.i)
    return efo


def test_efo_examples():
    seq, al = normalize(A)
    efo = efo_at(seq, 3)
    cells = efo.cells()
    assert rank_str([r for r, _ in cells], al) == "acebd#"
    assert [p for _, p in cells] == [3, 4, 5, 7, 10, 11]
    efo = efo_at(seq, 2)
    cells = efo.cells()
    assert rank_str([r for r, _ in cells], al) == "baced#"
    assert [p for _, p in cells] == [2, 3, 4, 5, 10, 11]
    assert efo.tp_cell == (al.rank("e"), 5)


def test_efo_base_case():
    seq, al = normalize(A)
    efo = EfoList(seq)
    assert efo.cells() == [(al.rank("d"), 10), (seq.sigma, 11)]
    assert efo.tp == efo.tail


@given(simple_sequences(max_n=40))
def test_efo_positions_increase(raw):
    seq, _ = normalize(raw)
    efo = EfoList(seq)
    while True:
        cells = efo.cells()
        pos = [p for _, p in cells]
        assert pos == sorted(pos) and pos[0] == efo.i and pos[-1] == seq.n + 1
        ranks = [r for r, _ in cells]
        assert len(set(ranks)) == len(ranks)
        for r in range(seq.sigma):
            assert (efo.pos[r] != 0) == (r in ranks)
        if efo.i == 1:
            break
        efo.step()


def test_a_tree_paths():
    seq, al, pt = pt_of(A)
    words = {rank_str(w, al) for w, _ in root_paths(pt)}
    assert {"ba", "eabcd"} <= words
    assert pt.edge_count <= 17
    truth = oracle_all(seq)
    for w, _ in root_paths(pt):
        assert Fingerprint.from_ranks(w) in truth.F
    assert check_phi(seq, truth, list(root_paths(pt))) == []


def test_ab_tree_paths():
    # the construction yields three root paths; {a,b} is a fingerprint of "ab"
    seq, al, pt = pt_of("ab")
    assert sorted(rank_str(w, al) for w, _ in root_paths(pt)) == ["a", "ab", "b"]


def test_periodic_word_keeps_full_path():
    seq, al, pt = pt_of("abab")
    paths = {rank_str(w, al): s for w, s in root_paths(pt)}
    assert paths == {"a": {1, 3}, "ab": {3}, "b": {2, 4}}


def test_dot_export():
    seq, al, pt = pt_of(A)
    dot = pt.to_dot(al)
    assert dot.count("->") == pt.edge_count


@settings(max_examples=150)
@given(simple_sequences(max_n=60, max_sigma=6))
def test_partition_against_oracle(raw):
    seq, _, pt = pt_of(raw)
    truth = oracle_all(seq)
    paths = list(root_paths(pt))
    assert check_phi(seq, truth, paths) == []
    assert pt.edge_count <= truth.copy_class_count
    sentinel = seq.sigma
    for w, _ in paths:
        assert len(set(w)) == len(w) and sentinel not in w
    assert {Fingerprint.from_ranks(w) for w, _ in paths} == truth.F
    # each suffix start is attached exactly once
    attached = [m for a in pt.attached for m in a]
    assert sorted(attached) == list(range(1, seq.n + 1))
