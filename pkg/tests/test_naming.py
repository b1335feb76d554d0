import random

import pytest
from hypothesis import given

from fpindex import Fingerprint, build_participation_tree, build_suffix_tree, normalize
from fpindex.errors import DuplicateChange, RankOutOfRange
from fpindex.naming import name_fingerprints, name_list, padded_width, radix_sort_pairs
from fpindex.oracle import oracle_all

from conftest import A, random_simple, simple_sequences


def same_pattern(xs, ys):
    """Equal up to a consistent relabeling."""
    return len(xs) == len(ys) and all((xs[i] == xs[j]) == (ys[i] == ys[j])
                                      for i in range(len(xs)) for j in range(len(xs)))


def test_padded_width():
    assert [padded_width(s) for s in (1, 2, 3, 5, 8, 9)] == [1, 2, 4, 8, 8, 16]


def test_radix_sort_pairs():
    order, names = radix_sort_pairs([(1, 0), (1, 0), (1, 1)])
    assert names[0] == names[1] != names[2]
    assert radix_sort_pairs([]) == ([], [])
    assert len(set(radix_sort_pairs([(2, 2)] * 5)[1])) == 1
    pairs = [(3, 1), (0, 2), (3, 0), (0, 2)]
    order, names = radix_sort_pairs(pairs)
    assert [pairs[i] for i in order] == sorted(pairs)
    assert names == [2, 0, 1, 0]


def test_naming_figure():
    _, table = name_list([0, 2, 4, 5], 8)
    assert table.levels[0] == [1, 0, 1, 0, 1, 1, 0, 0]
    lv2, lv3, lv4 = table.levels[1:]
    # [2],[2],[3],[4] -> [5],[6] -> [7]
    assert same_pattern(lv2, [2, 2, 3, 4])
    assert lv3[0] != lv3[1] and len(lv4) == 1


def test_name_list_basics():
    names, table = name_list([3], 8)
    assert names[0] != table.ninit[-1]
    full = name_list([0, 2, 4, 5], 8)[0][-1]
    assert name_list([5, 4, 2, 0], 8)[0][-1] == full
    with pytest.raises(DuplicateChange):
        name_list([1, 2, 1], 8)
    with pytest.raises(RankOutOfRange):
        name_list([9], 8)


def test_name_list_prefixes_are_distinct():
    names, _ = name_list([6, 1, 3, 0, 7], 8)
    assert len(set(names)) == 5


def names_by_set(raw):
    seq, _ = normalize(raw)
    pt = build_participation_tree(build_suffix_tree(seq))
    names = name_fingerprints(pt, seq.sigma)
    out = {}
    for v in range(1, pt.size):
        out.setdefault(Fingerprint.from_ranks(pt.word(v)), set()).add(names[v])
    return seq, names, out


def test_a_has_17_names():
    seq, names, by_set = names_by_set(A)
    assert len(set(names[1:])) == 17
    assert all(len(v) == 1 for v in by_set.values())
    assert names[0] not in names[1:]


def test_tables_restored_after_dfs():
    seq, _ = normalize(A)
    pt = build_participation_tree(build_suffix_tree(seq))
    trace = []
    name_fingerprints(pt, seq.sigma, trace)
    assert len(trace) == 3  # sigma 5 pads to 8
    for before, after, distinct in trace:
        assert before == after
        assert distinct <= pt.edge_count + 1


def test_random_bijection_against_oracle():
    rng = random.Random(5)
    for _ in range(60):
        sigma = rng.choice([2, 3, 5, 8])
        raw = random_simple(rng, rng.randint(1, 100), sigma)
        seq, names, by_set = names_by_set(raw)
        truth = oracle_all(seq)
        assert set(by_set) == truth.F
        flat = [next(iter(v)) for v in by_set.values()]
        assert all(len(v) == 1 for v in by_set.values())
        assert len(set(flat)) == len(flat)


@given(simple_sequences())
def test_names_bijective(raw):
    _, _, by_set = names_by_set(raw)
    flat = [n for v in by_set.values() for n in v]
    assert len(flat) == len(set(flat)) == len(by_set)
