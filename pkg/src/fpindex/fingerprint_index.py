"""Fingerprint trie, backtracking function and the query pipeline.

A query string is answered in four steps:

1. hash the query set, ``H = sum(r**rank) mod P``;
2. peel it bottom-up: the backtracking function maps ``H_j`` to a rank
   ``b_j`` and ``H_{j-1} = H_j - r**b_j``;
3. check that the peeled string is a permutation of the query;
4. walk the peeled string, reversed, down the trie.

Steps 3 and 4 reject every answer the backtracking function makes up for
hash values it was never built on.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DuplicateCharacter, NotPrefixClosed, RetryLimitExceeded, UnknownFingerprint
from .naming import name_fingerprints
from .online_builders import BuildResult, build_mc, build_names_randomized
from .participation_tree import ParticipationTree, build_participation_tree
from .polyhash import find_prime
from .seqcore import Alphabet, Fingerprint, MaximalLocation, Sequence, normalize
from .set_equality import EqualityScratch, eq_bits, eq_hash, eq_partitioned
from .suffix_tree import build_suffix_tree


class FingerprintTrie:
    """One node per fingerprint; a child adds its edge label to the parent's set.

    Nodes are numbered level by level, root ``0`` is the empty set.
    """

    def __init__(self, parent: list, label: list):
        self.parent = parent
        self.label = label
        self.depth = [0] * len(parent)
        self.children = [dict() for _ in parent]
        for v in range(1, len(parent)):
            p = parent[v]
            self.depth[v] = self.depth[p] + 1
            self.children[p][label[v]] = v

    @property
    def size(self) -> int:
        return len(self.parent)

    def __len__(self) -> int:
        return len(self.parent)

    def child(self, v: int, c: int):
        return self.children[v].get(c)

    def string(self, v: int) -> tuple:
        out = []
        while v:
            out.append(self.label[v])
            v = self.parent[v]
        out.reverse()
        return tuple(out)

    def fingerprint(self, v: int) -> Fingerprint:
        return Fingerprint.from_ranks(self.string(v))

    def walk(self, ranks):
        v = 0
        for c in ranks:
            v = self.children[v].get(c)
            if v is None:
                return None
        return v


def build_trie(fingerprints, last_char: dict | None = None) -> FingerprintTrie:
    """Build the trie level by level.

    A fingerprint ``f`` hangs below ``f - {a}`` for the preferred ``a`` from
    ``last_char`` when that set is present, else for the smallest rank that
    works.  Input order fixes node order within a level.
    """
    last_char = last_char or {}
    by_size: dict = {}
    seen = set()
    for f in fingerprints:
        if not isinstance(f, Fingerprint):
            f = Fingerprint.from_ranks(f)
        if f.size == 0 or f in seen:
            continue
        seen.add(f)
        by_size.setdefault(f.size, []).append(f)
    parent = [-1]
    label = [-1]
    node_of = {Fingerprint.EMPTY: 0}
    for size in sorted(by_size):
        for f in by_size[size]:
            choice = None
            pref = last_char.get(f)
            if pref is not None and pref in f and f.remove(pref) in node_of:
                choice = pref
            else:
                for a in f:
                    if f.remove(a) in node_of:
                        choice = a
                        break
            if choice is None:
                raise NotPrefixClosed(f"no parent for fingerprint {f.ranks()}")
            node_of[f] = len(parent)
            parent.append(node_of[f.remove(choice)])
            label.append(choice)
    trie = FingerprintTrie(parent, label)
    trie.node_of = node_of
    return trie


@dataclass
class BacktrackFunction:
    """Hash value -> last character of the fingerprint's trie string."""

    P: int
    r: int
    sigma: int
    table: dict
    c: int = 1
    attempts: int = 1

    def __post_init__(self):
        self.powers = [pow(self.r, e, self.P) for e in range(self.sigma)]

    def lookup(self, h: int) -> int:
        # unknown values get an arbitrary rank, never an error
        got = self.table.get(h)
        return h % self.sigma if got is None else got

    def hash_ranks(self, ranks) -> int:
        pw = self.powers
        return sum(pw[c] for c in ranks) % self.P


def trie_hashes(trie: FingerprintTrie, powers: list, P: int) -> list:
    H = [0] * trie.size
    for v in range(1, trie.size):  # parents precede children
        H[v] = (H[trie.parent[v]] + powers[trie.label[v]]) % P
    return H


def build_backtrack(trie: FingerprintTrie, sigma: int, rng: random.Random | None = None,
                    budget: int = 10_000) -> BacktrackFunction:
    """Pick ``P`` in ``[|F|^2 sigma, 2 |F|^2 sigma]`` and redraw ``r`` until
    the ``|F|`` node hashes are distinct."""
    rng = rng or random.Random()
    m = trie.size - 1
    lo = max(2, m * m * sigma)
    hi = max(lo, 2 * m * m * sigma)
    P = find_prime(lo, hi, rng)
    for attempt in range(1, budget + 1):
        r = rng.randint(1, P - 1)
        powers = [pow(r, e, P) for e in range(sigma)]
        H = trie_hashes(trie, powers, P)
        table = {}
        for v in range(1, trie.size):
            if H[v] in table:
                break
            table[H[v]] = trie.label[v]
        else:
            return BacktrackFunction(P, r, sigma, table, 1, attempt)
    raise RetryLimitExceeded(f"no injective r after {budget} draws")


def _locate(s, n: int, m: int, t: int) -> MaximalLocation:
    """Maximal location with support ``m`` whose fingerprint is the first ``t``
    distinct characters read from ``m``."""
    members = set()
    p = m
    while True:
        c = s[p]
        if c not in members:
            if len(members) == t:
                break
            members.add(c)
        p += 1
        if p > n:
            break
    k = m
    while k > 1 and s[k - 1] in members:
        k -= 1
    return MaximalLocation(k, p - 1)


class TreeReport:
    """Report lists as participation-tree paths; a path's locations are
    rebuilt from its suffixes (the supports) and its length."""

    kind = "tree"

    def __init__(self, seq: Sequence, depth, lo, hi, order, groups):
        self.seq = seq
        self.depth = depth
        self.lo = lo
        self.hi = hi
        self.order = order
        self.groups = groups  # trie node -> list of tree nodes

    def locations(self, node: int) -> list:
        s, n = self.seq.s, self.seq.n
        out = []
        for z in self.groups[node]:
            t = self.depth[z]
            for m in self.order[self.lo[z]:self.hi[z]]:
                out.append(_locate(s, n, m, t))
        return out

    def count(self, node: int) -> int:
        return sum(self.hi[z] - self.lo[z] for z in self.groups[node])


class ListReport:
    """Report lists stored explicitly, one location list per fingerprint."""

    kind = "list"

    def __init__(self, lists):
        self.lists = lists  # trie node -> list of MaximalLocation

    def locations(self, node: int) -> list:
        return list(self.lists[node])

    def count(self, node: int) -> int:
        return len(self.lists[node])


METHODS = ("bits", "hash", "partitioned")


class FingerprintIndex:
    """Existential and report queries over the fingerprints of one text."""

    def __init__(self, seq: Sequence, alphabet: Alphabet, trie: FingerprintTrie,
                 backtrack: BacktrackFunction, report, meta: dict | None = None,
                 method: str = "bits", k: int = 2):
        self.seq = seq
        self.alphabet = alphabet
        self.trie = trie
        self.backtrack = backtrack
        self.report = report
        self.meta = dict(meta or {})
        if method not in METHODS:
            raise ValueError(f"unknown set-equality method {method!r}")
        self.method = method
        self.k = k

    @property
    def fingerprint_count(self) -> int:
        return self.trie.size - 1

    def __len__(self) -> int:
        return self.trie.size - 1

    def fingerprints(self):
        for v in range(1, self.trie.size):
            yield self.trie.fingerprint(v)

    def location_count(self) -> int:
        return sum(self.report.count(v) for v in range(1, self.trie.size))

    def new_scratch(self) -> EqualityScratch:
        return EqualityScratch(self.seq.sigma, self.k)

    def ranks(self, f):
        """Query symbols -> distinct ranks in order, or ``None`` if a symbol
        lies outside the alphabet."""
        if isinstance(f, str) and self.alphabet.size and isinstance(self.alphabet.symbols[0], int):
            f = f.encode("latin-1", errors="replace")
        out = []
        seen = set()
        for a in f:
            r = self.alphabet.rank_of.get(a)
            if r is None:
                return None
            if r not in seen:
                seen.add(r)
                out.append(r)
        return out

    def _peel(self, q: list) -> list:
        bt = self.backtrack
        pw, P = bt.powers, bt.P
        h = sum(pw[c] for c in q) % P
        peeled = []
        for _ in range(len(q)):
            b = bt.lookup(h)
            peeled.append(b)
            h = (h - pw[b]) % P
        return peeled

    def _equal(self, peeled, q, scratch) -> bool:
        try:
            if self.method == "hash":
                return eq_hash(peeled, q)
            if scratch is None:
                scratch = self._scratch()
            if self.method == "partitioned":
                return eq_partitioned(peeled, q, self.k, scratch)
            return eq_bits(peeled, q, scratch)
        except DuplicateCharacter:
            return False

    def _scratch(self) -> EqualityScratch:
        sc = getattr(self, "_own_scratch", None)
        if sc is None:
            sc = self._own_scratch = self.new_scratch()
        return sc

    def node_for_ranks(self, q: list, scratch: EqualityScratch | None = None):
        if not q:
            return None
        peeled = self._peel(q)
        if not self._equal(peeled, q, scratch):
            return None
        peeled.reverse()
        return self.trie.walk(peeled)

    def query_exists(self, f, scratch: EqualityScratch | None = None) -> bool:
        """True iff the set of symbols in ``f`` is a fingerprint of the text.

        Pass a private ``scratch`` when querying from several threads.
        """
        q = self.ranks(f)
        if q is None:
            return False
        return self.node_for_ranks(q, scratch) is not None

    def query_report(self, f, scratch: EqualityScratch | None = None) -> list:
        """All maximal locations of the set of symbols in ``f``, sorted."""
        q = self.ranks(f)
        node = None if q is None else self.node_for_ranks(q, scratch)
        if node is None:
            raise UnknownFingerprint(f"unknown fingerprint {f!r}")
        return sorted(self.report.locations(node))

    def query_report_raw(self, f, scratch=None) -> list:
        runmap = self.seq.runmap
        return [(runmap[loc.i - 1][0], runmap[loc.j - 1][1]) for loc in self.query_report(f, scratch)]


def _index_from_tree(seq, alphabet, pt: ParticipationTree, rng, meta, **kw) -> FingerprintIndex:
    names = name_fingerprints(pt, seq.sigma)
    first: dict = {}
    members: dict = {}
    for v in range(1, pt.size):  # preorder: discovery order
        nm = names[v]
        if nm not in first:
            first[nm] = v
            members[nm] = []
        members[nm].append(v)
    fps = []
    last_char = {}
    for nm, v in first.items():
        f = Fingerprint.from_ranks(pt.word(v))
        fps.append(f)
        last_char[f] = pt.label[v]
    trie = build_trie(fps, last_char)
    groups = [[] for _ in range(trie.size)]
    for f, nm in zip(fps, first):
        groups[trie.node_of[f]] = members[nm]
    backtrack = build_backtrack(trie, seq.sigma, rng)
    report = TreeReport(seq, pt.depth, pt.lo, pt.hi, pt.order, groups)
    return FingerprintIndex(seq, alphabet, trie, backtrack, report, meta, **kw)


def _index_from_records(seq, alphabet, built: BuildResult, rng, meta, **kw) -> FingerprintIndex:
    fps = []
    last_char = {}
    for rec in built.records.values():
        fps.append(rec.fingerprint)
        last_char.setdefault(rec.fingerprint, rec.last_char)
    trie = build_trie(fps, last_char)
    lists = [[] for _ in range(trie.size)]
    for rec in built.records.values():
        lists[trie.node_of[rec.fingerprint]].extend(rec.locations or ())
    backtrack = build_backtrack(trie, seq.sigma, rng)
    return FingerprintIndex(seq, alphabet, trie, backtrack, ListReport(lists), meta, **kw)


BUILDERS = ("exact", "randomized", "mc")


def build_index(text, builder: str = "exact", seed: int | None = None,
                rng: random.Random | None = None, method: str = "bits", k: int = 2,
                mc_c: int = 1) -> FingerprintIndex:
    """Normalize ``text`` (or take a ``(Sequence, Alphabet)`` pair) and index it.

    ``exact`` goes through the suffix and participation trees;
    ``randomized`` and ``mc`` use the streaming builders and keep explicit
    location lists.
    """
    if isinstance(text, tuple):
        seq, alphabet = text
    else:
        seq, alphabet = normalize(text)
    if rng is None:
        rng = random.Random(seed)
    meta = {"builder": builder, "seed": seed}
    if builder == "exact":
        pt = build_participation_tree(build_suffix_tree(seq))
        return _index_from_tree(seq, alphabet, pt, rng, meta, method=method, k=k)
    if builder == "randomized":
        built = build_names_randomized(seq, with_locations=True)
    elif builder == "mc":
        built = build_mc(seq, mc_c, rng, with_locations=True)
        meta.update(built.params)
    else:
        raise ValueError(f"unknown builder {builder!r}")
    return _index_from_records(seq, alphabet, built, rng, meta, method=method, k=k)
