"""Streaming fingerprint builders fed by per-position change lists.

Every maximal location has a unique support ``m`` and its O-label is a
non-empty proper prefix of ``lfo(m)`` (the sentinel closes the list when
``s_m`` never recurs).  So walking ``lfo(m)`` for ``m = n .. 1`` visits each
maximal location exactly once, and the builders only ever hold one change
list at a time.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ModulusTooLarge
from .naming import padded_width
from .participation_tree import EfoList
from .polyhash import MAX_MODULUS, find_prime
from .seqcore import Fingerprint, MaximalLocation, Sequence


@dataclass(frozen=True)
class ChangeList:
    """``lfo(m)`` split into its characters and their positions.

    ``chars`` excludes the sentinel, ``positions`` covers every cell of
    ``lfo(m)`` including a closing sentinel.  Prefix ``t`` (``1 <= t <=
    count``) is the O-label of the maximal location with support ``m`` that
    ends just before the ``(t + 1)``-th character.
    """

    m: int
    chars: tuple
    positions: tuple

    @property
    def count(self) -> int:
        return len(self.positions) - 1

    def end(self, t: int) -> int:
        """Position of the ``t``-th distinct character after ``m``."""
        return self.positions[t - 1]

    def right(self, t: int) -> int:
        return self.positions[t] - 1


def enumerate_change_lists(seq: Sequence):
    """Yield one :class:`ChangeList` per position, from ``m = n`` down to 1."""
    efo = EfoList(seq)
    pos, nxt = efo.pos, efo.next
    sentinel = seq.sigma
    for m in range(seq.n, 0, -1):
        if m < seq.n:
            efo.step()
        stop = efo.tp
        chars = []
        positions = []
        r = efo.head
        while True:
            positions.append(pos[r])
            if r != sentinel:
                chars.append(r)
            if r == stop:
                break
            r = nxt[r]
        yield ChangeList(m, tuple(chars), tuple(positions))


def _left_ends(seq: Sequence, cl: ChangeList):
    """Left end of the maximal location of every valid prefix of ``cl``."""
    s = seq.s
    k = cl.m
    members = set()
    out = []
    for t in range(cl.count):
        members.add(cl.chars[t])
        while k > 1 and s[k - 1] in members:
            k -= 1
        out.append(k)
    return out


def change_list_locations(seq: Sequence, cl: ChangeList) -> list:
    return [MaximalLocation(k, cl.right(t + 1)) for t, k in enumerate(_left_ends(seq, cl))]


@dataclass
class NameRecord:
    fingerprint: Fingerprint
    witness: MaximalLocation
    last_char: int
    locations: list | None = None


@dataclass
class BuildResult:
    """Names produced by a builder, in order of first discovery."""

    records: dict
    builder: str
    params: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.records)

    def fingerprints(self) -> list:
        return [rec.fingerprint for rec in self.records.values()]

    @property
    def location_count(self) -> int:
        return sum(len(rec.locations or ()) for rec in self.records.values())


def _record(records, name, seq, cl, t, with_locations, lefts):
    rec = records.get(name)
    if rec is None:
        chars = cl.chars[:t]
        if lefts is None:
            lefts = _left_ends(seq, cl)
        witness = MaximalLocation(lefts[t - 1], cl.right(t))
        rec = records[name] = NameRecord(Fingerprint.from_ranks(chars), witness, chars[-1],
                                         [] if with_locations else None)
    if with_locations:
        rec.locations.append(MaximalLocation(lefts[t - 1], cl.right(t)))
    return lefts


def build_names_randomized(seq: Sequence, with_locations: bool = False) -> BuildResult:
    """Exact names via per-level dictionaries ``(left, right) -> name``.

    The level tables are shared by all change lists; each list's edits are
    undone after it is processed.
    """
    width = padded_width(seq.sigma)
    levels = width.bit_length() - 1
    tables = [[0] * (width >> r) for r in range(levels + 1)]
    # name 0 at every level is the empty set's cell
    dicts = [{(0, 0): 0} for _ in range(levels)]
    records: dict = {}
    for cl in enumerate_change_lists(seq):
        undo = []
        lefts = _left_ends(seq, cl) if with_locations else None
        for t in range(1, cl.count + 1):
            c = cl.chars[t - 1]
            undo.append((0, c, tables[0][c]))
            tables[0][c] = 1
            j = c
            for r in range(levels):
                below = tables[r]
                base = j & ~1
                pair = (below[base], below[base + 1])
                d = dicts[r]
                name = d.get(pair)
                if name is None:
                    name = d[pair] = len(d)
                j >>= 1
                undo.append((r + 1, j, tables[r + 1][j]))
                tables[r + 1][j] = name
            lefts = _record(records, tables[levels][0], seq, cl, t, with_locations, lefts)
        for r, j, old in reversed(undo):
            tables[r][j] = old
    return BuildResult(records, "randomized")


def mc_modulus_bounds(n: int, sigma: int, c: int = 1) -> tuple[int, int]:
    base = n ** (c + 2) * sigma ** 3
    return max(2, base + 1), max(2, 2 * base)


def build_mc(seq: Sequence, c: int = 1, rng: random.Random | None = None,
             with_locations: bool = False) -> BuildResult:
    """Monte Carlo names: each fingerprint is named by its polynomial hash
    ``sum(r**rank) mod P`` with ``P > n^(c+2) sigma^3``.

    Distinct fingerprints share a name only on a hash collision.
    """
    rng = rng or random.Random()
    lo, hi = mc_modulus_bounds(seq.n, seq.sigma, c)
    if hi >= MAX_MODULUS:
        raise ModulusTooLarge(f"required modulus up to {hi} exceeds 2^62")
    P = find_prime(lo, hi, rng)
    r = rng.randint(1, P - 1)
    pw = [pow(r, e, P) for e in range(seq.sigma)]
    records: dict = {}
    for cl in enumerate_change_lists(seq):
        h = 0
        lefts = _left_ends(seq, cl) if with_locations else None
        for t in range(1, cl.count + 1):
            h = (h + pw[cl.chars[t - 1]]) % P
            lefts = _record(records, h, seq, cl, t, with_locations, lefts)
    return BuildResult(records, "mc", {"P": P, "r": r, "c": c})
