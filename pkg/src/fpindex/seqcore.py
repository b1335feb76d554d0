"""Alphabets, simple sequences and the first-occurrence machinery.

Positions are 1-indexed everywhere.  A normalized sequence ``s_1..s_n`` is
*simple* (no two equal neighbours) and carries an implicit sentinel at
position ``n + 1`` whose rank is ``sigma``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Hashable, Iterable, Sequence as _Seq

from .errors import EmptyInput, IndexOutOfRange


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple  # rank -> symbol
    rank_of: dict = field(compare=False, repr=False)

    @classmethod
    def from_symbols(cls, symbols: Iterable[Hashable]) -> "Alphabet":
        symbols = tuple(symbols)
        rank_of = {a: r for r, a in enumerate(symbols)}
        if len(rank_of) != len(symbols):
            raise ValueError("alphabet symbols must be distinct")
        return cls(symbols, rank_of)

    @property
    def size(self) -> int:
        return len(self.symbols)

    def rank(self, symbol) -> int:
        return self.rank_of[symbol]

    def unrank(self, r: int):
        return self.symbols[r]

    def __contains__(self, symbol) -> bool:
        return symbol in self.rank_of


@dataclass(frozen=True)
class Fingerprint:
    """A set of ranks stored as an integer bit-set with a cached size."""

    bits: int
    size: int

    EMPTY: ClassVar["Fingerprint"]

    @classmethod
    def from_ranks(cls, ranks: Iterable[int]) -> "Fingerprint":
        bits = 0
        for r in ranks:
            bits |= 1 << r
        return cls(bits, bits.bit_count())

    def __len__(self) -> int:
        return self.size

    def __contains__(self, r: int) -> bool:
        return r >= 0 and (self.bits >> r) & 1 == 1

    def __iter__(self):
        bits, r = self.bits, 0
        while bits:
            if bits & 1:
                yield r
            bits >>= 1
            r += 1

    def ranks(self) -> tuple:
        return tuple(self)

    def add(self, r: int) -> "Fingerprint":
        if r in self:
            return self
        return Fingerprint(self.bits | (1 << r), self.size + 1)

    def remove(self, r: int) -> "Fingerprint":
        if r not in self:
            return self
        return Fingerprint(self.bits & ~(1 << r), self.size - 1)

    def symbols(self, alphabet: Alphabet) -> tuple:
        return tuple(alphabet.unrank(r) for r in self)


Fingerprint.EMPTY = Fingerprint(0, 0)


@dataclass(frozen=True)
class MaximalLocation:
    i: int
    j: int

    def __iter__(self):
        yield self.i
        yield self.j

    def __lt__(self, other: "MaximalLocation") -> bool:
        return (self.i, self.j) < (other.i, other.j)

    def __repr__(self) -> str:
        return f"<{self.i},{self.j}>"


@dataclass(frozen=True, eq=False)
class Sequence:
    """A simple sequence of ranks with the run map back to raw coordinates.

    ``s`` is the padded tuple ``(None, s_1, ..., s_n, sentinel)`` so that
    ``s[i]`` is the 1-indexed character and ``s[n + 1] == sigma``.
    """

    chars: tuple
    sigma: int
    runmap: tuple
    s: tuple = field(repr=False)

    @classmethod
    def from_ranks(cls, ranks: _Seq[int], sigma: int | None = None, runmap=None) -> "Sequence":
        ranks = tuple(ranks)
        if not ranks:
            raise EmptyInput("empty sequence")
        if sigma is None:
            sigma = max(ranks) + 1
        for a, b in zip(ranks, ranks[1:]):
            if a == b:
                raise ValueError("sequence is not simple")
        if any(r < 0 or r >= sigma for r in ranks):
            raise ValueError("rank outside [0, sigma)")
        if runmap is None:
            runmap = tuple((i, i) for i in range(1, len(ranks) + 1))
        return cls(ranks, sigma, tuple(runmap), (None,) + ranks + (sigma,))

    @property
    def n(self) -> int:
        return len(self.chars)

    @property
    def sentinel(self) -> int:
        return self.sigma

    @property
    def raw_length(self) -> int:
        return self.runmap[-1][1]

    def __len__(self) -> int:
        return len(self.chars)

    def __getitem__(self, i: int) -> int:
        return self.s[i]


def normalize(raw) -> tuple[Sequence, Alphabet]:
    """Collapse runs of equal characters and rank symbols by first appearance.

    ``raw`` may be ``bytes`` (symbols are byte values), ``str`` or any
    sequence of hashable symbols.
    """
    if len(raw) == 0:
        raise EmptyInput("cannot normalize an empty input")
    rank_of: dict = {}
    symbols: list = []
    chars: list = []
    runmap: list = []
    prev = object()
    for pos, a in enumerate(raw, start=1):
        if a == prev:
            runmap[-1] = (runmap[-1][0], pos)
            continue
        prev = a
        r = rank_of.get(a)
        if r is None:
            r = rank_of[a] = len(symbols)
            symbols.append(a)
        chars.append(r)
        runmap.append((pos, pos))
    alphabet = Alphabet(tuple(symbols), rank_of)
    return Sequence.from_ranks(chars, len(symbols), runmap), alphabet


def _check(seq: Sequence, i: int, j: int, hi: int) -> None:
    if not (1 <= i <= j <= hi):
        raise IndexOutOfRange(f"[{i},{j}] outside [1,{hi}]")


def fingerprint_of(seq: Sequence, i: int, j: int) -> Fingerprint:
    _check(seq, i, j, seq.n)
    return Fingerprint.from_ranks(seq.s[i:j + 1])


def fo(seq: Sequence, i: int, j: int) -> tuple:
    """First occurrences of the distinct characters of ``s_i..s_j``, in order."""
    _check(seq, i, j, seq.n + 1)
    seen = set()
    out = []
    for c in seq.s[i:j + 1]:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return tuple(out)


def next_occurrence(seq: Sequence, i: int) -> int:
    """Smallest ``j > i`` with ``s_j == s_i``, or ``n + 2`` if there is none."""
    c = seq.s[i]
    s = seq.s
    for j in range(i + 1, seq.n + 1):
        if s[j] == c:
            return j
    return seq.n + 2


def lfo(seq: Sequence, i: int) -> tuple:
    """``fo(i, j - 1)`` where ``j`` is the next occurrence of ``s_i``.

    Without a later occurrence the scan runs through the sentinel, so the
    result then ends with rank ``sigma``.
    """
    _check(seq, i, i, seq.n)
    return fo(seq, i, next_occurrence(seq, i) - 1)


def support(seq: Sequence, i: int, j: int) -> int:
    """Minimal position among the rightmost occurrences of the letters of ``s_i..s_j``."""
    _check(seq, i, j, seq.n)
    seen = set()
    best = j
    for p in range(j, i - 1, -1):
        c = seq.s[p]
        if c not in seen:
            seen.add(c)
            best = p
    return best


def o_label(seq: Sequence, i: int, j: int) -> tuple:
    return fo(seq, support(seq, i, j), j)


def extend(seq: Sequence, i: int, j: int) -> MaximalLocation:
    """Grow ``[i, j]`` while the neighbouring characters belong to its fingerprint."""
    _check(seq, i, j, seq.n)
    s = seq.s
    members = set(s[i:j + 1])
    while i > 1 and s[i - 1] in members:
        i -= 1
    n = seq.n
    while j < n and s[j + 1] in members:
        j += 1
    return MaximalLocation(i, j)


def is_maximal(seq: Sequence, i: int, j: int) -> bool:
    _check(seq, i, j, seq.n)
    members = set(seq.s[i:j + 1])
    if i > 1 and seq.s[i - 1] in members:
        return False
    if j < seq.n and seq.s[j + 1] in members:
        return False
    return True


def denormalize(seq: Sequence, loc) -> tuple[int, int]:
    i, j = loc
    _check(seq, i, j, seq.n)
    return seq.runmap[i - 1][0], seq.runmap[j - 1][1]


def to_symbols(ranks: Iterable[int], alphabet: Alphabet, sentinel: str = "#") -> list:
    """Map ranks back to symbols; the sentinel rank becomes ``sentinel``."""
    out = []
    for r in ranks:
        out.append(sentinel if r == alphabet.size else alphabet.unrank(r))
    return out
