"""Do two strings of distinct ranks spell the same set?

Three interchangeable tests: a sigma-bit vector, a hash table, and a
``k``-level partitioning that needs only about ``sigma ** (1/k)`` cells per
level.  All three raise :class:`DuplicateCharacter` when either string
repeats a rank and return ``False`` for unequal sets.
"""
from __future__ import annotations

from .errors import DuplicateCharacter, LengthMismatch, RankOutOfRange


def _bit_width(sigma: int) -> int:
    return max(1, (sigma - 1).bit_length())


def slice_widths(sigma: int, k: int) -> list[int]:
    """Bit widths of the ``k`` slices, most significant first.

    The top slice takes ``ceil(B / k)`` of the ``B = ceil(log2 sigma)`` bits;
    the rest are spread evenly over the other ``k - 1`` slices, wider ones
    first.
    """
    b = _bit_width(sigma)
    top = -(-b // k)
    rest = b - top
    q, r = divmod(rest, k - 1)
    return [top] + [q + 1 if i < r else q for i in range(k - 1)]


class EqualityScratch:
    """Working memory for :func:`eq_bits` and :func:`eq_partitioned`.

    Must be left clean (all bits zero, all buckets empty) between calls; one
    scratch per concurrent query stream.
    """

    def __init__(self, sigma: int, k: int = 2):
        self.sigma = sigma
        self.bits = bytearray(sigma)
        self.k = k
        self.widths = slice_widths(sigma, k) if k >= 2 else []
        self.shifts = []
        acc = sum(self.widths)
        for w in self.widths:
            acc -= w
            self.shifts.append(acc)
        self.tables = [([[] for _ in range(1 << w)], [[] for _ in range(1 << w)])
                       for w in self.widths[:-1]]
        self.low = bytearray(1 << self.widths[-1]) if self.widths else bytearray()

    def is_clean(self) -> bool:
        if any(self.bits) or any(self.low):
            return False
        return all(not cell for t1, t2 in self.tables for cell in t1 + t2)

    def checksum(self) -> int:
        total = sum(self.bits) + sum(self.low)
        for t1, t2 in self.tables:
            total += sum(len(c) for c in t1) + sum(len(c) for c in t2)
        return total


def _check_lengths(s1, s2) -> None:
    if len(s1) != len(s2):
        raise LengthMismatch(f"lengths differ: {len(s1)} != {len(s2)}")


def _check_rank(c: int, sigma: int) -> None:
    if not 0 <= c < sigma:
        raise RankOutOfRange(f"rank {c} outside [0,{sigma})")


def _mark(bits, s, sigma: int) -> None:
    """Set the bits of ``s``; on a repeat, undo and raise."""
    for idx, c in enumerate(s):
        _check_rank(c, sigma)
        if bits[c]:
            for d in s[:idx]:
                bits[d] = 0
            raise DuplicateCharacter(f"rank {c} repeated")
        bits[c] = 1


def _bit_compare(bits, s1, s2, sigma: int) -> bool:
    _mark(bits, s1, sigma)
    for c in s2:
        if 0 <= c < sigma and bits[c]:
            bits[c] = 0
            continue
        for d in s1:
            bits[d] = 0
        # distinguish "different sets" from "s2 repeats a rank"
        _mark(bits, s2, sigma)
        for d in s2:
            bits[d] = 0
        return False
    return True


def eq_bits(s1, s2, scratch: EqualityScratch) -> bool:
    _check_lengths(s1, s2)
    return _bit_compare(scratch.bits, list(s1), list(s2), scratch.sigma)


def eq_hash(s1, s2) -> bool:
    _check_lengths(s1, s2)
    table: dict = {}
    for c in s1:
        if c in table:
            raise DuplicateCharacter(f"rank {c} repeated")
        table[c] = False
    hit = True
    seen = set()
    for c in s2:
        if c in seen:
            raise DuplicateCharacter(f"rank {c} repeated")
        seen.add(c)
        if c in table:
            table[c] = True
        else:
            hit = False
    return hit and all(table.values())


def eq_partitioned(s1, s2, k: int, scratch: EqualityScratch | None = None) -> bool:
    """Equality by ``k - 1`` rounds of bucketing on rank slices, most
    significant first, then a bit-vector test on the last slice."""
    if k < 2:
        raise ValueError("k must be at least 2")
    _check_lengths(s1, s2)
    if scratch is None or scratch.k != k:
        scratch = EqualityScratch(scratch.sigma if scratch else 1 + max(list(s1) + list(s2) + [0]), k)
    s1, s2 = list(s1), list(s2)
    for c in s1 + s2:
        _check_rank(c, scratch.sigma)
    if _match(scratch, s1, s2, 0):
        return True
    # unequal: report repeats in either string rather than a plain False
    _match(scratch, s1, s1, 0)
    _match(scratch, s2, s2, 0)
    return False


def _match(scratch: EqualityScratch, g1: list, g2: list, level: int) -> bool:
    shift = scratch.shifts[level]
    if level == scratch.k - 1:
        mask = (1 << scratch.widths[level]) - 1
        return _bit_compare(scratch.low, [c & mask for c in g1], [c & mask for c in g2],
                            len(scratch.low))
    mask = (1 << scratch.widths[level]) - 1
    t1, t2 = scratch.tables[level]
    used1: list = []  # non-empty cells of t1 in first-use order
    used2: list = []
    try:
        for c in g1:
            j = (c >> shift) & mask
            if not t1[j]:
                used1.append(j)
            t1[j].append(c)
        for c in g2:
            j = (c >> shift) & mask
            if not t2[j]:
                used2.append(j)
            t2[j].append(c)
        # runs of L'_1 and L'_2 in the cell order of L_1
        for j in used1:
            r1, r2 = t1[j], t2[j]
            if len(r1) != len(r2):
                return False
            if not _match(scratch, r1, r2, level + 1):
                return False
        return True
    finally:
        for j in used1:
            t1[j] = []
        for j in used2:
            t2[j] = []
