"""Level-wise naming of fingerprint bit-vectors.

The alphabet is padded to a power of two ``W``.  Level 1 is the bit row of
``W`` cells; each higher level halves the width and names the pairs of the
level below, so the single cell at level ``log W + 1`` names the whole set.
Names are dense per level; a name is meaningful only together with its level.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateChange, RankOutOfRange


def padded_width(sigma: int) -> int:
    w = 1
    while w < sigma:
        w <<= 1
    return w


def radix_sort_pairs(pairs):
    """Stable LSD counting sort of name pairs plus a dense renaming.

    Returns ``(order, names)``: ``order`` lists input indices in lexicographic
    order of their pairs, ``names[i]`` is the new name of ``pairs[i]``; names
    are handed out 0, 1, ... in sorted order.
    """
    m = len(pairs)
    if m == 0:
        return [], []
    bound = 1 + max(max(a, b) for a, b in pairs)
    order = list(range(m))
    for key in (1, 0):
        count = [0] * (bound + 1)
        for idx in order:
            count[pairs[idx][key] + 1] += 1
        for v in range(bound):
            count[v + 1] += count[v]
        out = [0] * m
        for idx in order:
            k = pairs[idx][key]
            out[count[k]] = idx
            count[k] += 1
        order = out
    names = [0] * m
    nxt = -1
    prev = None
    for idx in order:
        if pairs[idx] != prev:
            nxt += 1
            prev = pairs[idx]
        names[idx] = nxt
    return order, names


@dataclass
class NameTable:
    """Final state of the level tables after naming one list of changes.

    ``levels[0]`` is the bit row, ``levels[-1]`` the single top cell;
    ``ninit[r]`` is the name of the empty set's cells at level ``r + 1``.
    """

    levels: list
    ninit: list


def name_list(changes, sigma: int):
    """Name every prefix set of a list of distinct character ranks.

    Returns ``(names, table)`` where ``names[i]`` is the top-level name of
    ``{changes[0..i]}`` and ``table`` holds the level tables after the last
    change.
    """
    changes = list(changes)
    seen = set()
    for c in changes:
        if not 0 <= c < sigma:
            raise RankOutOfRange(f"rank {c} outside [0,{sigma})")
        if c in seen:
            raise DuplicateChange(f"rank {c} repeated in change list")
        seen.add(c)
    width = padded_width(sigma)
    # L_1: one {name, cell} change per character on top of the all-[0] row
    current = [(1, c) for c in changes]
    ninit = [0]
    levels = []
    size = width
    while size > 1:
        table = [ninit[-1]] * size
        pairs = [(ninit[-1], ninit[-1])]
        cells = []
        for a, j in current:
            table[j] = a
            base = j & ~1
            pairs.append((table[base], table[base + 1]))
            cells.append(j >> 1)
        levels.append(table)
        _, names = radix_sort_pairs(pairs)
        ninit.append(names[0])
        current = list(zip(names[1:], cells))
        size >>= 1
    top = [ninit[-1]]
    for a, j in current:
        top[j] = a
    levels.append(top)
    return [a for a, _ in current], NameTable(levels, ninit)


def name_fingerprints(pt, sigma: int, trace: list | None = None):
    """Name the character set of every root path of a participation tree.

    Returns ``names`` indexed by tree node; ``names[0]`` is the empty set's
    name.  Two nodes get equal names iff their root paths use the same
    characters.  When ``trace`` is a list, one ``(table_before, table_after,
    distinct_names)`` record per level is appended to it.
    """
    width = padded_width(sigma)
    size = pt.size
    children = pt.children
    # the change carried by the edge into q at the current level: {name, cell}
    delta_name = [1] * size
    delta_cell = list(pt.label)
    delta_name[0] = 0
    delta_cell[0] = 0
    ninit = 0
    level_width = width
    pair_a = [0] * size
    pair_b = [0] * size
    saved = [0] * size
    while level_width > 1:
        table = [ninit] * level_width
        before = list(table) if trace is not None else None
        stack = [(0, 0)]
        while stack:
            v, k = stack.pop()
            kids = children[v]
            if k < len(kids):
                stack.append((v, k + 1))
                q = kids[k]
                j = delta_cell[q]
                saved[q] = table[j]
                table[j] = delta_name[q]
                base = j & ~1
                pair_a[q] = table[base]
                pair_b[q] = table[base + 1]
                stack.append((q, 0))
            elif v:
                table[delta_cell[v]] = saved[v]
        pairs = [(pair_a[q], pair_b[q]) for q in range(1, size)]
        pairs.append((ninit, ninit))
        _, names = radix_sort_pairs(pairs)
        for q in range(1, size):
            delta_name[q] = names[q - 1]
            delta_cell[q] >>= 1
        ninit = names[-1]
        if trace is not None:
            trace.append((before, list(table), 1 + max(names)))
        level_width >>= 1
    delta_name[0] = ninit
    return delta_name
