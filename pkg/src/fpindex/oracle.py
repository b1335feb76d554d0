"""Brute-force ground truth straight from the definitions.

Nothing here reuses the index machinery: maximality, supports and O-labels
are recomputed with plain loops so the oracle stays an independent check.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import CapExceeded, KOutOfRange
from .seqcore import Fingerprint, MaximalLocation, Sequence

DEFAULT_CAP = 500


@dataclass
class GroundTruth:
    F: set                # Fingerprint objects
    L: dict               # MaximalLocation -> Fingerprint
    classes: dict         # substring (tuple of ranks) -> list of MaximalLocation

    @property
    def copy_class_count(self) -> int:
        return len(self.classes)

    def locations_of(self, f: Fingerprint) -> list:
        return sorted(loc for loc, g in self.L.items() if g == f)

    def by_fingerprint(self) -> dict:
        out = defaultdict(set)
        for loc, f in self.L.items():
            out[f].add(loc)
        return dict(out)


def oracle_all(seq: Sequence, cap: int = DEFAULT_CAP) -> GroundTruth:
    n = seq.n
    if n > cap:
        raise CapExceeded(f"n={n} exceeds oracle cap {cap}")
    s = seq.s
    L = {}
    classes = defaultdict(list)
    for i in range(1, n + 1):
        members = set()
        for j in range(i, n + 1):
            members.add(s[j])
            # maximal: neither neighbour belongs to the set
            if i > 1 and s[i - 1] in members:
                continue
            if j < n and s[j + 1] in members:
                continue
            loc = MaximalLocation(i, j)
            L[loc] = Fingerprint.from_ranks(members)
            classes[s[i:j + 1]].append(loc)
    F = set(L.values())
    return GroundTruth(F, L, dict(classes))


def brute_support(s, i: int, j: int) -> int:
    last = {}
    for p in range(i, j + 1):
        last[s[p]] = p
    return min(last.values())


def brute_o_label(s, i: int, j: int) -> tuple:
    m = brute_support(s, i, j)
    out = []
    for p in range(m, j + 1):
        if s[p] not in out:
            out.append(s[p])
    return tuple(out)


def phi_partition(seq: Sequence, truth: GroundTruth, paths) -> list:
    """Image of every root path ``(word, suffix set)`` under the map that
    collects the maximal locations with that O-label and a support inside
    the path's suffix set."""
    s = seq.s
    by_word = defaultdict(list)
    for loc in truth.L:
        by_word[brute_o_label(s, loc.i, loc.j)].append((brute_support(s, loc.i, loc.j), loc))
    images = []
    for word, suffixes in paths:
        images.append({loc for m, loc in by_word.get(tuple(word), ()) if m in suffixes})
    return images


def check_phi(seq: Sequence, truth: GroundTruth, paths) -> list[str]:
    """Problems with the partition property; empty when it holds."""
    images = phi_partition(seq, truth, paths)
    problems = []
    seen = {}
    for idx, img in enumerate(images):
        if not img:
            problems.append(f"path {idx} has an empty image")
        for loc in img:
            if loc in seen:
                problems.append(f"{loc} in images of paths {seen[loc]} and {idx}")
            seen[loc] = idx
    missing = set(truth.L) - set(seen)
    if missing:
        problems.append(f"locations not covered: {sorted(missing)[:5]}")
    for members in truth.classes.values():
        owners = {seen.get(loc) for loc in members}
        if len(owners) != 1:
            problems.append(f"copy class {members} split across paths {owners}")
    return problems


def gen_wk(k: int) -> bytes:
    """``w_1 = a``, ``w_k = w_{k-1} (a_1 .. a_k)^k`` over the letters a, b, ..."""
    if not 1 <= k <= 26:
        raise KOutOfRange(f"k={k} outside [1,26]")
    letters = bytes(range(ord("a"), ord("a") + 26))
    w = b"a"
    for m in range(2, k + 1):
        w += letters[:m] * m
    return w


def wk_length(k: int) -> int:
    return k * (k + 1) * (2 * k + 1) // 6


def wk_locations(k: int) -> float:
    return k * (3 * k ** 3 + 2 * k ** 2 - 9 * k + 16) / 12


def wk_copy_classes(k: int) -> float:
    return k * (k ** 2 + 5) / 6
