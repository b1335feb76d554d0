"""Participation tree: the suffix tree reduced so every root path spells an O-label.

Construction follows the bottom-up participation walk: suffixes are visited
from ``n`` down to ``1`` while an :class:`EfoList` tracks ``efo(i)``; each
unmarked edge on the leaf-to-root path of suffix ``i`` receives the characters
it contributes to ``lfo(i)``.  Each suffix is then attached one character
above the end of its path, and nodes with no suffix below them are dropped.
"""
from __future__ import annotations

from dataclasses import dataclass

from .seqcore import Sequence
from .suffix_tree import SuffixTree

_NONE = -1


class EfoList:
    """``efo(i)`` as a doubly linked list whose cells are indexed by rank.

    Each rank occurs at most once in the list, so the rank doubles as the
    cell identifier: ``pos[r]``, ``prev[r]``, ``next[r]`` describe the cell
    of ``r`` (``pos[r] == 0`` when ``r`` is absent).  The sentinel cell
    ``(sigma, n + 1)`` is always the tail.  ``tp`` is the cell with the
    largest position strictly below the next occurrence of the head
    character, or the tail when there is none.
    """

    def __init__(self, seq: Sequence):
        self.seq = seq
        sigma = seq.sigma
        self.pos = [0] * (sigma + 1)
        self.prev = [_NONE] * (sigma + 1)
        self.next = [_NONE] * (sigma + 1)
        n = seq.n
        tail = sigma
        last = seq.s[n]
        self.pos[tail] = n + 1
        self.pos[last] = n
        self.next[last] = tail
        self.prev[tail] = last
        self.head = last
        self.tail = tail
        self.tp = tail
        self.i = n

    def step(self) -> "EfoList":
        """Turn ``efo(i)`` into ``efo(i - 1)``."""
        i = self.i - 1
        if i < 1:
            raise ValueError("efo(1) has no predecessor")
        a = self.seq.s[i]
        pos, prev, nxt = self.pos, self.prev, self.next
        if pos[a]:
            self.tp = prev[a]
            p, q = prev[a], nxt[a]
            if p != _NONE:
                nxt[p] = q
            else:
                self.head = q
            prev[q] = p  # q exists: the sentinel is never unlinked
        else:
            self.tp = self.tail
        pos[a] = i
        prev[a] = _NONE
        nxt[a] = self.head
        prev[self.head] = a
        self.head = a
        self.i = i
        return self

    def cells(self) -> list[tuple[int, int]]:
        out = []
        r = self.head
        while r != _NONE:
            out.append((r, self.pos[r]))
            r = self.next[r]
        return out

    @property
    def tp_cell(self) -> tuple[int, int]:
        return self.tp, self.pos[self.tp]


def efo_step(efo: EfoList, seq: Sequence = None, i: int = None) -> EfoList:
    if i is not None and i != efo.i:
        raise ValueError(f"efo list represents efo({efo.i}), not efo({i})")
    return efo.step()


def participations(tree: SuffixTree) -> list[tuple]:
    """Participation string of every suffix-tree edge, indexed by child node."""
    seq = tree.seq
    n = seq.n
    part: list = [()] * tree.size
    marked = bytearray(tree.size)
    efo = EfoList(seq)
    pos, prev = efo.pos, efo.prev
    depth, parent = tree.depth, tree.parent
    for i in range(n, 0, -1):
        if i < n:
            efo.step()
        cur = efo.tp
        current = tree.leaf_of[i]
        while not marked[current] and current != 0:
            up = parent[current]
            a = i + depth[up]  # edge shifted onto suffix i: [a, i + depth[current] - 1]
            got = []
            while cur != _NONE and pos[cur] >= a:
                got.append(cur)
                cur = prev[cur]
            if got:
                got.reverse()
                part[current] = tuple(got)
            marked[current] = 1
            current = up
    return part


@dataclass
class ParticipationTree:
    """Participation tree with per-node attached suffixes.

    Nodes are numbered in preorder, root ``0``.  ``label[v]`` is the rank on
    the edge into ``v``; ``attached[v]`` the suffix starts merged into ``v``.
    The suffixes of the subtree of ``v`` are ``order[lo[v]:hi[v]]``.
    Siblings may share a label.
    """

    seq: Sequence
    parent: list
    label: list
    depth: list
    children: list
    attached: list
    order: list
    lo: list
    hi: list

    @property
    def size(self) -> int:
        return len(self.parent)

    @property
    def edge_count(self) -> int:
        return len(self.parent) - 1

    def word(self, v: int) -> tuple:
        out = []
        while v:
            out.append(self.label[v])
            v = self.parent[v]
        out.reverse()
        return tuple(out)

    def suffixes(self, v: int) -> list:
        return self.order[self.lo[v]:self.hi[v]]

    def to_dot(self, alphabet=None) -> str:
        def sym(r):
            if alphabet is None:
                return str(r)
            a = alphabet.unrank(r)
            return chr(a) if isinstance(a, int) else str(a)

        lines = ["digraph participation_tree {", "  node [shape=circle];"]
        for v in range(self.size):
            box = ",".join(map(str, self.attached[v]))
            text = f"{v}" + (f" [{box}]" if box else "")
            lines.append(f'  n{v} [label="{text}"];')
        for v in range(1, self.size):
            lines.append(f'  n{self.parent[v]} -> n{v} [label="{sym(self.label[v])}"];')
        lines.append("}")
        return "\n".join(lines)


def build_participation_tree(tree: SuffixTree, seq: Sequence = None) -> ParticipationTree:
    seq = tree.seq if seq is None else seq
    part = participations(tree)
    size = tree.size
    parent = tree.parent

    # expand every edge into a chain of single-character edges
    pt_parent = [-1]
    pt_label = [-1]
    pt_depth = [0]
    attached: list = [[]]
    image = [0] * size  # suffix-tree node -> participation-tree node
    for v in range(1, size):  # preorder: parents first
        base = image[parent[v]]
        for c in part[v]:
            w = len(pt_parent)
            pt_parent.append(base)
            pt_label.append(c)
            pt_depth.append(pt_depth[base] + 1)
            attached.append([])
            base = w
        image[v] = base
        m = tree.leaf_suffix[v]
        if m and base:
            # the leaf's path spells lfo(m); its last character is dropped
            attached[pt_parent[base]].append(m)

    # keep only nodes with at least one suffix below them
    count = [len(a) for a in attached]
    for w in range(len(pt_parent) - 1, 0, -1):  # children after parents
        count[pt_parent[w]] += count[w]
    keep = [w for w in range(len(pt_parent)) if w == 0 or count[w]]
    pt_children: list = [[] for _ in pt_parent]
    for w in keep[1:]:
        pt_children[pt_parent[w]].append(w)
    return _finish(seq, pt_parent, pt_label, pt_depth, pt_children, attached)


def _finish(seq, parent, label, depth, children, attached) -> ParticipationTree:
    """Renumber in preorder and lay out subtree suffix ranges."""
    new_id = [0] * len(parent)
    old_of = []
    stack = [0]
    while stack:
        v = stack.pop()
        new_id[v] = len(old_of)
        old_of.append(v)
        stack.extend(reversed(children[v]))
    size = len(old_of)  # nodes unreachable from the root are dropped
    n_parent = [-1] * size
    n_label = [-1] * size
    n_depth = [0] * size
    n_children: list = [None] * size
    n_attached: list = [None] * size
    for new, old in enumerate(old_of):
        n_parent[new] = new_id[parent[old]] if old else -1
        n_label[new] = label[old]
        n_depth[new] = depth[old]
        n_children[new] = [new_id[c] for c in children[old]]
        n_attached[new] = sorted(attached[old])
    order: list = []
    lo = [0] * size
    for v in range(size):
        lo[v] = len(order)
        order.extend(n_attached[v])
    hi = [0] * size
    for v in range(size - 1, -1, -1):
        hi[v] = lo[v] + len(n_attached[v])
        for c in n_children[v]:
            if hi[c] > hi[v]:
                hi[v] = hi[c]
    return ParticipationTree(seq, n_parent, n_label, n_depth, n_children, n_attached, order, lo, hi)


def root_paths(pt: ParticipationTree):
    """Yield ``(word, suffix set)`` for every non-empty path from the root."""
    words: list = [()] * pt.size
    for v in range(1, pt.size):
        words[v] = words[pt.parent[v]] + (pt.label[v],)
        yield words[v], set(pt.suffixes(v))
