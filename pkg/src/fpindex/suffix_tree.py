"""Suffix tree of a sentinel-terminated simple sequence.

Built with Ukkonen's algorithm, then renumbered in preorder and re-anchored so
that every edge interval points at the leftmost occurrence of its factor.
"""
from __future__ import annotations

from .seqcore import Sequence

_LEAF_END = -1


def _ukkonen(text):
    """Return (start, end, children) arrays; 0-based, ``end`` exclusive."""
    start = [0]
    end = [0]
    link = [0]
    children = [{}]
    n = len(text)

    def new_node(s, e):
        start.append(s)
        end.append(e)
        link.append(0)
        children.append({})
        return len(start) - 1

    def edge_len(v, pos):
        e = pos + 1 if end[v] == _LEAF_END else end[v]
        return e - start[v]

    active_node = 0
    active_edge = 0
    active_len = 0
    remainder = 0
    for pos in range(n):
        c = text[pos]
        remainder += 1
        last_new = 0
        while remainder > 0:
            if active_len == 0:
                active_edge = pos
            key = text[active_edge]
            nxt = children[active_node].get(key)
            if nxt is None:
                children[active_node][key] = new_node(pos, _LEAF_END)
                if last_new:
                    link[last_new] = active_node
                    last_new = 0
            else:
                el = edge_len(nxt, pos)
                if active_len >= el:
                    active_edge += el
                    active_len -= el
                    active_node = nxt
                    continue
                if text[start[nxt] + active_len] == c:
                    if last_new and active_node != 0:
                        link[last_new] = active_node
                        last_new = 0
                    active_len += 1
                    break
                split = new_node(start[nxt], start[nxt] + active_len)
                children[active_node][key] = split
                children[split][c] = new_node(pos, _LEAF_END)
                start[nxt] += active_len
                children[split][text[start[nxt]]] = nxt
                if last_new:
                    link[last_new] = split
                last_new = split
            remainder -= 1
            if active_node == 0 and active_len > 0:
                active_len -= 1
                active_edge = pos - remainder + 1
            elif active_node != 0:
                active_node = link[active_node]
    for v in range(len(end)):
        if end[v] == _LEAF_END:
            end[v] = n
    return start, end, children


class SuffixTree:
    """Compacted suffix trie of ``s_1..s_n #``.

    Nodes are numbered in preorder (children visited by increasing first
    character), root is ``0``.  Per node:

    * ``parent[v]``, ``depth[v]`` (string depth), ``edge[v] = (k, l)``, the
      1-indexed interval of the incoming edge (``(0, -1)`` for the root);
    * ``children[v]``: dict first character -> child;
    * ``leaf_suffix[v]``: suffix start for leaves, ``0`` otherwise;
    * ``min_suffix[v]``: smallest suffix start in the subtree;
    * ``lo[v], hi[v]``: the leaves below ``v`` are ``leaves[lo[v]:hi[v]]``.
    """

    def __init__(self, seq: Sequence):
        self.seq = seq
        text = seq.s[1:]  # 0-based view including the sentinel
        n1 = len(text)
        start, end, children = _ukkonen(text)

        parent, depth, kids, leaf_suffix = [], [], [], []
        leaves: list[int] = []
        lo, hi = [], []
        # iterative preorder; stack holds (raw node, new parent, parent depth)
        stack = [(0, -1, 0)]
        while stack:
            raw, par, pdepth = stack.pop()
            v = len(parent)
            parent.append(par)
            elen = 0 if raw == 0 else end[raw] - start[raw]
            d = pdepth + elen
            depth.append(d)
            kids.append({})
            lo.append(len(leaves))
            hi.append(0)
            if par >= 0:
                kids[par][text[start[raw]]] = v
            ch = children[raw]
            if not ch:
                suffix = n1 - d + 1
                leaf_suffix.append(suffix)
                leaves.append(suffix)
            else:
                leaf_suffix.append(0)
            for key in sorted(ch, reverse=True):
                stack.append((ch[key], v, d))
        self.size = len(parent)
        # hi[] and min_suffix[] bottom-up: preorder reversed visits children first
        min_suffix = [0] * self.size
        for v in range(self.size - 1, -1, -1):
            if leaf_suffix[v]:
                min_suffix[v] = leaf_suffix[v]
                hi[v] = lo[v] + 1
            else:
                cs = kids[v].values()
                min_suffix[v] = min(min_suffix[c] for c in cs)
                hi[v] = max(hi[c] for c in cs)
        # leftmost-occurrence re-anchoring
        edge = [(0, -1)] * self.size
        for v in range(1, self.size):
            m = min_suffix[v]
            edge[v] = (m + depth[parent[v]], m + depth[v] - 1)
        self.parent = parent
        self.depth = depth
        self.edge = edge
        self.children = kids
        self.leaf_suffix = leaf_suffix
        self.min_suffix = min_suffix
        self.leaves = leaves
        self.lo = lo
        self.hi = hi
        self.leaf_of = {s: v for v, s in enumerate(leaf_suffix) if s}

    root = 0

    def is_leaf(self, v: int) -> bool:
        return self.leaf_suffix[v] != 0

    def label(self, v: int) -> tuple:
        k, l = self.edge[v]
        return self.seq.s[k:l + 1]

    def path_label(self, v: int) -> tuple:
        m = self.min_suffix[v]
        return self.seq.s[m:m + self.depth[v]]

    def subtree_suffixes(self, v: int) -> set:
        return set(self.leaves[self.lo[v]:self.hi[v]])

    def locate(self, pattern) -> int | None:
        """Highest node whose path label has ``pattern`` as a prefix."""
        s = self.seq.s
        v, matched = 0, 0
        pattern = tuple(pattern)
        while matched < len(pattern):
            child = self.children[v].get(pattern[matched])
            if child is None:
                return None
            k, l = self.edge[child]
            for p in range(k, l + 1):
                if matched == len(pattern):
                    break
                if s[p] != pattern[matched]:
                    return None
                matched += 1
            v = child
        return v

    def to_dot(self, alphabet=None) -> str:
        def spell(ranks):
            if alphabet is None:
                return " ".join(map(str, ranks))
            out = []
            for r in ranks:
                a = "#" if r == self.seq.sigma else alphabet.unrank(r)
                out.append(chr(a) if isinstance(a, int) else str(a))
            return "".join(out)

        lines = ["digraph suffix_tree {", "  node [shape=circle];"]
        for v in range(self.size):
            if self.leaf_suffix[v]:
                lines.append(f'  n{v} [shape=box, label="{self.leaf_suffix[v]}"];')
            else:
                lines.append(f'  n{v} [label="{v}"];')
        for v in range(1, self.size):
            k, l = self.edge[v]
            text = spell(self.label(v)).replace('"', '\\"')
            lines.append(f'  n{self.parent[v]} -> n{v} [label="[{k},{l}] {text}"];')
        lines.append("}")
        return "\n".join(lines)


def build_suffix_tree(seq: Sequence) -> SuffixTree:
    return SuffixTree(seq)


def subtree_suffixes(tree: SuffixTree, node: int) -> set:
    return tree.subtree_suffixes(node)
