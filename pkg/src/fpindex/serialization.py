"""Binary container for a built index, plus a JSON dump for debugging.

Layout: the magic ``FPIX``, a little-endian ``u32`` version and section
count, then sections of ``tag (4 bytes) | u64 length | payload``.  Integer
arrays are little-endian ``int64``.  Sections:

    HEAD  JSON metadata (builder, seed, method, report kind)
    ALPH  JSON list of symbols in rank order
    SEQ_  ranks of the normalized sequence
    RUNM  raw (start, end) of every normalized position, flattened
    TRIE  parent array then label array
    BACK  P, r, c, attempts, sigma, then (hash, rank) pairs
    RPTT  tree report: depth, lo, hi, order, group offsets, group members
    RLOC  list report: offsets, then (i, j) pairs
"""
from __future__ import annotations

import json
import struct

import numpy as np

from .errors import FormatError
from .fingerprint_index import (BacktrackFunction, FingerprintIndex, FingerprintTrie,
                                ListReport, TreeReport)
from .seqcore import Alphabet, MaximalLocation, Sequence

MAGIC = b"FPIX"
VERSION = 1
_I64 = np.dtype("<i8")


def _arr(values) -> bytes:
    return np.asarray(values, dtype=_I64).tobytes()


def _arrays(*parts) -> bytes:
    """Several int arrays, each prefixed by its length."""
    out = bytearray()
    for p in parts:
        out += struct.pack("<Q", len(p))
        out += _arr(p)
    return bytes(out)


def _read_arrays(buf: bytes) -> list:
    out = []
    off = 0
    while off < len(buf):
        if off + 8 > len(buf):
            raise FormatError("truncated array header")
        (cnt,) = struct.unpack_from("<Q", buf, off)
        off += 8
        end = off + 8 * cnt
        if end > len(buf):
            raise FormatError("truncated array payload")
        out.append(np.frombuffer(buf[off:end], dtype=_I64).tolist())
        off = end
    return out


def _flatten(groups) -> tuple[list, list]:
    offsets = [0]
    flat = []
    for g in groups:
        flat.extend(g)
        offsets.append(len(flat))
    return offsets, flat


def _split(offsets, flat) -> list:
    return [flat[offsets[v]:offsets[v + 1]] for v in range(len(offsets) - 1)]


def _symbols_json(alphabet: Alphabet) -> bytes:
    return json.dumps(list(alphabet.symbols)).encode()


def _sections(index: FingerprintIndex) -> list:
    seq, bt, rep = index.seq, index.backtrack, index.report
    head = {"version": VERSION, "report": rep.kind, "method": index.method, "k": index.k,
            "sigma": seq.sigma, "meta": index.meta}
    pairs = sorted(bt.table.items())
    back = [bt.P, bt.r, bt.c, bt.attempts, bt.sigma] + [x for p in pairs for x in p]
    secs = [
        (b"HEAD", json.dumps(head, sort_keys=True).encode()),
        (b"ALPH", _symbols_json(index.alphabet)),
        (b"SEQ_", _arr(seq.chars)),
        (b"RUNM", _arr([x for p in seq.runmap for x in p])),
        (b"TRIE", _arrays(index.trie.parent, index.trie.label)),
        (b"BACK", _arr(back)),
    ]
    if rep.kind == "tree":
        offsets, flat = _flatten(rep.groups)
        secs.append((b"RPTT", _arrays(rep.depth, rep.lo, rep.hi, rep.order, offsets, flat)))
    else:
        offsets, flat = _flatten(rep.lists)
        secs.append((b"RLOC", _arrays(offsets, [x for loc in flat for x in (loc.i, loc.j)])))
    return secs


def dumps(index: FingerprintIndex) -> bytes:
    secs = _sections(index)
    out = bytearray(MAGIC + struct.pack("<II", VERSION, len(secs)))
    for tag, payload in secs:
        out += tag + struct.pack("<Q", len(payload)) + payload
    return bytes(out)


def loads(data: bytes) -> FingerprintIndex:
    if len(data) < 12 or data[:4] != MAGIC:
        raise FormatError("not an index file")
    version, count = struct.unpack_from("<II", data, 4)
    if version != VERSION:
        raise FormatError(f"unsupported version {version}")
    off = 12
    secs = {}
    for _ in range(count):
        if off + 12 > len(data):
            raise FormatError("truncated section header")
        tag = data[off:off + 4]
        (size,) = struct.unpack_from("<Q", data, off + 4)
        off += 12
        if off + size > len(data):
            raise FormatError(f"truncated section {tag!r}")
        secs[tag] = data[off:off + size]
        off += size
    try:
        return _build(secs)
    except (KeyError, ValueError, IndexError) as exc:
        raise FormatError(f"corrupt index: {exc}") from exc


def _build(secs: dict) -> FingerprintIndex:
    head = json.loads(secs[b"HEAD"])
    symbols = json.loads(secs[b"ALPH"])
    alphabet = Alphabet.from_symbols(symbols)
    chars = np.frombuffer(secs[b"SEQ_"], dtype=_I64).tolist()
    flat = np.frombuffer(secs[b"RUNM"], dtype=_I64).tolist()
    runmap = list(zip(flat[0::2], flat[1::2]))
    seq = Sequence.from_ranks(chars, head["sigma"], runmap)
    parent, label = _read_arrays(secs[b"TRIE"])
    trie = FingerprintTrie(parent, label)
    back = np.frombuffer(secs[b"BACK"], dtype=_I64).tolist()
    P, r, c, attempts, sigma = back[:5]
    table = dict(zip(back[5::2], back[6::2]))
    bt = BacktrackFunction(P, r, sigma, table, c, attempts)
    if head["report"] == "tree":
        depth, lo, hi, order, offsets, members = _read_arrays(secs[b"RPTT"])
        report = TreeReport(seq, depth, lo, hi, order, _split(offsets, members))
    else:
        offsets, ij = _read_arrays(secs[b"RLOC"])
        locs = [MaximalLocation(i, j) for i, j in zip(ij[0::2], ij[1::2])]
        report = ListReport(_split(offsets, locs))
    return FingerprintIndex(seq, alphabet, trie, bt, report, head.get("meta"),
                            method=head["method"], k=head["k"])


def save(index: FingerprintIndex, path) -> None:
    with open(path, "wb") as fh:
        fh.write(dumps(index))


def load(path) -> FingerprintIndex:
    with open(path, "rb") as fh:
        return loads(fh.read())


def show_symbol(a) -> str:
    return chr(a) if isinstance(a, int) else str(a)


def to_json(index: FingerprintIndex) -> dict:
    """Human-readable view of every section."""
    bt = index.backtrack
    out = {
        "meta": index.meta,
        "alphabet": list(index.alphabet.symbols),
        "sequence": list(index.seq.chars),
        "runmap": [list(p) for p in index.seq.runmap],
        "trie": {"parent": index.trie.parent, "label": index.trie.label},
        "backtrack": {"P": bt.P, "r": bt.r, "c": bt.c, "attempts": bt.attempts,
                      "pairs": sorted([h, c] for h, c in bt.table.items())},
        "report": {},
    }
    for v in range(1, index.trie.size):
        key = ",".join(show_symbol(s) for s in index.trie.fingerprint(v).symbols(index.alphabet))
        out["report"][key] = [[loc.i, loc.j] for loc in sorted(index.report.locations(v))]
    return out
