import itertools
import json
import struct

import pytest

from fpindex import build_index
from fpindex.errors import FormatError, UnknownFingerprint
from fpindex.fingerprint_index import BUILDERS
from fpindex.serialization import MAGIC, dumps, load, loads, save, to_json

from conftest import A

QUERIES = ["".join(c) for m in range(1, 6) for c in itertools.combinations("abcdez", m)]


@pytest.mark.parametrize("builder", BUILDERS)
def test_round_trip(builder, tmp_path):
    ix = build_index(A.encode(), builder=builder, seed=7)
    path = tmp_path / "a.idx"
    save(ix, path)
    back = load(path)
    assert dumps(back) == dumps(ix)
    for q in QUERIES:
        assert back.query_exists(q) == ix.query_exists(q)
        if ix.query_exists(q):
            assert back.query_report(q) == ix.query_report(q)
        else:
            with pytest.raises(UnknownFingerprint):
                back.query_report(q)


def test_str_alphabet_round_trip():
    ix = build_index("xyzzyx", seed=1)
    back = loads(dumps(ix))
    assert back.alphabet.symbols == ("x", "y", "z")
    assert back.query_report_raw("yz") == ix.query_report_raw("yz")


def test_header_layout():
    data = dumps(build_index(A, seed=1))
    assert data[:4] == MAGIC
    version, count = struct.unpack_from("<II", data, 4)
    assert version == 1 and count == 7
    assert data[12:16] == b"HEAD"


def test_bad_inputs():
    data = dumps(build_index(A, seed=1))
    with pytest.raises(FormatError):
        loads(b"nope")
    with pytest.raises(FormatError):
        loads(data[:40])
    with pytest.raises(FormatError):
        loads(data[:4] + struct.pack("<II", 99, 7) + data[12:])


def test_json_dump():
    ix = build_index(A.encode(), seed=2)
    doc = json.loads(json.dumps(to_json(ix)))
    assert doc["report"]["a,c"] == [[3, 4], [8, 9]]
    assert len(doc["report"]) == 17
    assert len(doc["backtrack"]["pairs"]) == 17
