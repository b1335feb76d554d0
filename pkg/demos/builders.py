"""Three ways to name the fingerprints of a random sequence, and what they cost."""
import random
import time

from fpindex import build_index, normalize, oracle_all
from fpindex.serialization import dumps, loads

rng = random.Random(1)
raw = bytes(rng.choice(b"acgt") for _ in range(400))
seq, alphabet = normalize(raw)
truth = oracle_all(seq)
print(f"n={seq.n} after collapsing runs, |F|={len(truth.F)}, |L|={len(truth.L)}")

for builder in ("exact", "randomized", "mc"):
    t0 = time.perf_counter()
    ix = build_index(raw, builder=builder, seed=7)
    dt = time.perf_counter() - t0
    blob = dumps(ix)
    same = set(ix.fingerprints()) == truth.F
    print(f"{builder:10} {len(ix):3} fingerprints  {ix.location_count():5} locations  "
          f"{dt * 1000:6.1f} ms  {len(blob):6} bytes  matches oracle: {same}")

back = loads(blob)
print("reloaded index agrees:", all(back.query_exists(q) == ix.query_exists(q)
                                     for q in (b"ac", b"gt", b"acgt", b"x")))
