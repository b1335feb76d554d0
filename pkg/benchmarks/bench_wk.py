"""Build times on the words w_k, written to wk_scaling.csv.

    python3 benchmarks/bench_wk.py [kmin kmax]
"""
import csv
import random
import sys
import time
from pathlib import Path

from fpindex import build_index, build_mc, build_names_randomized, normalize
from fpindex.oracle import gen_wk, oracle_all

HERE = Path(__file__).resolve().parent
FIELDS = ["k", "raw_length", "n", "fingerprints", "locations", "copy_classes",
          "exact_s", "randomized_s", "mc_s"]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def measure(kmin=6, kmax=12, repeat=3):
    rows = []
    for k in range(kmin, kmax + 1):
        raw = gen_wk(k)
        seq, alphabet = normalize(raw)
        truth = oracle_all(seq, cap=10_000)
        rows.append({
            "k": k,
            "raw_length": len(raw),
            "n": seq.n,
            "fingerprints": len(truth.F),
            "locations": len(truth.L),
            "copy_classes": truth.copy_class_count,
            "exact_s": best_of(lambda: build_index((seq, alphabet), seed=k), repeat),
            "randomized_s": best_of(lambda: build_names_randomized(seq), repeat),
            "mc_s": best_of(lambda: build_mc(seq, rng=random.Random(k)), repeat),
        })
    return rows


def write_csv(rows, path=HERE / "wk_scaling.csv"):
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=FIELDS)
        w.writeheader()
        for r in rows:
            w.writerow({k: (f"{v:.6f}" if isinstance(v, float) else v) for k, v in r.items()})
    return path


if __name__ == "__main__":
    lo, hi = (int(a) for a in sys.argv[1:3]) if len(sys.argv) > 2 else (6, 12)
    rows = measure(lo, hi)
    path = write_csv(rows)
    print(path.read_text(), end="")
