"""The words w_k have many more maximal locations than copy classes."""
from fpindex import build_index, normalize, oracle_all
from fpindex.oracle import gen_wk, wk_copy_classes, wk_locations

print(" k  raw    n   |L| formula  |L_C| formula  |L|/|L_C|  trie nodes")
for k in range(2, 10):
    raw = gen_wk(k)
    seq, alphabet = normalize(raw)
    truth = oracle_all(seq)
    L, C = len(truth.L), truth.copy_class_count
    ix = build_index((seq, alphabet), seed=k)
    print(f"{k:2} {len(raw):4} {seq.n:4} {L:5} {wk_locations(k):7.0f} {C:6} {wk_copy_classes(k):7.0f}"
          f"  {L / C:8.2f}  {ix.trie.size:6}")
