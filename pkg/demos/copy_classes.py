"""Walk through the maximal locations of a short word and query its index."""
from fpindex import build_index, normalize, oracle_all
from fpindex.seqcore import lfo, o_label, support, to_symbols

text = "abaceabacd"
seq, alphabet = normalize(text)
truth = oracle_all(seq)

print(f"{text}: n={seq.n} sigma={seq.sigma}")
print(f"{len(truth.F)} fingerprints, {len(truth.L)} maximal locations, "
      f"{truth.copy_class_count} copy classes\n")

# each copy class: the substring and where it occurs
for sub, locs in sorted(truth.classes.items(), key=lambda kv: (len(kv[0]), kv[0])):
    word = "".join(to_symbols(sub, alphabet))
    print(f"  {word:<12} {' '.join(map(repr, locs))}")

# every maximal location has a unique support and an O-label,
# a proper prefix of lfo(support)
loc = truth.classes[seq.s[1:5]][0]
m = support(seq, loc.i, loc.j)
print(f"\n{loc}: support {m}, O-label {''.join(to_symbols(o_label(seq, loc.i, loc.j), alphabet))}, "
      f"lfo({m}) = {''.join(to_symbols(lfo(seq, m), alphabet))}")

ix = build_index(text, seed=0)
for q in ("ca", "bd", "abcde", "ae"):
    hit = ix.query_exists(q)
    print(f"{q!r:8} {'->' if hit else 'not a fingerprint'} {ix.query_report(q) if hit else ''}")
