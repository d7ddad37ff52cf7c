"""Verdicts for every sigma = e triple, with its segment witness word where one exists."""

from collections import Counter

from tripmaps import build_trip_map, catalog_lookup, classify_word, enumerate_family

tally = Counter()
for m in enumerate_family(3):
    if not m.triple.sigma.is_identity():
        continue
    entry = catalog_lookup(m.triple)
    tally[entry.verdict.value] += 1
    if entry.witness is None:
        print(f"{str(m.triple):24s} {entry.verdict}")
        continue
    c = classify_word(build_trip_map(m.triple), entry.witness)
    pts = ["(" + ", ".join(f"{float(v):.6f}" for v in w.point) + ")" for w in c.witnesses]
    print(f"{str(m.triple):24s} {entry.verdict:10s} word {entry.witness}: {c.verdict} {' '.join(pts)}")
print(dict(tally))
