"""Counting distinct simplex algorithms and checking the period-one family."""

from tripmaps import duplicate_classes, unique_count_bound
from tripmaps.simplex import period_one_holds

for d in (3, 4):
    r = duplicate_classes(d)
    print(
        f"d={d}: {r.triples} triples, {r.classes} distinct (M0, M1) pairs, bound {unique_count_bound(d - 1)}, "
        f"largest class {r.largest_class}"
    )

for d in (3, 4, 5):
    print(f"d={d} period-one points for k=0,1,2:", [period_one_holds(d, k) for k in range(3)])
