"""Counting arithmetical structures on the path P_n.

Every structure on P_n is the Laplacian structure on a shorter path with
some edges subdivided.  The enumerator walks those subdivision sequences, so
the counts below come from actual structures, and are then compared with the
Catalan and ballot numbers.
"""

from arithmetical import (
    ballot,
    catalan,
    census_by_d_entry,
    census_by_r1,
    enumerate_paths,
    path_count_refined,
)

print("The five structures on P_4:")
for s in enumerate_paths(4):
    print(f"  d = {s.d}   r = {s.r}")

print("\nTotals against the Catalan numbers:")
for n in range(2, 12):
    total = sum(1 for _ in enumerate_paths(n))
    print(f"  n = {n:2d}: {total:6d} structures, C_{n - 1} = {catalan(n - 1)}")

n = 8
print(f"\nRefining P_{n} by the number of ones in r:")
for k, count in census_by_r1(n).items():
    print(f"  r(1) = {k}: {count:4d}   closed form {path_count_refined(n, k)}")

print(f"\nThe value of d_3 on P_{n} is distributed like a ballot row:")
for v, count in census_by_d_entry(n, 3).items():
    print(f"  d_3 = {v}: {count:4d}   B({n - 2}, {n - v - 1}) = {ballot(n - 2, n - v - 1)}")
