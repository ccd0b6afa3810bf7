"""Structures on the cycle C_n from multisets.

A multiset S over {1..n} with fewer than n elements is turned into a
structure by inserting local maxima into the all-ones labelling; reading the
local maxima back off recovers S.  The map commutes with rotation.
"""

from arithmetical import binomial, cycle_count_refined, enumerate_cycles, omega, omega_inverse
from arithmetical.bijections import algorithm_a, omega_canonical
from arithmetical.transforms import rotate_multiset

for S in [(1, 1, 3, 5), (1, 1, 4, 4)]:
    print(f"Inserting at {S} on C_6:")
    for i in range(1, len(S) + 1):
        print(f"  after {S[:i]}: labels v_0.. = {algorithm_a(S[:i])}")
    print(f"  final r = {omega_canonical(S, 6)}\n")

S = (2, 2, 5)
s = omega(S, 6)
print(f"omega({S}) = r {s.r}, d {s.d}; back again: {omega_inverse(s)}")
for t in range(1, 3):
    T = rotate_multiset(S, t, 6)
    print(f"  rotate values by {t}: omega({T}).r = {omega(T, 6).r}")

print("\nTotals and refinement by r(1):")
for n in range(2, 9):
    total = sum(1 for _ in enumerate_cycles(n))
    row = [cycle_count_refined(n, k) for k in range(1, n + 1)]
    print(f"  n = {n}: {total:5d} = binom({2 * n - 1},{n - 1}) = {binomial(2 * n - 1, n - 1)}; by r(1): {row}")
