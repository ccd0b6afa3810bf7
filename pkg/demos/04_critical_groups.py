"""Critical groups via the Smith normal form, and structures on stars.

On a path every structure has trivial critical group; on a cycle the group
is cyclic of order r(1).  Subdividing an edge does not change it.  On a star
the structures are Egyptian fraction representations of integers.
"""

from arithmetical import critical_group, enumerate_cycles, generalized_laplacian, smith_normal_form
from arithmetical.oracle import star_structures
from arithmetical.transforms import subdivide_cycle

for s in list(enumerate_cycles(5))[::25]:
    L = generalized_laplacian(s.graph, s.d)
    snf = smith_normal_form(L)
    print(f"r = {s.r}  SNF {snf.diag}  critical group {critical_group(s)}  r(1) = {s.r.count(1)}")

s = next(x for x in enumerate_cycles(4) if x.r.count(1) == 2)
t = subdivide_cycle(s, 2)
print(f"\nsubdividing {s.r} -> {t.r}: {critical_group(s)} -> {critical_group(t)}")

print("\nStructures on the star with 3 leaves (d_0 = sum of 1/d_i):")
seen = set()
for d0, leaves in star_structures(3):
    key = tuple(sorted(leaves))
    if key not in seen:
        seen.add(key)
        print(f"  {d0} = " + " + ".join(f"1/{x}" for x in key))
print(f"  ({len(star_structures(3))} ordered solutions in all)")
