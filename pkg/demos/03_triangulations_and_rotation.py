"""Triangulations, quiddity sequences and the rotation map on ballot words.

A triangulation of an (n+1)-gon gives a d-structure on P_n by counting the
triangles at each vertex.  Rotating the polygon acts on the ballot words that
encode the structures; the map f_n below is that action.
"""

from arithmetical import (
    Triangulation,
    f_map,
    iter_ballot_words,
    quiddity,
    rotate_triangulation,
    structure_from_triangulation,
    triangulation_from_structure,
    word_encode,
)

pent = Triangulation(5, [(0, 1, 4), (1, 3, 4), (1, 2, 3)])
print(f"pentagon quiddity {quiddity(pent)} -> d = {structure_from_triangulation(pent).d}")
hexa = Triangulation(6, [(0, 1, 5), (1, 4, 5), (1, 2, 4), (2, 3, 4)])
print(f"hexagon quiddity  {quiddity(hexa)} -> d = {structure_from_triangulation(hexa).d}")

print("\nf_3 on all fourteen ballot words of length 3:")
for w in iter_ballot_words(3):
    print(f"  {w} -> {f_map(w)}")

s = structure_from_triangulation(hexa)
T = triangulation_from_structure(s)
print("\nRotating the hexagon six times walks the word around a cycle:")
for _ in range(6):
    print(f"  D = {quiddity(T)}   word = {word_encode(structure_from_triangulation(T))}")
    T = rotate_triangulation(T)
