# The determinant as a signed sum over spanning AD-partitions.
from admatrix.graph_core import ad_matrix, path, star
from admatrix.partitions import (
    charpoly_via_partitions,
    det_via_partitions,
    spanning_ad_partitions,
)
from admatrix.spectra import ad_charpoly, determinant_exact

g = star(4)
print("spanning AD-partitions of the star on 4 vertices (d = 2):")
for s in spanning_ad_partitions(g):
    print(f"  {s.blocks}  p={s.p} p1={s.p1} a={s.a} a1={s.a1}")
print("sum over partitions:", det_via_partitions(g))
print("Berkowitz:          ", determinant_exact(ad_matrix(g)))

# path determinants follow a pattern in n mod 4
print()
for n in range(2, 13):
    print(f"det AD(P{n}) = {det_via_partitions(path(n))}")

# every coefficient, not only the constant term, comes out of the same sum
print()
print("by partitions:", charpoly_via_partitions(path(6)))
print("exact:        ", ad_charpoly(path(6)))
