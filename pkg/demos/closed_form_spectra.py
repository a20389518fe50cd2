# Closed-form AD spectra of paths, cycles and double stars versus
# direct computation.
from admatrix.graph_core import cycle, double_star, path
from admatrix.spectra import (
    ad_charpoly,
    ad_spectrum,
    cycle_spectrum_closed,
    double_star_charpoly_closed,
    path_charpoly_closed,
)

for n in range(3, 9):
    closed, exact = path_charpoly_closed(n), ad_charpoly(path(n))
    print(f"P{n}: {closed}   exact agrees: {closed == exact}")

print()
for n in (4, 5, 6, 9, 12):
    gap = cycle_spectrum_closed(n).max_mismatch(ad_spectrum(cycle(n)))
    print(f"C{n}: max mismatch {gap:.1e}")

print()
for n1, n2 in ((2, 2), (2, 3), (3, 3), (4, 6)):
    cp = double_star_charpoly_closed(n1, n2)
    print(f"S({n1},{n2}): {cp}   exact agrees: {cp == ad_charpoly(double_star(n1, n2))}")

# the closed form for cycles does not cover the triangle
try:
    cycle_spectrum_closed(3)
except ValueError as exc:
    print("\nC3:", exc)
