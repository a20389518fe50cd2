# Diametrical degrees, AD independence and colouring, and the spectral
# bounds relating them.
from admatrix.graph_core import cycle, frucht, hexagonal_prism, path
from admatrix.invariants import (
    ad_chromatic_number,
    ad_independence_number,
    all_bounds,
    degree_profile,
    is_ad_regular,
)
from admatrix.solvers import chromatic_number, independence_number
from admatrix.spectra import is_distance_regular

p5 = path(5)
print("P5: chi =", chromatic_number(p5), " chi_AD =", ad_chromatic_number(p5))
print("P5: alpha =", independence_number(p5), " alpha_AD =", ad_independence_number(p5))

print("\nC6 AD degrees:", degree_profile(cycle(6)).addegrees)
print("Frucht: regular", frucht().is_regular(), " AD-regular", is_ad_regular(frucht()))
hp = hexagonal_prism()
print("hexagonal prism: AD-regular", is_ad_regular(hp),
      " distance-regular", is_distance_regular(hp) is not None)

print("\nbounds for C6:")
for rep in all_bounds(cycle(6), planar_assertion=True):
    state = "ok" if rep.holds else "VIOLATED"
    print(f"  {rep.name:<28} {rep.left:8.4f} {rep.relation} {rep.right:8.4f}  {state}")

# the clique bound also reports the sharpened clause, which fails on P3
det = next(r for r in all_bounds(path(3)) if r.name == "clique").details
print("\nP3 clique details:", det)
