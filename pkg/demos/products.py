# AD spectra of lexicographic and Cartesian products against their
# closed forms.
from admatrix.graph_core import complete, cycle, empty, hypercube, path
from admatrix.products import product_report

for g, h in ((path(4), complete(2)), (cycle(6), cycle(4)), (cycle(5), empty(2)),
             (path(3), complete(3))):
    rep = product_report("lex", g, h)
    print(f"{g.name}[{h.name}]: n={rep.n} case {rep.case:<10} mismatch {rep.max_mismatch:.1e}")

print()
for g, h in ((cycle(4), cycle(4)), (cycle(6), cycle(6)), (hypercube(3), complete(2)),
             (hypercube(3), hypercube(3))):
    rep = product_report("cartesian", g, h)
    print(f"{g.name} x {h.name}: n={rep.n} validation {rep.validation} "
          f"mismatch {rep.max_mismatch:.1e}")

# joins have diameter at most 2, so their AD spectrum is the distance spectrum
rep = product_report("join", complete(1), empty(3))
print("\nK1 v 3K1 spectrum:", [round(x, 4) for x in rep.observed], "det", rep.determinant)
