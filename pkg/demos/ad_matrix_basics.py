# Building AD matrices and looking at what they encode.
import numpy as np

from admatrix.graph_core import (
    ad_matrix,
    all_pairs_distances,
    complete,
    cycle,
    path,
    weighted_view,
)

# P4: the two endpoints are the only antipodal pair, at distance 3
g = path(4)
dm = all_pairs_distances(g)
print("distances of P4\n", dm.entries)
print("AD(P4)\n", ad_matrix(g))

# for diameter 2 the AD matrix is just the distance matrix
c4 = cycle(4)
print("AD(C4) == D(C4):", np.array_equal(ad_matrix(c4), all_pairs_distances(c4).entries))

# complete graphs have no diametrical term, so AD(K_n) = A(K_n)
print("AD(K3)\n", ad_matrix(complete(3)))

# the weighted view: unit edges plus weight-d edges between antipodes
w = weighted_view(cycle(6))
print("C6 weighted edges:", w.edges)
print("weighted degrees:", w.weighted_degrees())
