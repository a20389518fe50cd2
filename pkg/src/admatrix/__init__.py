"""Adjacency-diametrical (AD) matrices of connected graphs.

AD(G) has entry 1 for adjacent pairs, d for pairs at distance d (the
diameter) and 0 elsewhere; for complete graphs it is the adjacency matrix.
"""

from .graph_core import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphError,
    WeightedGraph,
    ad_matrix,
    all_pairs_distances,
    bipartition,
    family,
    from_edge_list,
    kth_adjacency,
    read_edge_list,
    weighted_view,
    write_edge_list,
)
from .spectra import (
    CharPoly,
    Spectrum,
    ad_charpoly,
    ad_spectrum,
    char_poly_exact,
    determinant_exact,
    eigenvalues_sym,
)

__version__ = "0.1.0"

__all__ = [
    "CharPoly",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "Graph",
    "GraphError",
    "Spectrum",
    "WeightedGraph",
    "ad_charpoly",
    "ad_matrix",
    "ad_spectrum",
    "all_pairs_distances",
    "bipartition",
    "char_poly_exact",
    "determinant_exact",
    "eigenvalues_sym",
    "family",
    "from_edge_list",
    "kth_adjacency",
    "read_edge_list",
    "weighted_view",
    "write_edge_list",
]
