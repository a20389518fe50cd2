"""AD-cycles, AD-partitions and the combinatorial determinant expansion.

An AD-partition of a vertex subset is a vertex-disjoint family of blocks:
pairs that are adjacent or antipodal, and cycles (size >= 3) whose
consecutive vertices are adjacent or antipodal.  Equivalently, an
elementary subgraph of the weighted view.  Enumeration follows the
elementary subgraphs, so a vertex set carrying several distinct cycles
contributes one partition per cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph_core import (
    DistanceMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    antipodal_matrix,
    bipartition,
)
from .spectra import CharPoly

ENUMERATION_CAP = 12


@dataclass(frozen=True)
class ADPartition:
    """Blocks plus the bookkeeping counts used by the expansion.

    Pair blocks are stored as sorted 2-tuples; cycle blocks in cyclic
    order starting from their smallest vertex.
    """

    blocks: tuple[tuple[int, ...], ...]
    p: int    # number of size-2 blocks
    p1: int   # number of cycle blocks
    a: int    # antipodal pairs among the size-2 blocks
    a1: int   # antipodal consecutive pairs inside cycle blocks

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for b in self.blocks for v in b)

    def term(self, d: int) -> int:
        """Contribution (-1)^(p+p1) 2^p1 d^(2a+a1) to the coefficient c_size."""
        return (-1) ** (self.p + self.p1) * 2 ** self.p1 * d ** (2 * self.a + self.a1)


class _Relation:
    """Adjacent-or-antipodal relation as bitmasks, plus the antipodal part."""

    def __init__(self, g: Graph, dm: DistanceMatrix | None = None):
        if g.n > ENUMERATION_CAP:
            raise GraphError(f"n={g.n} exceeds the enumeration cap {ENUMERATION_CAP}")
        self.dm = dm or all_pairs_distances(g)
        self.d = self.dm.diameter
        anti = antipodal_matrix(self.dm)
        self.n = g.n
        self.anti = anti.astype(bool)
        rel = (self.dm.entries == 1) | self.anti
        self.masks = [sum(1 << int(w) for w in np.nonzero(rel[v])[0]) for v in range(g.n)]

    def nbrs(self, v: int, within: int):
        m = self.masks[v] & within
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def count_anti(self, cycle: tuple[int, ...]) -> int:
        k = len(cycle)
        return sum(bool(self.anti[cycle[i], cycle[(i + 1) % k]]) for i in range(k))

    def cycles_from(self, v: int, free: int):
        """Simple cycles through ``v`` using only ``free`` vertices (all > v).

        Each undirected cycle is produced once (second vertex < last vertex).
        """
        path = [v]

        def extend(u: int, avail: int):
            for w in self.nbrs(u, avail):
                path.append(w)
                if len(path) >= 3 and self.masks[w] >> v & 1 and path[1] < w:
                    yield tuple(path)
                yield from extend(w, avail & ~(1 << w))
                path.pop()

        yield from extend(v, free)


def _elementary(rel: _Relation, k: int | None, spanning: bool):
    """Yield ADPartitions; ``k`` fixes the number of covered vertices."""
    full = (1 << rel.n) - 1
    blocks: list[tuple[int, ...]] = []
    counts = [0, 0, 0, 0]   # p, p1, a, a1

    def emit():
        return ADPartition(tuple(blocks), *counts)

    def rec(free: int, covered: int):
        if k is not None:
            if covered > k:
                return
            if covered == k:
                if not spanning or free == 0:
                    yield emit()
                return
            if covered + bin(free).count("1") < k:
                return
        if free == 0:
            yield emit()
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        if not spanning:
            yield from rec(rest, covered)
        for u in rel.nbrs(v, rest):
            anti = int(rel.anti[v, u])
            blocks.append((v, u))
            counts[0] += 1
            counts[2] += anti
            yield from rec(rest & ~(1 << u), covered + 2)
            blocks.pop()
            counts[0] -= 1
            counts[2] -= anti
        for cyc in rel.cycles_from(v, rest):
            if k is not None and covered + len(cyc) > k:
                continue
            used = sum(1 << w for w in cyc)
            anti = rel.count_anti(cyc)
            blocks.append(cyc)
            counts[1] += 1
            counts[3] += anti
            yield from rec(free & ~used, covered + len(cyc))
            blocks.pop()
            counts[1] -= 1
            counts[3] -= anti

    yield from rec(full, 0)


def enumerate_ad_partitions(g: Graph, k: int):
    """All AD-partitions covering exactly ``k`` vertices (each once)."""
    if not 2 <= k <= g.n:
        raise GraphError(f"k={k} outside 2..{g.n}")
    rel = _Relation(g)
    yield from _elementary(rel, k, spanning=False)


def spanning_ad_partitions(g: Graph):
    rel = _Relation(g)
    yield from _elementary(rel, g.n, spanning=True)


def det_via_partitions(g: Graph) -> int:
    """det AD(G) summed over spanning AD-partitions."""
    rel = _Relation(g)
    n, d = g.n, rel.d
    total = 0
    for s in _elementary(rel, n, spanning=True):
        total += (-1) ** (n - s.p - s.p1) * 2 ** s.p1 * d ** (2 * s.a + s.a1)
    return total


def charpoly_coeff_via_partitions(g: Graph, k: int) -> int:
    if k == 0:
        return 1
    if k == 1:
        return 0
    if not 2 <= k <= g.n:
        raise GraphError(f"k={k} outside 0..{g.n}")
    rel = _Relation(g)
    return sum(s.term(rel.d) for s in _elementary(rel, k, spanning=False))


def charpoly_via_partitions(g: Graph) -> CharPoly:
    """All coefficients in one sweep over every elementary subgraph."""
    rel = _Relation(g)
    coeffs = [0] * (g.n + 1)
    coeffs[0] = 1
    for s in _elementary(rel, None, spanning=False):
        if s.blocks:
            coeffs[s.size] += s.term(rel.d)
    return CharPoly(tuple(coeffs))


# ---------------------------------------------------------------------------
# low-order coefficients in closed form
# ---------------------------------------------------------------------------

def c2_closed(g: Graph) -> int:
    """-(m + k d^2) with k the number of antipodal pairs (none when d = 1)."""
    dm = all_pairs_distances(g)
    k = int(antipodal_matrix(dm).sum()) // 2
    return -(g.m + k * dm.diameter ** 2)


def triple_profile(g: Graph) -> tuple[int, int, int, int]:
    """(k0, k1, k2, k3): triples whose three pairs are all adjacent or
    antipodal, split by how many of the pairs are antipodal."""
    dm = all_pairs_distances(g)
    adj = dm.entries == 1
    anti = antipodal_matrix(dm).astype(bool)
    ks = [0, 0, 0, 0]
    for tri in combinations(range(g.n), 3):
        pairs = list(combinations(tri, 2))
        if all(adj[u, v] or anti[u, v] for u, v in pairs):
            ks[sum(bool(anti[u, v]) for u, v in pairs)] += 1
    return tuple(ks)


def c3_closed(g: Graph) -> int:
    d = all_pairs_distances(g).diameter
    k0, k1, k2, k3 = triple_profile(g)
    return -2 * (k0 + k1 * d + k2 * d ** 2 + k3 * d ** 3)


# ---------------------------------------------------------------------------
# AD-cycles
# ---------------------------------------------------------------------------

def ad_cycles(g: Graph, length: int | None = None):
    """Yield AD-cycles (cyclic vertex tuples), each undirected cycle once."""
    rel = _Relation(g)
    full = (1 << g.n) - 1
    for v in range(g.n):
        above = full & ~((1 << (v + 1)) - 1)
        for cyc in rel.cycles_from(v, above):
            if length is None or len(cyc) == length:
                yield cyc


def enumerate_ad_cycles(g: Graph, length: int) -> int:
    """Number of AD-cycles of the given length."""
    if not 3 <= length <= g.n:
        raise GraphError(f"cycle length {length} outside 3..{g.n}")
    return sum(1 for _ in ad_cycles(g, length))


def weighted_ad_cycle_sum(g: Graph, length: int) -> int:
    """Sum over AD-cycles of the given length of d^(antipodal steps)."""
    rel = _Relation(g)
    return sum(rel.d ** rel.count_anti(c) for c in ad_cycles(g, length))


def odd_ad_cycle_count_from_coeffs(cp: CharPoly) -> tuple[int, int] | None:
    """``(k, -c_{2k+1}/2)`` for the first nonzero odd coefficient c_{2k+1}.

    Returns ``None`` when every odd coefficient vanishes (no odd AD-cycles).
    For diameter >= 2 the value is the d-weighted cycle sum, see
    :func:`weighted_ad_cycle_sum`; it is the plain count only when those
    shortest odd cycles avoid antipodal steps.
    """
    if cp.degree >= 1 and cp[1] != 0:
        raise ValueError("c_1 must vanish for an AD matrix (zero trace)")
    for j in range(3, cp.degree + 1, 2):
        c = cp[j]
        if c == 0:
            continue
        if c > 0 or c % 2:
            raise ValueError(f"c_{j}={c}: first nonzero odd coefficient must be negative and even")
        return (j - 1) // 2, -c // 2
    return None


# ---------------------------------------------------------------------------
# diametrical bipartite graphs
# ---------------------------------------------------------------------------

def _definitionally_diametrical_bipartite(g: Graph, parts, dm: DistanceMatrix) -> bool:
    anti = antipodal_matrix(dm) if dm.diameter > 1 else (dm.entries == 1)
    for part in parts:
        idx = sorted(part)
        if np.any(anti[np.ix_(idx, idx)]):
            return False
    return True


def is_diametrical_bipartite(g: Graph) -> bool:
    """Bipartite with odd diameter; checked against the definition too."""
    dm = all_pairs_distances(g)
    parts = bipartition(g)
    if parts is None:
        return False
    fast = dm.diameter % 2 == 1
    if fast != _definitionally_diametrical_bipartite(g, parts, dm):
        raise AssertionError(f"parity shortcut disagrees with the definition on {g!r}")
    return fast
