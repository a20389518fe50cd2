"""Canonical forms and graph populations used by the verification sweeps.

The canonical form is computed by individualisation-refinement: colour
refinement to an equitable ordered partition, then branching on every
vertex of the first non-singleton cell.  No automorphism pruning, which
is fine for the small orders (n <= 8 or so) this is used on.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .graph_core import Graph, GraphError, from_edge_list


def _refine(nbrs: list[frozenset[int]], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        sets = [frozenset(c) for c in cells]
        out: list[tuple[int, ...]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(len(nbrs[v] & s) for s in sets) for v in cell}
            for key in sorted(set(sig.values())):
                out.append(tuple(v for v in cell if sig[v] == key))
        if len(out) == len(cells):
            return out
        cells = out


def _certificate(nbrs: list[frozenset[int]], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        mask = 0
        for w in nbrs[v]:
            mask |= 1 << (len(order) - 1 - pos[w])
        rows.append(mask)
    return tuple(rows)


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(certificate, order)``; isomorphic graphs share certificates."""
    nbrs = [frozenset(a) for a in g.adjacency]
    best: list = [None, None]

    def search(cells):
        cells = _refine(nbrs, cells)
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            cert = _certificate(nbrs, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        for v in cell:
            rest = tuple(w for w in cell if w != v)
            search(cells[:i] + [(v,), rest] + cells[i + 1:])

    search([tuple(range(g.n))])
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    return (g.n, canonical_labeling(g)[0])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def canonical_graph(g: Graph) -> Graph:
    """Relabel ``g`` into its canonical vertex order."""
    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    return from_edge_list(g.n, [(pos[u], pos[v]) for u, v in g.edges()], g.name)


@lru_cache(maxsize=None)
def _connected_forms(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    found = {}
    for cert in _connected_forms(n - 1):
        base = _from_certificate(n - 1, cert)
        for subset in range(1, 1 << (n - 1)):
            edges = base.edges() + [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
            g = from_edge_list(n, edges)
            c = canonical_labeling(g)[0]
            found.setdefault(c, None)
    return tuple(sorted(found))


def _from_certificate(n: int, cert: tuple[int, ...]) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if cert[i] >> (n - 1 - j) & 1]
    return from_edge_list(n, edges)


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on ``n`` vertices up to isomorphism, canonically labelled.

    Built by adding one vertex at a time: every connected graph has a
    vertex whose deletion leaves it connected.
    """
    if n < 1:
        raise GraphError("n must be positive")
    return [_from_certificate(n, c).renamed(f"conn{n}#{i}")
            for i, c in enumerate(_connected_forms(n))]


def exhaustive_population(max_n: int, min_n: int = 2) -> list[Graph]:
    out: list[Graph] = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n))
    return out


def random_connected_graph(n: int, rng: np.random.Generator, p: float | None = None,
                           name: str = "") -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectedness by rejection.

    ``p`` defaults to ``min(1, 2 ln n / n)``.
    """
    if n < 2:
        raise GraphError("random connected graph needs n >= 2")
    if p is None:
        p = min(1.0, 2 * math.log(n) / n)
    if not 0 < p <= 1:
        raise GraphError(f"edge probability {p} outside (0, 1]")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    while True:
        keep = rng.random(len(pairs)) < p
        g = from_edge_list(n, [e for e, k in zip(pairs, keep) if k], name)
        if g.is_connected():
            return g


def random_population(count: int, max_n: int, seed: int, min_n: int = 2) -> list[Graph]:
    """``count`` random connected graphs with n drawn uniformly from ``min_n..max_n``."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        out.append(random_connected_graph(n, rng, name=f"random[{seed}]#{i}:n={n}"))
    return out
