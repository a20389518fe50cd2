"""Exact clique, independence and chromatic numbers on small graphs.

All three work on bitmask adjacency and prune with greedy colouring bounds.
"""

from __future__ import annotations

from .graph_core import Graph, GraphError

ALPHA_CAP = 24
CLIQUE_CAP = 20
CHROMATIC_CAP = 16


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _colour_bound(cand: int, adj: list[int]) -> int:
    """Number of colour classes in a greedy sequential colouring of ``cand``."""
    colours = 0
    left = cand
    while left:
        colours += 1
        avail = left
        while avail:
            v = (avail & -avail).bit_length() - 1
            left &= ~(1 << v)
            avail &= ~(1 << v) & ~adj[v]
    return colours


def _max_clique(adj: list[int], n: int) -> int:
    best = 0

    def expand(cand: int, size: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _colour_bound(cand, adj) <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = (cand & -cand).bit_length() - 1
            expand(cand & adj[v], size + 1)
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best


def clique_number(g: Graph) -> int:
    if g.n > CLIQUE_CAP:
        raise GraphError(f"n={g.n} exceeds the exact clique cap {CLIQUE_CAP}")
    return _max_clique(g.neighbour_masks(), g.n)


def independence_number(g: Graph) -> int:
    if g.n > ALPHA_CAP:
        raise GraphError(f"n={g.n} exceeds the exact independence cap {ALPHA_CAP}")
    full = (1 << g.n) - 1
    comp = [full & ~m & ~(1 << v) for v, m in enumerate(g.neighbour_masks())]
    return _max_clique(comp, g.n)


def _colourable(adj: list[int], n: int, k: int) -> bool:
    colour = [-1] * n

    def pick() -> int:
        # DSATUR: most distinct neighbour colours, then highest degree
        best, key = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = len({colour[w] for w in _bits(adj[v]) if colour[w] >= 0})
            cand = (sat, bin(adj[v]).count("1"))
            if key is None or cand > key:
                best, key = v, cand
        return best

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        taken = {colour[w] for w in _bits(adj[v]) if colour[w] >= 0}
        # a brand-new colour is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colour[v] = c
            if rec(done + 1, max(used, c + 1)):
                return True
            colour[v] = -1
        return False

    return rec(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n > CHROMATIC_CAP:
        raise GraphError(f"n={g.n} exceeds the exact chromatic cap {CHROMATIC_CAP}")
    if g.n == 0:
        return 0
    adj = g.neighbour_masks()
    k = max(1, _max_clique(adj, g.n))
    while not _colourable(adj, g.n, k):
        k += 1
    return k
