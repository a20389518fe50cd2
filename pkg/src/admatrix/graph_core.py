"""Simple graphs, named families, BFS distances and the AD matrix.

Vertices are always the integers ``0 .. n-1``.  Matrices are returned as
``numpy`` ``int64`` arrays; exact algebra on them (characteristic
polynomials, determinants) converts entries to Python ints first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import numpy as np


class GraphError(ValueError):
    """Invalid graph input or an operation applied outside its domain."""


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Use
    :func:`from_edge_list` or one of the family constructors rather than
    building instances by hand.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def neighbour_masks(self) -> list[int]:
        """Adjacency as one bitmask per vertex."""
        return [sum(1 << w for w in a) for a in self.adjacency]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return len(_bfs(self, 0)) == self.n

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def renamed(self, name: str) -> "Graph":
        return Graph(self.n, self.adjacency, name)

    def __repr__(self) -> str:
        label = self.name or "Graph"
        return f"<{label}: n={self.n}, m={self.m}>"


def from_edge_list(n: int, edges, name: str = "") -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), name)


def from_adjacency_matrix(a, name: str = "") -> Graph:
    a = np.asarray(a)
    n = a.shape[0]
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if a[u, v]], name)


# ---------------------------------------------------------------------------
# edge-list files
# ---------------------------------------------------------------------------

def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format; ``#`` lines are comments."""
    lines = [ln.split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln[0].startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        n, m = (int(x) for x in lines[0])
        edges = [(int(u), int(v)) for u, v in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge-list input: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges but {len(edges)} were given")
    return from_edge_list(n, edges, name)


def read_edge_list(path) -> Graph:
    path = Path(path)
    return parse_edge_list(path.read_text(), name=path.name)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def write_edge_list(g: Graph, path) -> None:
    Path(path).write_text(format_edge_list(g))


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

def path(n: int) -> Graph:
    """P_n with edges i ~ i+1."""
    if n < 2:
        raise GraphError("path needs n >= 2")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], f"path:{n}")


def cycle(n: int) -> Graph:
    """C_n with edges i ~ i+1 (mod n)."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], f"cycle:{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edge_list(n, combinations(range(n), 2), f"complete:{n}")


def empty(n: int) -> Graph:
    """n isolated vertices (only useful as a product factor)."""
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return from_edge_list(n, [], f"empty:{n}")


def star(n: int) -> Graph:
    """S_n on n vertices; centre 0, leaves 1..n-1."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return from_edge_list(n, [(0, i) for i in range(1, n)], f"star:{n}")


def double_star(n1: int, n2: int) -> Graph:
    """S_{n1,n2}: stars S_n1 and S_n2 with their centres joined.

    Centres are 0 and 1, leaves of the first star are 2..n1 and leaves of
    the second are n1+1..n1+n2-1.
    """
    if n1 < 2 or n2 < 2:
        raise GraphError("double star needs n1, n2 >= 2")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(n1 - 1)]
    edges += [(1, n1 + 1 + j) for j in range(n2 - 1)]
    return from_edge_list(n1 + n2, edges, f"double_star:{n1},{n2}")


def hypercube(k: int) -> Graph:
    if k < 1:
        raise GraphError("hypercube needs k >= 1")
    n = 1 << k
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(k) if v < v ^ (1 << b)]
    return from_edge_list(n, edges, f"hypercube:{k}")


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return from_edge_list(10, edges, "petersen")


def hexagonal_prism() -> Graph:
    """C_6 x K_2: hexagons 0..5 and 6..11, rungs i ~ i+6."""
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(6 + i, 6 + (i + 1) % 6) for i in range(6)]
    edges += [(i, i + 6) for i in range(6)]
    return from_edge_list(12, edges, "hexagonal_prism")


FRUCHT_LCF = (-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2)


def lcf_graph(n: int, shifts, repeats: int = 1, name: str = "") -> Graph:
    """Hamiltonian cycle 0..n-1 plus chords given in LCF notation."""
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    shifts = list(shifts) * repeats
    for i in range(n):
        edges.add(tuple(sorted((i, (i + shifts[i % len(shifts)]) % n))))
    return from_edge_list(n, sorted(edges), name)


def frucht() -> Graph:
    return lcf_graph(12, FRUCHT_LCF, name="frucht")


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "empty": (empty, 1),
    "star": (star, 1),
    "double_star": (double_star, 2),
    "hypercube": (hypercube, 1),
    "petersen": (petersen, 0),
    "hexagonal_prism": (hexagonal_prism, 0),
    "frucht": (frucht, 0),
}

FAMILY_NAMES = tuple(_FAMILIES)


def parse_family_spec(spec: str) -> tuple[str, tuple[int, ...]]:
    name, _, rest = spec.strip().partition(":")
    name = name.strip().lower().replace("-", "_")
    if name not in _FAMILIES:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")
    try:
        params = tuple(int(p) for p in rest.split(",") if p.strip())
    except ValueError:
        raise GraphError(f"family parameters must be integers: {spec!r}") from None
    arity = _FAMILIES[name][1]
    if len(params) != arity:
        raise GraphError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return name, params


def family(spec: str) -> Graph:
    """Build a named graph from ``"name:p1,p2"`` e.g. ``"cycle:6"``, ``"double_star:3,4"``."""
    name, params = parse_family_spec(spec)
    return _FAMILIES[name][0](*params)


# ---------------------------------------------------------------------------
# metric structure
# ---------------------------------------------------------------------------

def _bfs(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    entries: np.ndarray
    diameter: int

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def antipodal_pairs(self) -> list[tuple[int, int]]:
        """Unordered pairs at distance exactly the diameter."""
        iu, ju = np.nonzero(np.triu(self.entries == self.diameter, 1))
        return list(zip(iu.tolist(), ju.tolist()))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    if g.n == 0:
        raise GraphError("graph has no vertices")
    d = np.zeros((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        dist = _bfs(g, s)
        if len(dist) != g.n:
            raise DisconnectedGraphError(f"{g!r} is disconnected")
        for v, k in dist.items():
            d[s, v] = k
    return DistanceMatrix(d, int(d.max()))


def diameter(g: Graph) -> int:
    return all_pairs_distances(g).diameter


def kth_adjacency(dm: DistanceMatrix, k: int) -> np.ndarray:
    if not 1 <= k <= dm.diameter:
        raise GraphError(f"k={k} outside 1..{dm.diameter}")
    return (dm.entries == k).astype(np.int64)


def _require_nontrivial(g: Graph) -> DistanceMatrix:
    if g.n < 2:
        raise GraphError("need at least two vertices")
    return all_pairs_distances(g)


def ad_matrix(g: Graph, dm: DistanceMatrix | None = None) -> np.ndarray:
    """A(G) + d*A_d(G); for diameter 1 this is just A(G)."""
    dm = dm or _require_nontrivial(g)
    d = dm.diameter
    a = (dm.entries == 1).astype(np.int64)
    if d == 1:
        return a
    return a + d * (dm.entries == d).astype(np.int64)


def antipodal_matrix(dm: DistanceMatrix) -> np.ndarray:
    """0/1 matrix of antipodal pairs; all zero when the diameter is 1."""
    if dm.diameter == 1:
        return np.zeros_like(dm.entries)
    return (dm.entries == dm.diameter).astype(np.int64)


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[tuple[int, int, int], ...]
    diameter: int

    def matrix(self) -> np.ndarray:
        w = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v, wt in self.edges:
            w[u, v] = w[v, u] = wt
        return w

    def underlying(self) -> Graph:
        return from_edge_list(self.n, [(u, v) for u, v, _ in self.edges])

    def weighted_degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, w in self.edges:
            deg[u] += w
            deg[v] += w
        return deg


def weighted_view(g: Graph) -> WeightedGraph:
    """The weighted graph whose weighted adjacency matrix is AD(G).

    Weight-1 edges are the edges of ``g``; weight-d edges join antipodal
    pairs.  Rejected for diameter 1, where the two relations coincide:
    use :func:`ad_matrix` there.
    """
    dm = _require_nontrivial(g)
    d = dm.diameter
    if d == 1:
        raise GraphError("diameter 1: adjacency and antipodality coincide; use ad_matrix")
    edges = [(u, v, 1) for u, v in g.edges()]
    edges += [(u, v, d) for u, v in dm.antipodal_pairs()]
    return WeightedGraph(g.n, tuple(sorted(edges)), d)


def ad_relation_graph(g: Graph, dm: DistanceMatrix | None = None) -> Graph:
    """Simple graph joining pairs that are adjacent or antipodal.

    This is the unweighted skeleton of the weighted view, and equals ``g``
    itself when the diameter is 1.
    """
    dm = dm or _require_nontrivial(g)
    return from_adjacency_matrix(ad_matrix(g, dm) != 0)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colouring of a connected graph, part containing vertex 0 first."""
    colour = {0: 0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in colour:
                colour[w] = 1 - colour[u]
                queue.append(w)
            elif colour[w] == colour[u]:
                return None
    if len(colour) != g.n:
        raise DisconnectedGraphError(f"{g!r} is disconnected")
    return (frozenset(v for v, c in colour.items() if c == 0),
            frozenset(v for v, c in colour.items() if c == 1))
