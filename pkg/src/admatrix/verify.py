"""Population sweeps that check each identity, closed form and bound.

A population spec is a ``+``-separated list of terms:

    exhaustive:7          all connected graphs with 2..7 vertices
    exhaustive:4..6       ... with 4..6 vertices
    random:500:12         500 random connected graphs, 2..12 vertices
    cycle:4..24           a family swept over a parameter range
    double_star:2..6,2..6 ranges in several parameters
    petersen              a single family member
    file:graph.edges      an edge-list file
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from . import invariants as inv
from . import partitions as part
from . import products as prod
from .enumeration import exhaustive_population, random_population
from .graph_core import (
    Graph,
    GraphError,
    ad_matrix,
    complete,
    cycle,
    empty,
    family,
    hypercube,
    parse_family_spec,
    path,
    read_edge_list,
    weighted_view,
)
from .solvers import ALPHA_CAP, CHROMATIC_CAP, CLIQUE_CAP, chromatic_number, independence_number
from .spectra import (
    CharPoly,
    ad_charpoly,
    ad_spectrum,
    cycle_spectrum_closed,
    determinant_exact,
    double_star_charpoly_closed,
    path_charpoly_closed,
)

DEFAULT_SEED = 20240917


class Skip(Exception):
    """The instance falls outside the check's hypotheses."""


@dataclass
class VerifyReport:
    theorem: str
    population: str
    seed: int | None = None
    instances: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        out = dict(self.__dict__)
        out["passed"] = self.passed
        return out

    def summary(self) -> str:
        verdict = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return (f"{self.theorem}: {verdict} - {self.instances} checked, {self.skipped} skipped, "
                f"{self.wall_time:.2f}s [{self.population}]")


def _serialize(g: Graph) -> dict:
    return {"name": g.name, "n": g.n, "edges": g.edges()}


# ---------------------------------------------------------------------------
# populations
# ---------------------------------------------------------------------------

def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    return range(int(lo), int(hi) + 1) if sep else range(int(lo), int(lo) + 1)


def resolve_population(spec: str, seed: int = DEFAULT_SEED) -> list[Graph]:
    graphs: list[Graph] = []
    for term in (t.strip() for t in spec.split("+")):
        if not term:
            continue
        head, _, rest = term.partition(":")
        head = head.lower()
        if head == "exhaustive":
            r = _int_range(rest)
            graphs += exhaustive_population(r.stop - 1, max(2, r.start) if ".." in rest else 2)
        elif head == "random":
            count, _, max_n = rest.partition(":")
            graphs += random_population(int(count), int(max_n or 10), seed)
        elif head == "file":
            graphs.append(read_edge_list(rest))
        elif ".." in rest:
            ranges = [_int_range(p) for p in rest.split(",")]
            for params in itertools.product(*ranges):
                graphs.append(family(f"{head}:{','.join(map(str, params))}"))
        else:
            graphs.append(family(term))
    return graphs


# ---------------------------------------------------------------------------
# per-graph checks: return None on success, a reason string on failure,
# or raise Skip when the hypotheses are not met.
# ---------------------------------------------------------------------------

def check_path_charpoly(g: Graph):
    name, params = parse_family_spec(g.name)
    if name != "path":
        raise Skip
    n = params[0]
    exact = ad_charpoly(g)
    closed = CharPoly((1, 0, -1)) if n == 2 else path_charpoly_closed(n)
    if exact != closed:
        return f"closed {closed} != exact {exact}"


def check_cycle_spectrum(g: Graph):
    name, params = parse_family_spec(g.name)
    if name != "cycle":
        raise Skip
    n = params[0]
    if n == 3:
        try:
            cycle_spectrum_closed(3)
        except ValueError:
            return None
        return "n=3 accepted by the closed form"
    closed, numeric = cycle_spectrum_closed(n), ad_spectrum(g)
    gap = closed.max_mismatch(numeric)
    if gap > 1e-9:
        return f"max mismatch {gap:.3e}"


def check_double_star(g: Graph):
    name, params = parse_family_spec(g.name)
    if name != "double_star":
        raise Skip
    exact, closed = ad_charpoly(g), double_star_charpoly_closed(*params)
    if exact != closed:
        return f"closed {closed} != exact {exact}"


def check_determinant(g: Graph):
    if g.n > part.ENUMERATION_CAP:
        raise Skip
    a, b = determinant_exact(ad_matrix(g)), part.det_via_partitions(g)
    if a != b:
        return f"Berkowitz {a} != partitions {b}"


def check_coefficients(g: Graph):
    if g.n > part.ENUMERATION_CAP:
        raise Skip
    exact = ad_charpoly(g)
    for k in range(g.n + 1):
        if part.charpoly_coeff_via_partitions(g, k) != exact[k]:
            return f"c_{k}: partitions disagree with exact {exact[k]}"
    if part.c2_closed(g) != exact[2]:
        return f"c_2 closed {part.c2_closed(g)} != {exact[2]}"
    if g.n >= 3 and part.c3_closed(g) != exact[3]:
        return f"c_3 closed {part.c3_closed(g)} != {exact[3]}"


def _has_odd_ad_cycle(g: Graph) -> bool:
    return any(len(c) % 2 for c in part.ad_cycles(g))


def _weighted_view_bipartite(g: Graph) -> bool:
    from .graph_core import bipartition

    if g.n == 2:
        return True
    try:
        skeleton = weighted_view(g).underlying()
    except GraphError:          # diameter 1: the view is the graph itself
        skeleton = g
    return bipartition(skeleton) is not None


def check_diametrical_bipartite(g: Graph):
    if g.n > part.ENUMERATION_CAP:
        raise Skip
    a = part.is_diametrical_bipartite(g)
    b = _weighted_view_bipartite(g)
    c = not _has_odd_ad_cycle(g)
    if not a == b == c:
        return f"diametrical-bipartite={a}, view-bipartite={b}, all-cycles-even={c}"


def check_odd_coefficients(g: Graph):
    a = part.is_diametrical_bipartite(g)
    cp = ad_charpoly(g)
    b = all(c == 0 for c in cp.odd_coefficients().values())
    c = ad_spectrum(g).is_symmetric(1e-8)
    if not a == b == c:
        return f"diametrical-bipartite={a}, odd-coefficients-vanish={b}, symmetric-spectrum={c}"


def _odd_cycle_check(g: Graph, weighted: bool):
    if g.n > part.ENUMERATION_CAP:
        raise Skip
    res = part.odd_ad_cycle_count_from_coeffs(ad_charpoly(g))
    if res is None:
        if _has_odd_ad_cycle(g):
            return "odd coefficients vanish but an odd AD-cycle exists"
        return None
    k, value = res
    for length in range(3, 2 * k + 1, 2):
        if length <= g.n and part.enumerate_ad_cycles(g, length):
            return f"c_3..c_{2 * k - 1} vanish but AD-cycles of length {length} exist"
    length = 2 * k + 1
    direct = (part.weighted_ad_cycle_sum if weighted else part.enumerate_ad_cycles)(g, length)
    if direct != value:
        what = "weighted cycle sum" if weighted else "cycle count"
        return f"length {length}: -c/2 = {value} but direct {what} = {direct}"


def check_odd_cycle_count(g: Graph):
    return _odd_cycle_check(g, weighted=False)


def check_odd_cycle_weighted(g: Graph):
    return _odd_cycle_check(g, weighted=True)


def _report_failure(reports):
    bad = [r for r in reports if not r.holds]
    if bad:
        return "; ".join(f"{r.name}: {r.left} vs {r.right}" for r in bad)


def check_trace_moments(g: Graph):
    return _report_failure(inv.trace_moment_check(g))


def check_spectral_radius(g: Graph):
    return _report_failure([inv.spectral_radius_bound(g)])


def check_least_eigenvalue(g: Graph):
    if not part.is_diametrical_bipartite(g):
        raise Skip
    return _report_failure(inv.bipartite_least_eig_bound(g))


def check_inertia(g: Graph):
    if g.n > ALPHA_CAP:
        raise Skip
    return _report_failure([inv.inertia_bound(g)])


def check_chromatic(g: Graph):
    if g.n > CHROMATIC_CAP or g.m == 0:
        raise Skip
    rep = inv.chromatic_lower_bound(g)
    fail = _report_failure([rep])
    if fail:
        return fail
    if chromatic_number(g) > rep.right:
        return "chi > chi_AD"


def check_planar(g: Graph):
    import networkx as nx

    if g.n > CHROMATIC_CAP or g.m == 0:
        raise Skip
    planar, _ = nx.check_planarity(nx.Graph(g.edges()))
    rep = inv.planar_fourcolor_check(g, planar)
    if not rep.applicable:
        raise Skip
    return _report_failure([rep])


def check_ad_regular_eigenvector(g: Graph):
    return _report_failure([inv.ad_regular_eigenvector_check(g)])


def check_mean_degree(g: Graph):
    return _report_failure([inv.mean_degree_sandwich(g)])


def check_induced_subgraph(g: Graph):
    if not inv.is_ad_regular(g):
        raise Skip
    reports = []
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            reports.append(inv.induced_subgraph_bound(g, subset))
    return _report_failure(reports)


def check_ratio_independence(g: Graph):
    if not inv.is_ad_regular(g) or g.n > ALPHA_CAP:
        raise Skip
    rep = inv.regular_independence_bound(g)
    fail = _report_failure([rep])
    if fail:
        return fail
    if inv.ad_independence_number(g) > independence_number(g):
        return "alpha_AD > alpha"


def check_clique(g: Graph):
    if g.n > CLIQUE_CAP:
        raise Skip
    return _report_failure([inv.clique_bound(g)])


def check_clique_sharpened(g: Graph):
    if g.n > CLIQUE_CAP:
        raise Skip
    det = inv.clique_bound(g).details
    if not det["sharpened_applies"]:
        raise Skip
    if not det["sharpened_holds"]:
        return f"omega={det['omega']} but sharpened bound gives {det['m'] - 1}"


# ---------------------------------------------------------------------------
# product populations
# ---------------------------------------------------------------------------

def lex_pairs() -> list[tuple[Graph, Graph]]:
    gs = [path(4), path(5), cycle(5), cycle(6), cycle(4), path(3), complete(3)]
    hs = [complete(2), complete(3), empty(2), cycle(4)]
    out = []
    for g, h in itertools.product(gs, hs):
        if g.name == "complete:3" and h.name.startswith("complete"):
            continue  # complete product, no closed form
        out.append((g, h))
    return out


def cartesian_pairs() -> list[tuple[Graph, Graph]]:
    c4, c6, q3, k2 = cycle(4), cycle(6), hypercube(3), complete(2)
    return [(c4, c4), (c6, c6), (q3, k2), (k2, q3), (q3, c4), (q3, q3),
            (cycle(5), k2), (cycle(5), cycle(5)), (complete(4), cycle(6)), (hypercube(2), hypercube(3))]


def _run_pairs(kind: str, pairs, name: str) -> VerifyReport:
    report = VerifyReport(name, f"{len(pairs)} documented {kind} factor pairs")
    t0 = time.perf_counter()
    for g, h in pairs:
        report.instances += 1
        try:
            rep = prod.product_report(kind, g, h, check=True)
        except GraphError as exc:
            report.failures.append({"graph": f"{g.name} / {h.name}", "reason": str(exc)})
            continue
        if not rep.match:
            report.failures.append({"graph": f"{g.name} / {h.name}",
                                    "reason": rep.validation or f"mismatch {rep.max_mismatch}",
                                    "case": rep.case})
    report.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

BOUND_POPULATION = "exhaustive:7+random:500:12"

SUITES: dict[str, tuple] = {
    # name: (check, default population, numeric alias)
    "path-charpoly": (check_path_charpoly, "path:2..15", "2.1"),
    "cycle-spectrum": (check_cycle_spectrum, "cycle:3..24", "2.2"),
    "double-star": (check_double_star, "double_star:2..6,2..6", "2.3"),
    "determinant": (check_determinant, "exhaustive:7+random:50:9", "5.1"),
    "diametrical-bipartite": (check_diametrical_bipartite, "exhaustive:7", "5.2"),
    "coefficients": (check_coefficients, "exhaustive:6+random:100:8", "5.3"),
    "odd-coefficients": (check_odd_coefficients, "exhaustive:7", "5.4"),
    "odd-cycle-count": (check_odd_cycle_count, "exhaustive:7", "cor5.1"),
    "odd-cycle-weighted": (check_odd_cycle_weighted, "exhaustive:7", None),
    "trace-moments": (check_trace_moments, BOUND_POPULATION, "6.1"),
    "spectral-radius": (check_spectral_radius, BOUND_POPULATION, "6.2"),
    "least-eigenvalue": (check_least_eigenvalue, BOUND_POPULATION, "6.3"),
    "inertia": (check_inertia, BOUND_POPULATION, "6.4"),
    "chromatic": (check_chromatic, BOUND_POPULATION, "6.5"),
    "planar": (check_planar, BOUND_POPULATION, "cor6.1"),
    "ad-regular-eigenvector": (check_ad_regular_eigenvector, BOUND_POPULATION, "6.6"),
    "mean-degree": (check_mean_degree, BOUND_POPULATION, "6.7"),
    "induced-subgraph": (check_induced_subgraph, BOUND_POPULATION, "6.8"),
    "ratio-independence": (check_ratio_independence, BOUND_POPULATION, "6.9"),
    "clique": (check_clique, BOUND_POPULATION, None),
    "clique-sharpened": (check_clique_sharpened, BOUND_POPULATION, None),
    "lex": (None, None, None),
    "cartesian": (None, None, None),
}

ALIASES = {alias: name for name, (_, _, alias) in SUITES.items() if alias}


def suite_name(theorem: str) -> str:
    key = theorem.strip().lower()
    key = ALIASES.get(key, key)
    if key not in SUITES:
        known = sorted(SUITES) + sorted(ALIASES)
        raise KeyError(f"unknown theorem id {theorem!r}; known: {', '.join(known)}")
    return key


def run_suite(theorem: str, population: str | list[Graph] | None = None,
              seed: int = DEFAULT_SEED) -> VerifyReport:
    name = suite_name(theorem)
    if name == "lex":
        if population is not None:
            raise ValueError("the lex suite runs on its documented factor pairs only")
        return _run_pairs("lex", lex_pairs(), name)
    if name == "cartesian":
        if population is not None:
            raise ValueError("the cartesian suite runs on its documented factor pairs only")
        return _run_pairs("cartesian", cartesian_pairs(), name)
    check, default, _ = SUITES[name]
    if population is None:
        population = default
    if isinstance(population, str):
        label, graphs = population, resolve_population(population, seed)
    else:
        label, graphs = f"{len(population)} supplied graphs", list(population)
    report = VerifyReport(name, label, seed=seed)
    t0 = time.perf_counter()
    for g in graphs:
        try:
            reason = check(g)
        except Skip:
            report.skipped += 1
            continue
        except (GraphError, ValueError, ArithmeticError, AssertionError) as exc:
            reason = f"{type(exc).__name__}: {exc}"
        report.instances += 1
        if reason:
            report.failures.append({**_serialize(g), "reason": reason})
    report.wall_time = time.perf_counter() - t0
    return report


def known_suites() -> list[str]:
    return list(SUITES)


def spectrum_report(g: Graph) -> dict:
    """Small helper shared by the CLI: exact polynomial and numeric spectrum."""
    cp = ad_charpoly(g)
    spec = ad_spectrum(g)
    return {"charpoly": cp.to_json(), "spectrum": spec.tolist(),
            "determinant": str(cp.determinant), "trace_square": int(np.trace(
                ad_matrix(g).astype(object) @ ad_matrix(g).astype(object)))}
