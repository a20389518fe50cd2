"""Diametrical and AD degrees, AD independence/chromatic numbers, and
checkers for the spectral bounds relating them to the AD spectrum.

Every checker returns a :class:`BoundReport`; a checker whose hypothesis
is not met either raises (when the hypothesis is the caller's job) or
returns a report with ``applicable=False`` (when the hypothesis is
decided internally).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .graph_core import (
    Graph,
    GraphError,
    ad_matrix,
    ad_relation_graph,
    all_pairs_distances,
    antipodal_matrix,
)
from .partitions import is_diametrical_bipartite
from .solvers import chromatic_number, clique_number, independence_number
from .spectra import Spectrum, eigenvalues_sym, is_distance_regular

BOUND_TOL = 1e-9
SIGN_TOL = 1e-8


@dataclass
class BoundReport:
    name: str
    left: float
    right: float
    relation: str = "<="
    applicable: bool = True
    details: dict = field(default_factory=dict)
    holds: bool = field(init=False)

    def __post_init__(self):
        if not self.applicable:
            self.holds = True
        elif self.relation == "==":
            self.holds = abs(self.left - self.right) <= BOUND_TOL * max(1.0, abs(self.right))
        else:
            self.holds = self.left <= self.right + BOUND_TOL

    @property
    def gap(self) -> float:
        return self.right - self.left

    def to_dict(self) -> dict:
        out = asdict(self)
        out["gap"] = self.gap
        return out


@dataclass(frozen=True)
class DegreeProfile:
    diameter: int
    degrees: tuple[int, ...]
    ddegrees: tuple[int, ...]      # diametrical degrees
    addegrees: tuple[int, ...]     # deg + d * ddeg

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def d_hat_sum(self) -> int:
        return sum(self.ddegrees)

    @property
    def max_ddegree(self) -> int:
        return max(self.ddegrees)

    @property
    def min_ddegree(self) -> int:
        return min(self.ddegrees)

    @property
    def max_addegree(self) -> int:
        return max(self.addegrees)

    @property
    def min_addegree(self) -> int:
        return min(self.addegrees)

    @property
    def mean_addegree(self) -> float:
        return sum(self.addegrees) / self.n

    @property
    def ad_regular(self) -> bool:
        return len(set(self.addegrees)) == 1


def degree_profile(g: Graph) -> DegreeProfile:
    """Per-vertex degrees; diameter 1 counts no diametrical neighbours."""
    dm = all_pairs_distances(g)
    d = dm.diameter
    deg = tuple(g.degrees())
    ddeg = tuple(int(x) for x in antipodal_matrix(dm).sum(axis=1))
    return DegreeProfile(d, deg, ddeg, tuple(a + d * b for a, b in zip(deg, ddeg)))


def is_ad_regular(g: Graph) -> bool:
    return degree_profile(g).ad_regular


def ad_independence_number(g: Graph) -> int:
    return independence_number(ad_relation_graph(g))


def ad_chromatic_number(g: Graph) -> int:
    return chromatic_number(ad_relation_graph(g))


def _spectrum(g: Graph) -> tuple[np.ndarray, Spectrum, float]:
    m = ad_matrix(g)
    spec = eigenvalues_sym(m)
    zero_tol = SIGN_TOL * max(1.0, float(np.abs(m).sum(axis=0).max()))
    return m, spec, zero_tol


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def trace_moment_check(g: Graph) -> tuple[BoundReport, BoundReport]:
    """Sum of eigenvalues is 0; sum of squares is 2m + d^2 * sum(ddeg).

    The second identity is checked exactly as trace(AD^2) in integers.
    """
    m, spec, _ = _spectrum(g)
    prof = degree_profile(g)
    first = BoundReport("eigenvalue-sum", abs(float(spec.values.sum())), g.n * BOUND_TOL,
                        details={"sum": float(spec.values.sum())})
    exact = int((m.astype(object) ** 2).sum())
    predicted = 2 * g.m + prof.diameter ** 2 * prof.d_hat_sum
    second = BoundReport("eigenvalue-square-sum", exact, predicted, relation="==",
                         details={"numeric": float((spec.values ** 2).sum())})
    second.holds = exact == predicted
    return first, second


def spectral_radius_bound(g: Graph) -> BoundReport:
    _, spec, _ = _spectrum(g)
    prof = degree_profile(g)
    rhs = math.sqrt((g.n - 1) / g.n * (2 * g.m + prof.diameter ** 2 * prof.d_hat_sum))
    return BoundReport("spectral-radius", spec.largest, rhs)


def bipartite_least_eig_bound(g: Graph) -> tuple[BoundReport, BoundReport]:
    """|lambda_n| <= sqrt(m + d^2 ddeg_sum / 2) for diametrical bipartite graphs.

    The literal one-sided statement (with lambda_n <= 0 on the left) is
    returned second; it holds trivially.
    """
    if not is_diametrical_bipartite(g):
        raise GraphError(f"{g!r} is not diametrical bipartite")
    _, spec, _ = _spectrum(g)
    prof = degree_profile(g)
    rhs = math.sqrt(g.m + prof.diameter ** 2 * prof.d_hat_sum / 2)
    return (BoundReport("least-eigenvalue-magnitude", abs(spec.smallest), rhs),
            BoundReport("least-eigenvalue-literal", spec.smallest, rhs))


def inertia_bound(g: Graph) -> BoundReport:
    _, spec, zt = _spectrum(g)
    n_pos = int(np.sum(spec.values > zt))
    n_neg = int(np.sum(spec.values < -zt))
    alpha = ad_independence_number(g)
    return BoundReport("inertia", alpha, min(g.n - n_pos, g.n - n_neg),
                       details={"n_plus": n_pos, "n_minus": n_neg})


def chromatic_lower_bound(g: Graph) -> BoundReport:
    if g.m == 0:
        raise GraphError("needs at least one edge")
    _, spec, _ = _spectrum(g)
    return BoundReport("chromatic-hoffman", 1 - spec.largest / spec.smallest,
                       ad_chromatic_number(g))


def planar_fourcolor_check(g: Graph, planar_assertion: bool) -> BoundReport:
    """lambda_1 <= -3 lambda_n for planar graphs with chi = chi_AD.

    Planarity is the caller's assertion.  When either hypothesis fails the
    report is marked not applicable.
    """
    _, spec, _ = _spectrum(g)
    chi, chi_ad = chromatic_number(g), ad_chromatic_number(g)
    ok = bool(planar_assertion) and chi == chi_ad
    return BoundReport("planar-four-colour", spec.largest, -3 * spec.smallest,
                       applicable=ok,
                       details={"planar": bool(planar_assertion), "chi": chi, "chi_ad": chi_ad})


def mean_degree_sandwich(g: Graph) -> BoundReport:
    """min AD degree <= mean AD degree <= lambda_1 <= max AD degree.

    ``holds`` also requires that the chain collapses to equalities exactly
    when the graph is AD-regular.
    """
    _, spec, _ = _spectrum(g)
    prof = degree_profile(g)
    lo, mean, lam, hi = prof.min_addegree, prof.mean_addegree, spec.largest, prof.max_addegree
    chain = lo <= mean + BOUND_TOL and mean <= lam + BOUND_TOL and lam <= hi + BOUND_TOL
    tight = max(lo, mean, lam, hi) - min(lo, mean, lam, hi) <= 1e-8 * max(1.0, hi)
    rep = BoundReport("mean-degree-sandwich", mean, lam,
                      details={"min_ad_degree": lo, "mean_ad_degree": mean, "lambda_1": lam,
                               "max_ad_degree": hi, "ad_regular": prof.ad_regular,
                               "all_equal": tight})
    rep.holds = chain and (tight == prof.ad_regular)
    return rep


def ad_regular_eigenvector_check(g: Graph) -> BoundReport:
    """AD-regular iff the all-ones vector is an eigenvector of AD(G)."""
    m = ad_matrix(g).astype(float)
    ones = np.ones(g.n)
    y = m @ ones
    r = y.mean()
    residual = float(np.linalg.norm(y - r * ones))
    eig = residual <= 1e-8 * max(1.0, float(np.linalg.norm(m)))
    reg = is_ad_regular(g)
    rep = BoundReport("ad-regular-eigenvector", float(eig), float(reg), relation="==",
                      details={"residual": residual, "row_sum": float(r)})
    return rep


def induced_subgraph_bound(g: Graph, subset) -> BoundReport:
    """n1 (r - lambda_n) / n + lambda_n <= mean AD degree of the subset.

    The subset's mean AD degree uses the AD weights of ``g`` restricted to
    the subset; antipodality is not recomputed inside the subgraph.
    """
    prof = degree_profile(g)
    if not prof.ad_regular:
        raise GraphError(f"{g!r} is not AD-regular")
    idx = sorted(set(int(v) for v in subset))
    if not idx:
        raise GraphError("subset must be nonempty")
    m, spec, _ = _spectrum(g)
    r, lam_n, n1 = prof.addegrees[0], spec.smallest, len(idx)
    mean_h = float(m[np.ix_(idx, idx)].sum()) / n1
    return BoundReport("induced-subgraph", n1 * (r - lam_n) / g.n + lam_n, mean_h,
                       details={"subset": idx, "r": r})


def regular_independence_bound(g: Graph) -> BoundReport:
    prof = degree_profile(g)
    if not prof.ad_regular:
        raise GraphError(f"{g!r} is not AD-regular")
    _, spec, _ = _spectrum(g)
    lam1, lamn = spec.largest, spec.smallest
    return BoundReport("ratio-independence", ad_independence_number(g),
                       g.n * (-lamn) / (lam1 - lamn))


def clique_bound(g: Graph) -> BoundReport:
    """omega(G) <= min(t0 + t- + 1, t0 + t+, floor(1 + lambda_1)).

    t-, t0, t+ count eigenvalues of AD(G) below, at, and above -1.  The
    sharpened bound omega <= m - 1 (when m = t0 + t- + 1 and more than
    t0 + t- eigenvalues exceed -1) is evaluated and recorded in
    ``details`` as a separate verdict.
    """
    _, spec, zt = _spectrum(g)
    v = spec.values
    t_minus = int(np.sum(v < -1 - zt))
    t_zero = int(np.sum(np.abs(v + 1) <= zt))
    t_plus = int(np.sum(v > -1 + zt))
    cap = math.floor(1 + spec.largest + zt)
    m = min(t_zero + t_minus + 1, t_zero + t_plus, cap)
    omega = clique_number(g)
    sharpened = m == t_zero + t_minus + 1 and t_plus > t_zero + t_minus
    details = {"t_minus": t_minus, "t_zero": t_zero, "t_plus": t_plus, "m": m,
               "omega": omega, "sharpened_applies": sharpened}
    if sharpened:
        details["sharpened_holds"] = omega <= m - 1
    return BoundReport("clique", omega, m, details=details)


# ---------------------------------------------------------------------------
# summary
# ---------------------------------------------------------------------------

def all_bounds(g: Graph, planar_assertion: bool | None = None) -> list[BoundReport]:
    """Every bound whose hypotheses can be checked for ``g``.

    Exact-solver-backed checks are skipped above their size caps.
    """
    from .solvers import ALPHA_CAP, CHROMATIC_CAP, CLIQUE_CAP

    out: list[BoundReport] = []
    out.extend(trace_moment_check(g))
    out.append(spectral_radius_bound(g))
    if is_diametrical_bipartite(g):
        out.extend(bipartite_least_eig_bound(g))
    if g.n <= ALPHA_CAP:
        out.append(inertia_bound(g))
    if g.n <= CHROMATIC_CAP and g.m:
        out.append(chromatic_lower_bound(g))
        if planar_assertion is not None:
            out.append(planar_fourcolor_check(g, planar_assertion))
    out.append(ad_regular_eigenvector_check(g))
    out.append(mean_degree_sandwich(g))
    if is_ad_regular(g):
        out.append(induced_subgraph_bound(g, range(g.n)))
        if g.n <= ALPHA_CAP:
            out.append(regular_independence_bound(g))
    if g.n <= CLIQUE_CAP:
        out.append(clique_bound(g))
    return out


def invariants_summary(g: Graph, planar_assertion: bool | None = None) -> dict:
    from .solvers import ALPHA_CAP, CHROMATIC_CAP

    prof = degree_profile(g)
    return {
        "name": g.name,
        "n": g.n,
        "m": g.m,
        "diameter": prof.diameter,
        "degrees": list(prof.degrees),
        "ddegrees": list(prof.ddegrees),
        "addegrees": list(prof.addegrees),
        "d_hat_sum": prof.d_hat_sum,
        "ad_regular": prof.ad_regular,
        "distance_regular": is_distance_regular(g) is not None,
        "alpha_ad": ad_independence_number(g) if g.n <= ALPHA_CAP else None,
        "chi_ad": ad_chromatic_number(g) if g.n <= CHROMATIC_CAP else None,
        "bounds": [b.to_dict() for b in all_bounds(g, planar_assertion)],
    }
