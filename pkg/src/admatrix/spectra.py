"""Numeric spectra, exact characteristic polynomials and closed forms.

Exact polynomials are computed with the Berkowitz algorithm over Python
integers, so coefficients never overflow and no division happens.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph_core import (
    Graph,
    GraphError,
    all_pairs_distances,
    ad_matrix,
    kth_adjacency,
)

DEFAULT_TOL = 1e-9


# ---------------------------------------------------------------------------
# Spectrum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalue multiset, sorted in descending order."""

    values: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        vals = np.sort(np.asarray(self.values, dtype=float))[::-1]
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    @property
    def largest(self) -> float:
        return float(self.values[0])

    @property
    def smallest(self) -> float:
        return float(self.values[-1])

    def max_mismatch(self, other: "Spectrum") -> float:
        """Largest pairwise gap after sorting; ``inf`` when sizes differ.

        For real multisets sorted matching is the optimal matching, so this
        is the bottleneck distance between the two.
        """
        if len(self) != len(other):
            return math.inf
        if len(self) == 0:
            return 0.0
        return float(np.max(np.abs(self.values - other.values)))

    def matches(self, other: "Spectrum", tol: float | None = None) -> bool:
        return self.max_mismatch(other) <= (self.tol if tol is None else tol)

    def negated(self) -> "Spectrum":
        return Spectrum(-self.values, self.tol)

    def is_symmetric(self, tol: float = 1e-8) -> bool:
        return self.matches(self.negated(), tol)

    def tolist(self) -> list[float]:
        return self.values.tolist()


def _check_symmetric(m) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not symmetric")
    return m


def eigh_sym(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric matrix."""
    m = _check_symmetric(m)
    return np.linalg.eigh(m.astype(float))


def eigenvalues_sym(m, tol: float = DEFAULT_TOL) -> Spectrum:
    m = _check_symmetric(m)
    return Spectrum(np.linalg.eigvalsh(m.astype(float)), tol)


def ad_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_sym(ad_matrix(g))


# ---------------------------------------------------------------------------
# exact characteristic polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial ``x^n + c1 x^(n-1) + ... + cn``.

    ``coeffs[k]`` is ``c_k`` (``coeffs[0] == 1``), i.e. highest degree first.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    @property
    def determinant(self) -> int:
        """det(M) for the matrix M whose polynomial this is."""
        return (-1) ** self.degree * self.coeffs[-1]

    def odd_coefficients(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self.coeffs) if k % 2 == 1}

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "CharPoly":
        return cls(tuple(int(c) for c in data))

    def __str__(self) -> str:
        n = self.degree
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = n - k
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}{mono}" if mono else str(mag))
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    """Add highest-first coefficient lists of possibly different length."""
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    off = len(p) - len(q)
    for i, c in enumerate(q):
        out[off + i] += c
    return out


def _poly_scale(p: list[int], s: int) -> list[int]:
    return [s * c for c in p]


def _poly_shift(p: list[int], k: int = 1) -> list[int]:
    """Multiply by x^k."""
    return list(p) + [0] * k


def berkowitz(m) -> CharPoly:
    """det(xI - M) for an integer matrix via Berkowitz's division-free recursion.

    At step r the leading r x r block is bordered by row R, column S and
    corner a; the new polynomial is the lower-triangular Toeplitz matrix
    with first column (1, -a, -RS, -RAS, ..., -RA^(r-2)S) applied to the
    previous one.
    """
    a = [[int(x) for x in row] for row in np.asarray(m).tolist()]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    poly = [1]
    for r in range(n):
        corner = a[r][r]
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        toeplitz = [1, -corner]
        vec = col
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(r)) for i in range(r)]
        new = []
        for i in range(r + 2):
            new.append(sum(toeplitz[i - j] * poly[j] for j in range(min(i, r) + 1) if i - j < len(toeplitz)))
        poly = new
    return CharPoly(tuple(poly))


def char_poly_exact(m) -> CharPoly:
    return berkowitz(m)


def determinant_exact(m) -> int:
    return char_poly_exact(m).determinant


def ad_charpoly(g: Graph) -> CharPoly:
    return char_poly_exact(ad_matrix(g))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def chebyshev_phi(n: int) -> CharPoly:
    """Characteristic polynomial of A(P_n): phi_n = x phi_{n-1} - phi_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = [1], [1, 0]
    if n == 0:
        return CharPoly((1,))
    for _ in range(n - 1):
        prev, cur = cur, _poly_add(_poly_shift(cur), _poly_scale(prev, -1))
    return CharPoly(tuple(cur))


def path_charpoly_closed(n: int) -> CharPoly:
    """phi_n - (n-1)^2 phi_{n-2} + 2(1-n), the AD polynomial of P_n for n >= 3."""
    if n < 3:
        raise ValueError("closed form needs n >= 3; AD(P_2) has polynomial x^2 - 1")
    p = _poly_add(list(chebyshev_phi(n).coeffs),
                  _poly_scale(list(chebyshev_phi(n - 2).coeffs), -(n - 1) ** 2))
    p[-1] += 2 * (1 - n)
    return CharPoly(tuple(p))


def cycle_spectrum_closed(n: int, tol: float = DEFAULT_TOL) -> Spectrum:
    """AD spectrum of C_n, k = 1..n, from the circulant eigenvalue formula.

    Rejects n = 3: C_3 = K_3 has diameter 1, where AD is the plain
    adjacency matrix and the circulant formula does not apply.
    """
    if n <= 3:
        raise ValueError(
            f"n={n}: need n >= 4 (C_3 has diameter 1, so AD(C_3) = A(C_3) and the "
            "formula, which would put weight d on the same pairs again, does not apply)"
        )
    k = np.arange(1, n + 1)
    base = 2 * np.cos(2 * np.pi * k / n)
    if n % 2 == 0:
        vals = base + (n / 2) * np.cos(np.pi * k)
    else:
        vals = base + (n - 1) * np.cos(np.pi * k) * np.cos(np.pi * k / n)
    return Spectrum(vals, tol)


def double_star_charpoly_closed(n1: int, n2: int) -> CharPoly:
    """x^(n1+n2-4) (x^4 - (9n1n2 - 8n1 - 8n2 + 8) x^2 + 4(n1-1)(n2-1))."""
    if n1 < 2 or n2 < 2:
        raise ValueError("double star needs n1, n2 >= 2")
    quartic = [1, 0, -(9 * n1 * n2 - 8 * n1 - 8 * n2 + 8), 0,
               4 * (n1 * n2 - n1 - n2 + 1)]
    return CharPoly(tuple(_poly_shift(quartic, n1 + n2 - 4)))


# ---------------------------------------------------------------------------
# distance-regular graphs and co-eigenvalues
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]  # b_0 .. b_{d-1}
    c: tuple[int, ...]  # c_1 .. c_d

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


def is_distance_regular(g: Graph) -> IntersectionArray | None:
    """Intersection array when ``g`` is distance-regular, else ``None``.

    For every pair (u, v) at distance i, counts the neighbours of v at
    distance i+1 (b_i) and i-1 (c_i) from u, and requires the counts to
    depend on i alone.
    """
    dm = all_pairs_distances(g)
    d, D = dm.diameter, dm.entries
    if not g.is_regular():
        return None
    b: dict[int, int] = {}
    c: dict[int, int] = {}
    for u in range(g.n):
        for v in range(g.n):
            i = int(D[u, v])
            nb = D[u, list(g.adjacency[v])]
            bi = int(np.sum(nb == i + 1))
            ci = int(np.sum(nb == i - 1))
            if i < d and b.setdefault(i, bi) != bi:
                return None
            if i > 0 and c.setdefault(i, ci) != ci:
                return None
    return IntersectionArray(tuple(b[i] for i in range(d)), tuple(c[i] for i in range(1, d + 1)))


@dataclass(frozen=True)
class CoEigenPair:
    lam: float      # eigenvalue of A(G)
    gamma: float    # eigenvalue of A_d(G) on the same vector
    vector: np.ndarray


def co_eigenpairs(g: Graph, *, allow_diameter_one: bool = False) -> list[CoEigenPair]:
    """Paired eigenvalues of A(G) and A_d(G) on a common eigenbasis.

    Uses the eigenvectors of A(G) and Rayleigh quotients of A_d(G).  This
    is valid because for distance-regular graphs A_d is a polynomial in A,
    so every eigenvector of A is one of A_d; the residual is checked.

    Diameter-1 graphs are rejected unless ``allow_diameter_one`` is set,
    in which case A_1 = A and gamma = lambda.
    """
    if is_distance_regular(g) is None:
        raise GraphError(f"{g!r} is not distance-regular")
    dm = all_pairs_distances(g)
    if dm.diameter == 1 and not allow_diameter_one:
        raise GraphError("co-eigenpairs need diameter >= 2")
    a = kth_adjacency(dm, 1).astype(float)
    ad = kth_adjacency(dm, dm.diameter).astype(float)
    lams, vecs = np.linalg.eigh(a)
    scale = max(1.0, float(np.linalg.norm(ad, 2)))
    out = []
    for lam, x in zip(lams, vecs.T):
        y = ad @ x
        gamma = float(x @ y)
        if np.linalg.norm(y - gamma * x) > 1e-7 * scale:
            raise ArithmeticError("eigenvector of A is not an eigenvector of A_d")
        out.append(CoEigenPair(float(lam), gamma, x))
    return out
