"""Two-distance spherical representations of strongly regular graphs.

The exact description of the point set is its Gram matrix
``I + p*A + q*(J - I - A)``; coordinates are a floating-point convenience.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Literal

import numpy as np

from .errors import (
    DegenerateDenominator,
    EqualInnerProducts,
    IdentityViolated,
    IrrationalEigenvalue,
    ParameterMismatch,
    RealizationError,
    SizeBudgetExceeded,
)
from .graph import Graph, verify_srg
from .params import SrgParams, spectrum

Side = Literal["f", "g"]

EXACT_RANK_LIMIT = 2000
# both primes exceed 2**30 and stay below 2**31 so products fit in int64
RANK_PRIMES = (2147483647, 1073741827)


@dataclass(frozen=True)
class TwoDistanceRep:
    params: SrgParams
    side: Side
    p: Fraction
    q: Fraction
    beta: Fraction
    dim: int

    @property
    def eigenvalue(self) -> Fraction:
        """The eigenvalue whose eigenspace is projected away (s for the f-side)."""
        spec = spectrum(self.params)
        return (spec.s if self.side == "f" else spec.r).as_fraction()


def rep_parameters(params: SrgParams, side: Side = "f") -> TwoDistanceRep:
    if side not in ("f", "g"):
        raise ValueError(f"side must be 'f' or 'g', got {side!r}")
    spec = spectrum(params)
    if not spec.integral:
        raise IrrationalEigenvalue(f"{params} is a conference graph with eigenvalues {spec.r}, {spec.s}")
    v, k, lam, mu = params
    theta = (spec.s if side == "f" else spec.r).as_fraction()
    beta = Fraction(theta * theta + k + k * (lam - 2 * theta) + (v - k - 1) * mu, v)
    denom = theta * theta + k - beta
    if denom == 0:
        raise DegenerateDenominator(f"s^2 + k - beta vanishes for {params}")
    p = (lam - 2 * theta - beta) / denom
    q = (mu - beta) / denom
    return TwoDistanceRep(params, side, p, q, beta, spec.f if side == "f" else spec.g)


# ---------------------------------------------------------------------------
# Gram matrix and exact rank
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GramMatrix:
    n: int
    entries: np.ndarray  # object dtype, Fraction entries

    def offdiagonal_values(self) -> set[Fraction]:
        mask = ~np.eye(self.n, dtype=bool)
        return set(self.entries[mask].tolist())

    def integer_form(self) -> tuple[np.ndarray, int]:
        """Return ``(M, d)`` with ``M = d * G`` an integer object array."""
        d = 1
        for x in set(self.entries.ravel().tolist()):
            d = math.lcm(d, Fraction(x).denominator)
        m = np.empty((self.n, self.n), dtype=object)
        for i in range(self.n):
            for j in range(self.n):
                x = Fraction(self.entries[i, j])
                m[i, j] = x.numerator * (d // x.denominator)
        return m, d

    def to_float(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)


def _check_matches(graph: Graph, params: SrgParams) -> None:
    found = verify_srg(graph).params
    if found != params:
        raise ParameterMismatch(f"graph has parameters {found}, representation expects {params}")


def gram_from_inner_products(adjacency: np.ndarray, p, q) -> GramMatrix:
    """``I + p*A + q*(J - I - A)`` with exact rational entries."""
    a = np.asarray(adjacency)
    n = a.shape[0]
    p, q = Fraction(p), Fraction(q)
    table = np.array([q, p], dtype=object)
    g = table[a.astype(np.intp)]
    g[np.diag_indices(n)] = Fraction(1)
    return GramMatrix(n, g)


def gram_matrix(graph: Graph, rep: TwoDistanceRep) -> GramMatrix:
    _check_matches(graph, rep.params)
    return gram_from_inner_products(graph.to_numpy(), rep.p, rep.q)


def bareiss_rank(matrix: np.ndarray) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = np.array(matrix, dtype=object)
    if m.ndim != 2 or m.size == 0:
        return 0
    rows, cols = m.shape
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c] != 0)
        if nz.size == 0:
            continue
        piv_row = r + int(nz[0])
        if piv_row != r:
            m[[r, piv_row]] = m[[piv_row, r]]
        piv = m[r, c]
        if r + 1 < rows:
            lower = m[r + 1:, c + 1:]
            lower *= piv
            lower -= np.outer(m[r + 1:, c], m[r, c + 1:])
            lower //= prev
            m[r + 1:, c] = 0
        prev = piv
        r += 1
    return r


def modular_rank(matrix: np.ndarray, prime: int) -> int:
    """Rank over GF(prime); a lower bound for the rational rank."""
    if prime >= 1 << 31:
        raise ValueError("prime must be below 2**31")
    m = np.array([[int(x) % prime for x in row] for row in np.asarray(matrix, dtype=object)], dtype=np.int64)
    if m.size == 0:
        return 0
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv_row = r + int(nz[0])
        if piv_row != r:
            m[[r, piv_row]] = m[[piv_row, r]]
        inv = pow(int(m[r, c]), -1, prime)
        m[r] = (m[r] * inv) % prime
        if r + 1 < rows:
            factors = m[r + 1:, c].copy()
            m[r + 1:] = (m[r + 1:] - (np.outer(factors, m[r]) % prime)) % prime
        r += 1
    return r


def gram_rank(gram: GramMatrix, method: Literal["exact", "modular", "both"] = "exact") -> int:
    """Exact rank over the rationals.

    ``method="modular"`` takes the larger of two mod-p ranks (a lower bound that
    is exact unless both primes divide every maximal nonzero minor);
    ``"both"`` runs the exact path and raises if the modular ranks disagree.
    """
    if gram.n > EXACT_RANK_LIMIT:
        raise SizeBudgetExceeded(f"n={gram.n} exceeds the exact elimination budget of {EXACT_RANK_LIMIT}")
    m, _ = gram.integer_form()
    if method == "modular":
        return max(modular_rank(m, p) for p in RANK_PRIMES)
    exact = bareiss_rank(m)
    if method == "both":
        mod = max(modular_rank(m, p) for p in RANK_PRIMES)
        if mod != exact:
            raise ArithmeticError(f"modular rank {mod} disagrees with exact rank {exact}")
    return exact


# ---------------------------------------------------------------------------
# spectral identities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityReport:
    params: SrgParams
    side: Side
    checks: tuple[tuple[str, Fraction, Fraction], ...]

    @property
    def ok(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.checks)


def spectral_identity_check(params: SrgParams, rep: TwoDistanceRep) -> IdentityReport:
    """Check the eigenvalues of ``I + pA + q(J-I-A)`` exactly, without building it.

    On the all-ones vector and on the projected-away eigenspace the Gram matrix
    must vanish; on the kept eigenspace it equals ``v / dim``.
    """
    if rep.params != params:
        raise ParameterMismatch(f"representation built for {rep.params}, not {params}")
    spec = spectrum(params)
    if not spec.integral:
        raise IrrationalEigenvalue(f"{params} has irrational eigenvalues")
    v, k, _, _ = params
    r, s = spec.r.as_fraction(), spec.s.as_fraction()
    zeroed, kept = (s, r) if rep.side == "f" else (r, s)
    p, q = rep.p, rep.q

    def on_eigenvalue(theta):
        return 1 + p * theta - q * (1 + theta)

    checks = (
        ("centering: 1 + p*k + q*(v-1-k)", 1 + p * k + q * (v - 1 - k), Fraction(0)),
        (f"vanishing eigenspace theta={zeroed}", on_eigenvalue(zeroed), Fraction(0)),
        (f"kept eigenspace theta={kept}", on_eigenvalue(kept), Fraction(v, rep.dim)),
    )
    report = IdentityReport(params, rep.side, checks)
    if not report.ok:
        bad = [name for name, lhs, rhs in checks if lhs != rhs]
        raise IdentityViolated(f"{params} {rep.side}-side: " + ", ".join(bad), report=report)
    return report


# ---------------------------------------------------------------------------
# coordinates
# ---------------------------------------------------------------------------

def realize_coordinates(graph: Graph, rep: TwoDistanceRep, tol: float = 1e-9) -> np.ndarray:
    """Unit vectors x_i (rows) in R^dim with <x_i, x_j> = p or q.

    Columns of ``A - theta*I`` are centred, normalised, and then expressed in
    an orthonormal basis of their span.
    """
    if graph.n > EXACT_RANK_LIMIT:
        raise SizeBudgetExceeded(f"n={graph.n} exceeds {EXACT_RANK_LIMIT}")
    _check_matches(graph, rep.params)
    n = graph.n
    theta = float(rep.eigenvalue)
    y = graph.to_numpy(float) - theta * np.eye(n)
    z = y - y.mean(axis=1, keepdims=True)
    norms = np.linalg.norm(z, axis=0)
    if np.any(norms < tol):
        raise RealizationError("a centred column vanished")
    x = (z / norms).T
    u, sing, _ = np.linalg.svd(x)
    if rep.dim < n and sing[rep.dim] > 1e-8 * sing[0]:
        raise RealizationError(f"vectors span more than {rep.dim} dimensions (sigma={sing[rep.dim]:.3g})")
    if sing[rep.dim - 1] < 1e-8 * sing[0]:
        raise RealizationError(f"vectors span fewer than {rep.dim} dimensions")
    coords = u[:, : rep.dim] * sing[: rep.dim]
    gram = coords @ coords.T
    target = gram_from_inner_products(graph.to_numpy(), rep.p, rep.q).to_float()
    err = np.max(np.abs(gram - target))
    if err > tol:
        raise RealizationError(f"Gram reconstruction error {err:.3g} exceeds {tol}")
    return coords


def diameter_class(p, q) -> str:
    """Which pairs realise the diameter: the smaller inner product is the longer distance."""
    p, q = Fraction(p), Fraction(q)
    if p == q:
        raise EqualInnerProducts("p == q: not a two-distance set")
    return "nonadjacent-pairs" if q < p else "adjacent-pairs"


def write_coordinates(stream: IO[str], coords: np.ndarray) -> None:
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    n, dim = coords.shape
    stream.write(f"{n} {dim}\n")
    for row in coords:
        stream.write(" ".join(f"{x:.17g}" for x in row) + "\n")


def read_coordinates(stream: IO[str]) -> np.ndarray:
    header = stream.readline().split()
    n, dim = int(header[0]), int(header[1])
    data = np.loadtxt(stream, ndmin=2) if n else np.zeros((0, dim))
    if data.shape != (n, dim):
        raise ValueError(f"header says {n}x{dim}, body is {data.shape[0]}x{data.shape[1]}")
    return data
