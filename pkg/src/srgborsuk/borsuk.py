"""Borsuk partition lower bounds and the block/apex lifting constructions.

Bound arithmetic is exact integer work.  The coordinate builders only
demonstrate that the lifted configurations exist; no bound depends on them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from .cliques import fi23_clique_bound
from .errors import CircumradiusTooLarge, MalformedBase, NonnegativeQ, NotTwoDistance
from .graph import Graph
from .params import SrgParams, slice_counts

INNER_TOL = 1e-9
SUM_TOL = 1e-8


@dataclass(frozen=True)
class BorsukCertificate:
    """``b2(dimension) >= lower_bound``, witnessed by ``num_points`` points."""

    dimension: int
    num_points: int
    part_bound: int
    lower_bound: int
    provenance: tuple[str, ...] = field(default=())

    def claim(self) -> str:
        return f"b2({self.dimension}) >= {self.lower_bound}"


def partition_lower_bound(num_points: int, part_bound: int, dimension: int) -> BorsukCertificate:
    if part_bound < 1:
        raise ValueError("part_bound must be positive")
    lower = -(-num_points // part_bound)
    return BorsukCertificate(
        dimension,
        num_points,
        part_bound,
        lower,
        (f"pigeonhole: {num_points} points, at most {part_bound} per part of smaller diameter -> "
         f"at least ceil({num_points}/{part_bound}) = {lower} parts",),
    )


# ---------------------------------------------------------------------------
# lifting parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LiftSpec:
    n: int
    scale: float
    offset: float
    offset_squared: Fraction
    cross_inner: Fraction
    alpha: float
    gamma: float
    radius: float

    @classmethod
    def from_inner_products(cls, p, q, n: int) -> "LiftSpec":
        """Block scale ``c`` and offset ``a`` turn inner products (p, q) into ((p-q)/(1-q), 0).

        The apex ``(0|alpha,...,alpha)`` sits at squared distance 2 from every
        block vector; ``(0|gamma,...,gamma)`` is the circumcentre of the
        enlarged set and ``radius`` its circumradius.
        """
        p, q = Fraction(p), Fraction(q)
        if q >= 0:
            raise NonnegativeQ(f"q={q} must be negative")
        if n < 1:
            raise ValueError("need at least one block")
        a2 = -q / (1 - q)
        a = math.sqrt(a2)
        alpha = (a + math.sqrt(a2 + n)) / n
        gamma = a * alpha / (n * alpha - a)
        radius = math.sqrt(n) * (alpha - gamma)
        return cls(n, math.sqrt(1 / (1 - q)), a, a2, (p - q) / (1 - q), alpha, gamma, radius)


def block_construction(base_coords: np.ndarray, p, q, n: int) -> np.ndarray:
    """Stack ``n`` orthogonal scaled copies of a two-distance set.

    Rows are ordered block by block; columns are ``(y_1..y_n | a_1..a_n)`` with
    ``y_k`` the scaled base coordinates and ``a_k`` the offset coordinate.
    """
    x = np.asarray(base_coords, dtype=float)
    if x.ndim != 2:
        raise MalformedBase("base coordinates must be a 2-d array")
    spec = LiftSpec.from_inner_products(p, q, n)
    npts, d = x.shape
    gram = x @ x.T
    if np.max(np.abs(np.diag(gram) - 1)) > INNER_TOL:
        raise MalformedBase("base rows are not unit vectors")
    off = gram[~np.eye(npts, dtype=bool)]
    close = np.minimum(np.abs(off - float(p)), np.abs(off - float(q)))
    if off.size and np.max(close) > INNER_TOL:
        raise MalformedBase(f"base inner product off {{p, q}} by {np.max(close):.3g}")
    out = np.zeros((npts * n, (d + 1) * n))
    for k in range(n):
        out[k * npts:(k + 1) * npts, k * d:(k + 1) * d] = spec.scale * x
        out[k * npts:(k + 1) * npts, n * d + k] = spec.offset
    return out


@dataclass(frozen=True)
class BlockOffsets:
    """The offset columns of a block construction and their common value."""

    columns: tuple[int, ...]
    value: float

    @classmethod
    def for_blocks(cls, base_dim: int, n: int, value: float) -> "BlockOffsets":
        return cls(tuple(range(n * base_dim, n * base_dim + n)), value)


def squared_distances(points: np.ndarray) -> np.ndarray:
    sq = np.einsum("ij,ij->i", points, points)
    d = sq[:, None] + sq[None, :] - 2 * points @ points.T
    np.fill_diagonal(d, 0.0)
    return np.maximum(d, 0.0)


def distance_values(points: np.ndarray, tol: float = INNER_TOL) -> list[float]:
    """Distinct nonzero squared distances, clustered at tolerance ``tol`` relative to the diameter."""
    d = squared_distances(points)
    vals = np.sort(d[np.triu_indices(len(points), 1)])
    if vals.size == 0:
        return []
    scale = max(vals[-1], 1.0)
    clusters = [vals[0]]
    for x in vals[1:]:
        if x - clusters[-1] > tol * scale:
            clusters.append(x)
    return [float(c) for c in clusters]


def circumsphere(points: np.ndarray) -> tuple[np.ndarray, float]:
    """Centre (in the affine hull) and radius of the sphere through all points."""
    x0 = points[0]
    diffs = points[1:] - x0
    if diffs.size == 0:
        return x0.copy(), 0.0
    _, sing, vt = np.linalg.svd(diffs, full_matrices=False)
    basis = vt[sing > 1e-10 * sing[0]]
    coords = diffs @ basis.T
    # |x0 + B l - x_i|^2 = |B l|^2  <=>  2 c_i . l = |c_i|^2
    rhs = 0.5 * np.einsum("ij,ij->i", coords, coords)
    lam, *_ = np.linalg.lstsq(coords, rhs, rcond=None)
    centre = x0 + lam @ basis
    radii = np.linalg.norm(points - centre, axis=1)
    if np.ptp(radii) > SUM_TOL * max(radii.max(), 1.0):
        raise NotTwoDistance("points do not lie on a common sphere")
    return centre, float(radii.mean())


def _normalised(points: np.ndarray) -> tuple[np.ndarray, float, float]:
    """Rescale so the diameter is sqrt(2); return (points, circumradius, diameter^2 before)."""
    vals = distance_values(points)
    if len(vals) > 2:
        raise NotTwoDistance(f"{len(vals)} distinct distances: {vals[:5]}")
    diam2 = vals[-1]
    pts = points * math.sqrt(2 / diam2)
    _, radius = circumsphere(pts)
    return pts, radius, diam2


def _on_unit_sphere(points: np.ndarray) -> np.ndarray:
    centre, radius = circumsphere(points)
    return (points - centre) / radius


def apex_extend(coords: np.ndarray, offsets: BlockOffsets | None = None) -> np.ndarray:
    """Add one point at diameter distance from every point; return the set on the unit sphere.

    With ``offsets`` the new point is placed inside the current space along the
    offset columns (the first step of the lifting).  Without, it is placed on a
    new axis through the circumcentre, so the dimension grows by one.  The set,
    scaled to diameter sqrt(2), must have circumradius below 1; the step keeps
    that true.
    """
    x = np.asarray(coords, dtype=float)
    npts, m = x.shape
    if npts == 1:
        out = np.zeros((2, m + 1))
        out[0, :m] = x[0] / np.linalg.norm(x[0])
        out[1, m] = 1.0
        return out
    pts, radius, _ = _normalised(x)
    if radius >= 1 - INNER_TOL:
        raise CircumradiusTooLarge(f"circumradius {radius:.12g} >= 1 at diameter sqrt(2)")
    if offsets is not None:
        cols = list(offsets.columns)
        scale = math.sqrt(2 / distance_values(x)[-1])
        norms2 = np.einsum("ij,ij->i", pts, pts)
        loads = pts[:, cols].sum(axis=1)
        a = offsets.value * scale
        if np.ptp(norms2) > SUM_TOL or np.max(np.abs(loads - a)) > SUM_TOL:
            raise NotTwoDistance("points do not have a common norm and offset load")
        nb = len(cols)
        # nb*alpha^2 - 2*a*alpha + |x|^2 - 2 = 0
        alpha = (a + math.sqrt(a * a - nb * (norms2[0] - 2))) / nb
        apex = np.zeros(m)
        apex[cols] = alpha
        new = np.vstack([pts, apex])
    else:
        centre, _ = circumsphere(pts)
        height = math.sqrt(2 - radius**2)
        new = np.zeros((npts + 1, m + 1))
        new[:npts, :m] = pts - centre
        new[npts, m] = height
    out = _on_unit_sphere(new)
    if len(distance_values(out)) > 2:  # pragma: no cover
        raise NotTwoDistance("extension produced a third distance")
    return out


# ---------------------------------------------------------------------------
# family and slice bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeedConfiguration:
    name: str
    params: SrgParams
    dim: int
    clique_bound: int
    clique_source: str


def seed_configuration(base: Literal["g24", "fi23"]) -> SeedConfiguration:
    if base == "g24":
        return SeedConfiguration(
            "g24", SrgParams(416, 100, 36, 20), 65, 5,
            "clique number 5 of the bundled G2(4) graph (max_clique and chain_clique_bound)",
        )
    if base == "fi23":
        cert = fi23_clique_bound(SrgParams(693, 180, 51, 45))
        return SeedConfiguration(
            "fi23", SrgParams(31671, 3510, 693, 351), 782, cert.size,
            f"clique bound {cert.size} from the ratio bound on the second subconstituent",
        )
    raise ValueError(f"unknown base {base!r}")


def family_bound(base: Literal["g24", "fi23"], n: int, k: int) -> BorsukCertificate:
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    seed = seed_configuration(base)
    per_block = partition_lower_bound(seed.params.v, seed.clique_bound, seed.dim)
    dim = (seed.dim + 1) * n + k
    lower = per_block.lower_bound * n + k + 1
    return BorsukCertificate(
        dim,
        seed.params.v * n + k + 1,
        seed.clique_bound,
        lower,
        (
            seed.clique_source,
            *per_block.provenance,
            f"{n} orthogonal blocks in R^{(seed.dim + 1) * n}: far pairs are nonadjacent in-block or cross-block, "
            f"so each part lies in one block -> {per_block.lower_bound}*{n} parts",
            "+1 for the apex at diameter distance from every block point",
            f"+{k} for {k} further extensions, one dimension each",
        ),
    )


def slice_bound(params: SrgParams, local_lambda: int, clique_bound: int, base_dim: int) -> list[BorsukCertificate]:
    """Bounds from the common non-neighbourhoods of a vertex, an edge and a triangle.

    The depth-t slice lies in the intersection of t hyperplanes, hence in
    dimension ``base_dim - t``.
    """
    counts = slice_counts(params, local_lambda)
    certs = []
    for t, what in ((1, "a vertex"), (2, "an edge"), (3, "a triangle")):
        cert = partition_lower_bound(counts[t], clique_bound, base_dim - t)
        certs.append(
            BorsukCertificate(
                cert.dimension,
                cert.num_points,
                cert.part_bound,
                cert.lower_bound,
                (f"common non-neighbours of {what} in SRG{params}: {counts[t]} points in {t} hyperplane(s)",
                 *cert.provenance),
            )
        )
    return certs


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LiftedWitness:
    points: np.ndarray
    certificate: BorsukCertificate
    distances: tuple[float, ...]


def far_pair_graph(points: np.ndarray, tol: float = INNER_TOL) -> Graph:
    """Pairs at (approximately) the diameter distance."""
    d = squared_distances(points)
    far = d >= d.max() - tol * max(d.max(), 1.0)
    np.fill_diagonal(far, False)
    return Graph.from_matrix(far)


def lift_witness(
    base_coords: np.ndarray,
    p,
    q,
    blocks: int,
    extend: int,
    per_block_bound: int,
    part_bound: int,
) -> LiftedWitness:
    """Block construction, the in-space apex, then ``extend`` extra apex steps."""
    x = np.asarray(base_coords, dtype=float)
    pts = block_construction(x, p, q, blocks)
    spec = LiftSpec.from_inner_products(p, q, blocks)
    provenance = [f"{blocks} blocks of {x.shape[0]} points: b2({pts.shape[1]}) >= {per_block_bound * blocks}"]
    pts = apex_extend(pts, BlockOffsets.for_blocks(x.shape[1], blocks, spec.offset))
    lower = per_block_bound * blocks + 1
    provenance.append(f"apex in R^{pts.shape[1]}: b2({pts.shape[1]}) >= {lower}")
    for _ in range(extend):
        pts = apex_extend(pts)
        lower += 1
        provenance.append(f"apex on a new axis: b2({pts.shape[1]}) >= {lower}")
    vals = distance_values(pts)
    if len(vals) != 2:
        raise NotTwoDistance(f"witness has {len(vals)} distances")
    cert = BorsukCertificate(pts.shape[1], pts.shape[0], part_bound, lower, tuple(provenance))
    return LiftedWitness(pts, cert, tuple(vals))
