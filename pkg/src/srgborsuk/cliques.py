"""Maximum cliques and clique-number upper bounds."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from .errors import BudgetExceeded, ChainMismatch, NonnegativeQ
from .graph import Graph, _bits, induced_subgraph, is_clique, is_triangle_free, verify_srg
from .params import SrgParams, complement_params
from .representation import rep_parameters

MAX_CLIQUE_LIMIT = 5000


@dataclass(frozen=True)
class CliqueCertificate:
    size: int
    witness: tuple[int, ...] | None
    kind: Literal["exact", "upper-bound"]
    method: Literal["branch-and-bound", "ratio-bound", "chain"]
    provenance: tuple[str, ...] = field(default=())


class _Search:
    """Greedy-colouring branch and bound over bitsets (MCQ style)."""

    def __init__(self, rows: Sequence[int], node_limit: int | None):
        self.rows = rows
        self.node_limit = node_limit
        self.nodes = 0
        self.best: list[int] = []
        self.target: int | None = None

    def _colour(self, cand: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        colours: list[int] = []
        rows = self.rows
        colour = 0
        uncoloured = cand
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~low & ~rows[v]
                uncoloured &= ~low
                order.append(v)
                colours.append(colour)
        return order, colours

    def expand(self, clique: list[int], cand: int) -> bool:
        """Return True once ``target`` is reached (target mode only)."""
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded(f"branch and bound exceeded {self.node_limit} nodes")
        order, colours = self._colour(cand)
        goal = self.target if self.target is not None else len(self.best) + 1
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colours[idx] < goal:
                return False
            v = order[idx]
            clique.append(v)
            sub = cand & self.rows[v]
            if sub:
                if self.expand(clique, sub):
                    return True
            elif len(clique) > len(self.best):
                self.best = clique.copy()
                if self.target is not None and len(clique) >= self.target:
                    return True
            clique.pop()
            cand &= ~(1 << v)
            if self.target is None:
                goal = len(self.best) + 1
        return False


def _relabel_by_degree(graph: Graph) -> tuple[list[int], list[int]]:
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    pos = [0] * graph.n
    for t, v in enumerate(order):
        pos[v] = t
    rows = [sum(1 << pos[w] for w in _bits(graph.rows[v])) for v in order]
    return order, rows


def _has_clique(search_rows: Sequence[int], cand: int, size: int, node_limit: int | None) -> bool:
    if size <= 0:
        return True
    if cand.bit_count() < size:
        return False
    s = _Search(search_rows, node_limit)
    s.target = size
    s.expand([], cand)
    return len(s.best) >= size


def max_clique(graph: Graph, node_limit: int | None = None) -> CliqueCertificate:
    """Exact clique number with the lexicographically smallest maximum clique as witness."""
    n = graph.n
    if n > MAX_CLIQUE_LIMIT:
        raise BudgetExceeded(f"n={n} exceeds the branch-and-bound budget of {MAX_CLIQUE_LIMIT}")
    if n == 0:
        return CliqueCertificate(0, (), "exact", "branch-and-bound", ("empty graph",))
    order, rows = _relabel_by_degree(graph)
    search = _Search(rows, node_limit)
    search.expand([], (1 << n) - 1)
    omega = len(search.best)

    # lexicographically smallest omega-clique in original labels
    prefix: list[int] = []
    cand = (1 << n) - 1
    while len(prefix) < omega:
        for v in _bits(cand):
            above = cand & graph.rows[v] & ~((1 << (v + 1)) - 1)
            relabelled = sum(1 << t for t, u in enumerate(order) if (above >> u) & 1)
            if _has_clique(rows, relabelled, omega - len(prefix) - 1, node_limit):
                prefix.append(v)
                cand = above
                break
        else:  # pragma: no cover - omega was attained, so some v must extend
            raise AssertionError("witness reconstruction failed")
    witness = tuple(prefix)
    if not is_clique(graph, witness):  # pragma: no cover
        raise AssertionError("witness is not a clique")
    return CliqueCertificate(
        omega,
        witness,
        "exact",
        "branch-and-bound",
        (f"branch and bound over {n} vertices, {search.nodes} nodes; witness re-checked pairwise",),
    )


def clique_sum_norm(m: int, q) -> Fraction:
    """Squared norm of the sum of m unit vectors with pairwise inner product q."""
    q = Fraction(q)
    return m + m * (m - 1) * q


def ratio_independence_bound(q) -> int:
    """Largest m for which m unit vectors with pairwise inner product q < 0 can exist."""
    q = Fraction(q)
    if q >= 0:
        raise NonnegativeQ(f"q={q} must be negative")
    bound = 1 - 1 / q
    return bound.numerator // bound.denominator


def fi23_clique_bound(second_subconstituent: SrgParams) -> CliqueCertificate:
    """Clique bound for a rank-3 graph from its second subconstituent.

    A clique of the big graph through an edge {u, w} minus that edge lies in the
    second subconstituent of one endpoint, and is an independent set of the
    complement there; the ratio bound on the complement's f-side caps it.
    """
    comp = complement_params(second_subconstituent)
    rep = rep_parameters(comp, "f")
    inner = ratio_independence_bound(rep.q)
    return CliqueCertificate(
        inner + 2,
        None,
        "upper-bound",
        "ratio-bound",
        (
            f"complement of {second_subconstituent} is {comp}",
            f"f-side representation of {comp}: dim={rep.dim}, p={rep.p}, q={rep.q}",
            f"clique_sum_norm({inner + 1}, {rep.q}) = {clique_sum_norm(inner + 1, rep.q)} < 0, so cliques there have size <= {inner}",
            f"add the two vertices of the edge: clique number <= {inner + 2}",
        ),
    )


# ---------------------------------------------------------------------------
# subconstituent chain
# ---------------------------------------------------------------------------

def _cliques_of_size(graph: Graph, t: int):
    def rec(clique, cand):
        if len(clique) == t:
            yield tuple(clique)
            return
        for v in _bits(cand):
            clique.append(v)
            yield from rec(clique, cand & graph.rows[v] & ~((1 << (v + 1)) - 1))
            clique.pop()

    yield from rec([], (1 << graph.n) - 1)


def _random_chain(graph: Graph, depth: int, rng: random.Random) -> tuple[int, ...] | None:
    chain: list[int] = []
    cand = (1 << graph.n) - 1
    for _ in range(depth):
        options = _bits(cand)
        if not options:
            return None
        v = rng.choice(options)
        chain.append(v)
        cand &= graph.rows[v]
    return tuple(chain)


def _common_nbhd(graph: Graph, clique: Sequence[int]) -> int:
    mask = (1 << graph.n) - 1
    for u in clique:
        mask &= graph.rows[u]
    return mask


def _leaf_clique_number(leaf: Graph) -> int:
    if leaf.n == 0:
        return 0
    if leaf.num_edges() == 0:
        return 1
    if is_triangle_free(leaf):
        return 2
    return max_clique(leaf).size


def chain_clique_bound(
    graph: Graph,
    depth: int,
    expected_params: Sequence[SrgParams] = (),
    *,
    strict: bool = False,
    sample_count: int = 20,
    seed: int = 0,
    leaf_order: int | None = None,
    leaf_degree: int | None = None,
    leaf_triangle_free: bool = False,
) -> CliqueCertificate:
    """Bound omega(graph) <= depth + omega(leaf) via iterated first subconstituents.

    The level-t subgraph of a t-clique C is induced on the common neighbourhood
    of C.  ``expected_params[t-1]`` (when given) must equal the SRG parameters
    of every checked level-t subgraph.  Level 1 is always checked from every
    vertex; deeper levels are checked on every clique when ``strict`` and on
    ``sample_count`` random chains (seeded) otherwise.
    """
    if not 1 <= depth <= 3:
        raise ValueError("depth must be 1, 2 or 3")
    if len(expected_params) > depth:
        raise ValueError("more expected parameter sets than levels")
    provenance = []
    leaf_omega = 0
    leaves = 0

    def check(clique: tuple[int, ...]) -> None:
        nonlocal leaf_omega, leaves
        t = len(clique)
        sub = induced_subgraph(graph, _bits(_common_nbhd(graph, clique)))
        if t <= len(expected_params):
            want = expected_params[t - 1]
            got = verify_srg(sub).params if sub.n >= 4 else None
            if got != want:
                raise ChainMismatch(
                    f"level {t} subgraph at {list(clique)} has parameters {got}, expected {want}", path=clique
                )
        if t == depth:
            if leaf_order is not None and sub.n != leaf_order:
                raise ChainMismatch(f"leaf at {list(clique)} has {sub.n} vertices, expected {leaf_order}", path=clique)
            if leaf_degree is not None and set(sub.degrees()) - {leaf_degree}:
                raise ChainMismatch(f"leaf at {list(clique)} is not {leaf_degree}-regular", path=clique)
            if leaf_triangle_free and not is_triangle_free(sub):
                raise ChainMismatch(f"leaf at {list(clique)} contains a triangle", path=clique)
            leaf_omega = max(leaf_omega, _leaf_clique_number(sub))
            leaves += 1

    for u in range(graph.n):
        check((u,))
    provenance.append(f"level 1 checked at all {graph.n} vertices")
    if depth > 1:
        if strict:
            for t in range(2, depth + 1):
                count = 0
                for clique in _cliques_of_size(graph, t):
                    check(clique)
                    count += 1
                provenance.append(f"level {t} checked on all {count} {t}-cliques")
        else:
            rng = random.Random(seed)
            sampled = 0
            for _ in range(sample_count):
                chain = _random_chain(graph, depth, rng)
                if chain is None:
                    continue
                for t in range(2, depth + 1):
                    check(tuple(sorted(chain[:t])))
                sampled += 1
            provenance.append(
                f"levels 2..{depth} checked on {sampled} random chains (seed {seed}); "
                "the bound assumes the sampled structure holds at every clique"
            )
    provenance.append(f"largest leaf clique number {leaf_omega} over {leaves} leaves")
    provenance.append(f"omega <= {depth} + {leaf_omega} = {depth + leaf_omega}")
    return CliqueCertificate(depth + leaf_omega, None, "upper-bound", "chain", tuple(provenance))
