"""The full list of numeric claims, checked one by one.

Each check is tagged with the acceptance criterion it covers so the test
suite can confirm the two lists stay in step.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np

from . import borsuk, cliques, graph as gc, params as sp, representation as rp
from .params import SrgParams

G24 = SrgParams(416, 100, 36, 20)
FI23 = SrgParams(31671, 3510, 693, 351)
FI23_LOCAL = SrgParams(3510, 693, 180, 126)
FI23_SECOND = SrgParams(693, 180, 51, 45)
FI23_SECOND_COMPLEMENT = SrgParams(693, 512, 376, 384)
HALL_JANKO = SrgParams(100, 36, 14, 12)
U3_3 = SrgParams(36, 14, 4, 6)

TRIANGLE_SAMPLES = 20
TRIANGLE_SEED = 2024


@dataclass
class CheckResult:
    name: str
    criterion: int
    ok: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0
    error: str = ""


@dataclass
class Check:
    name: str
    criterion: int
    needs_graph: bool
    run: Callable[["Context"], dict]


class CheckFailed(AssertionError):
    pass


def expect(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


@dataclass
class Context:
    graph_path: Path | None = None
    strict_chain: bool = False
    _graph: gc.Graph | None = None
    _coords: np.ndarray | None = None

    @property
    def graph(self) -> gc.Graph:
        if self._graph is None:
            self._graph = gc.load_g2_4(self.graph_path)
        return self._graph

    @property
    def coords(self) -> np.ndarray:
        if self._coords is None:
            self._coords = rp.realize_coordinates(self.graph, rp.rep_parameters(G24))
        return self._coords


def brute_force_clique_number(g: gc.Graph) -> int:
    """Largest k such that some k-subset is a clique, by plain enumeration."""
    best = 0 if g.n == 0 else 1
    for k in range(2, g.n + 1):
        if not any(all(g.adjacent(a, b) for a, b in itertools.combinations(s, 2))
                   for s in itertools.combinations(range(g.n), k)):
            break
        best = k
    return best


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def _spectrum_g24(ctx):
    spec = sp.spectrum(G24)
    expect((spec.r, spec.s, spec.f, spec.g) == (20, -4, 65, 350), f"got r={spec.r} s={spec.s} f={spec.f} g={spec.g}")
    return {"params": G24, "r": spec.r, "s": spec.s, "f": spec.f, "g": spec.g}


def _spectrum_fi23(ctx):
    spec = sp.spectrum(FI23)
    expect(spec.f == 782, f"f={spec.f}")
    return {"params": FI23, "f": spec.f, "g": spec.g, "r": spec.r, "s": spec.s}


def _rep(params, p, q, dim):
    def run(ctx):
        rep = rp.rep_parameters(params)
        expect((rep.p, rep.q, rep.dim) == (p, q, dim), f"got p={rep.p} q={rep.q} dim={rep.dim}")
        return {"params": params, "p": rep.p, "q": rep.q, "beta": rep.beta, "dim": rep.dim,
                "diameter": rp.diameter_class(rep.p, rep.q)}
    return run


def _gram_rank(ctx):
    out = {}
    g24 = rp.gram_matrix(ctx.graph, rp.rep_parameters(G24))
    t = time.perf_counter()
    out["g24_exact"] = rp.gram_rank(g24)
    out["g24_exact_seconds"] = round(time.perf_counter() - t, 3)
    t = time.perf_counter()
    out["g24_modular"] = rp.gram_rank(g24, "modular")
    out["g24_modular_seconds"] = round(time.perf_counter() - t, 3)
    out["petersen"] = rp.gram_rank(rp.gram_matrix(gc.petersen(), rp.rep_parameters(SrgParams(10, 3, 0, 1))))
    out["lattice(3)"] = rp.gram_rank(rp.gram_matrix(gc.lattice(3), rp.rep_parameters(SrgParams(9, 4, 1, 2))))
    expect(out["g24_exact"] == 65 and out["g24_modular"] == 65, f"G2(4) rank {out['g24_exact']}/{out['g24_modular']}")
    expect(out["petersen"] == 5 and out["lattice(3)"] == 4, "corpus ranks wrong")
    expect(out["g24_exact_seconds"] < 60 and out["g24_modular_seconds"] < 5, "rank too slow")
    return out


def _max_clique(ctx):
    t = time.perf_counter()
    cert = cliques.max_clique(ctx.graph)
    secs = time.perf_counter() - t
    expect(cert.size == 5 and gc.is_clique(ctx.graph, cert.witness), f"clique number {cert.size}")
    expect(secs < 60, f"max_clique took {secs:.1f}s")
    return {"size": cert.size, "witness": list(cert.witness), "seconds": round(secs, 3)}


def _chain(ctx):
    t = time.perf_counter()
    cert = cliques.chain_clique_bound(
        ctx.graph, 3, [HALL_JANKO, U3_3], strict=ctx.strict_chain,
        leaf_order=14, leaf_degree=4, leaf_triangle_free=True,
    )
    secs = time.perf_counter() - t
    expect(cert.size <= 5, f"chain bound {cert.size}")
    expect(secs < (600 if ctx.strict_chain else 30), f"chain bound took {secs:.1f}s")
    return {"bound": cert.size, "strict": ctx.strict_chain, "provenance": list(cert.provenance),
            "seconds": round(secs, 3)}


def _triangles(ctx):
    g = ctx.graph
    rng = random.Random(TRIANGLE_SEED)
    seen = []
    while len(seen) < TRIANGLE_SAMPLES:
        u = rng.randrange(g.n)
        v = rng.choice(g.neighbors(u))
        w = rng.choice(gc.common_neighbors(g, [u, v]))
        tri = tuple(sorted((u, v, w)))
        count = gc.common_neighbor_count(g, tri)
        leaf = gc.induced_subgraph(g, gc.common_neighbors(g, tri))
        expect(count == 14, f"triangle {tri}: {count} common neighbours")
        expect(set(leaf.degrees()) == {4}, f"triangle {tri}: leaf not 4-regular")
        expect(gc.is_triangle_free(leaf), f"triangle {tri}: leaf has a triangle")
        seen.append(tri)
    return {"triangles": [list(t) for t in seen], "seed": TRIANGLE_SEED}


def _borsuk_g24(ctx):
    omega = cliques.max_clique(ctx.graph).size
    cert = borsuk.partition_lower_bound(416, omega, 65)
    expect(cert.lower_bound == 84, cert.claim())
    return {"certificate": cert}


def _borsuk_fi23(ctx):
    cert = borsuk.partition_lower_bound(31671, 23, 782)
    expect(cert.lower_bound == 1377, cert.claim())
    return {"certificate": cert}


def _ratio(ctx):
    inner = cliques.ratio_independence_bound(Fraction(-1, 20))
    cert = cliques.fi23_clique_bound(FI23_SECOND)
    norm = cliques.clique_sum_norm(22, Fraction(-1, 20))
    expect(inner == 21 and cert.size == 23 and norm < 0, f"inner={inner} total={cert.size} norm={norm}")
    return {"ratio_bound": inner, "clique_bound": cert.size, "norm_22": norm,
            "provenance": list(cert.provenance)}


def _lift_formulas(ctx):
    worst = 0.0
    for n in range(1, 11):
        spec = borsuk.LiftSpec.from_inner_products(Fraction(1, 5), Fraction(-1, 15), n)
        alpha = (1 + math.sqrt(1 + 16 * n)) / (4 * n)
        gamma = alpha / (4 * n * alpha - 1)
        radius = 4 * math.sqrt(n) / math.sqrt(16 * n + 1)
        err = max(abs(spec.alpha - alpha), abs(spec.gamma - gamma), abs(spec.radius - radius))
        worst = max(worst, err)
        expect(err < 1e-12, f"n={n}: closed-form mismatch {err:.3g}")
        expect(spec.radius < 1, f"n={n}: R={spec.radius}")
    return {"max_error": worst, "n": "1..10"}


def _witness(ctx):
    t = time.perf_counter()
    rep = rp.rep_parameters(G24)
    w = borsuk.lift_witness(ctx.coords, rep.p, rep.q, blocks=2, extend=2, per_block_bound=84, part_bound=5)
    secs = time.perf_counter() - t
    expect(w.points.shape == (835, 134), f"shape {w.points.shape}")
    expect(len(w.distances) == 2, f"{len(w.distances)} distances")
    expect(w.certificate.claim() == "b2(134) >= 171", w.certificate.claim())
    expect(secs < 30, f"witness took {secs:.1f}s")
    return {"shape": list(w.points.shape), "squared_distances": list(w.distances),
            "certificate": w.certificate, "seconds": round(secs, 3)}


def _slices(ctx):
    certs = borsuk.slice_bound(FI23, 180, 23, 782)
    got = [(c.dimension, c.num_points, c.lower_bound) for c in certs]
    expect(got == [(781, 28160, 1225), (780, 25344, 1102), (779, 23040, 1002)], str(got))
    return {"certificates": certs}


def _family_table(base, per_block, step):
    def run(ctx):
        if base == "g24":
            omega = cliques.max_clique(ctx.graph).size
            expect(omega == borsuk.seed_configuration("g24").clique_bound, f"seed clique number {omega}")
        rows = []
        for n in range(1, 4):
            for k in range(4):
                cert = borsuk.family_bound(base, n, k)
                expect(cert.dimension == step * n + k and cert.lower_bound == per_block * n + k + 1, cert.claim())
                rows.append(cert.claim())
        return {"table": rows}
    return run


def _fi23_chain_params(ctx):
    for p in (FI23, FI23_LOCAL, FI23_SECOND, FI23_SECOND_COMPLEMENT):
        expect(sp.check_feasible(p).ok, f"{p} infeasible")
    expect(sp.complement_params(FI23_SECOND) == FI23_SECOND_COMPLEMENT, "complement mismatch")
    return {"feasible": [FI23, FI23_LOCAL, FI23_SECOND, FI23_SECOND_COMPLEMENT]}


def _property_suites(ctx):
    corpus = gc.srg_corpus()
    corpus.update({f"complement({k})": gc.complement(g) for k, g in list(corpus.items())})
    checked_ids = 0
    for name, g in corpus.items():
        expect(gc.parse_graph6(gc.write_graph6(g)) == g, f"graph6 round trip failed on {name}")
    g24 = ctx.graph
    expect(gc.parse_graph6(gc.write_graph6(g24)) == g24, "graph6 round trip failed on G2(4)")
    for name, g in corpus.items():
        prm = gc.verify_srg(g).params
        if prm is None or not sp.spectrum(prm).integral:
            continue
        for side in ("f", "g"):
            rp.spectral_identity_check(prm, rp.rep_parameters(prm, side))
            checked_ids += 1
    brute = 0
    for name, g in corpus.items():
        if g.n <= 16:
            expect(cliques.max_clique(g).size == brute_force_clique_number(g), f"clique mismatch on {name}")
            brute += 1
    return {"round_trips": len(corpus) + 1, "identity_checks": checked_ids, "brute_force_comparisons": brute}


CHECKS: list[Check] = [
    Check("g24-spectrum", 1, False, _spectrum_g24),
    Check("g24-representation", 2, False, _rep(G24, Fraction(1, 5), Fraction(-1, 15), 65)),
    Check("g24-gram-rank", 3, True, _gram_rank),
    Check("g24-clique-number-exact", 4, True, _max_clique),
    Check("g24-clique-number-chain", 4, True, _chain),
    Check("g24-triangle-intersections", 5, True, _triangles),
    Check("g24-borsuk-bound", 6, True, _borsuk_g24),
    Check("fi23-spectrum", 1, False, _spectrum_fi23),
    Check("fi23-representation", 2, False, _rep(FI23, Fraction(1, 10), Fraction(-1, 80), 782)),
    Check("fi23-subconstituent-parameters", 7, False, _fi23_chain_params),
    Check("fi23-complement-representation", 2, False, _rep(FI23_SECOND_COMPLEMENT, Fraction(1, 64), Fraction(-1, 20), 440)),
    Check("fi23-clique-bound", 7, False, _ratio),
    Check("fi23-borsuk-bound", 6, False, _borsuk_fi23),
    Check("lift-closed-forms", 8, False, _lift_formulas),
    Check("g24-family-table", 6, True, _family_table("g24", 84, 66)),
    Check("fi23-family-table", 6, False, _family_table("fi23", 1377, 783)),
    Check("g24-lift-witness", 9, True, _witness),
    Check("fi23-slice-bounds", 10, False, _slices),
    Check("property-suites", 11, True, _property_suites),
]


def run_checks(graph_path: str | Path | None = None, *, skip_graph: bool = False,
               strict_chain: bool = False) -> list[CheckResult]:
    ctx = Context(Path(graph_path) if graph_path else None, strict_chain)
    results = []
    for check in CHECKS:
        if skip_graph and check.needs_graph:
            continue
        t = time.perf_counter()
        try:
            detail = check.run(ctx)
            results.append(CheckResult(check.name, check.criterion, True, detail, time.perf_counter() - t))
        except Exception as exc:  # every failure becomes a red line, never a crash
            code = getattr(exc, "code", type(exc).__name__)
            results.append(CheckResult(check.name, check.criterion, False, {}, time.perf_counter() - t,
                                       f"{code}: {exc}"))
    return results
