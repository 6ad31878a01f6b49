"""Rebuild the bundled G2(4) graph from the co-Heawood graph.

Each step adds an apex vertex joined to the current graph, plus one vertex
per involution in a conjugacy class of the automorphism group, joined to that
involution's fixed points; two new vertices are adjacent when the product of
their involutions has order 4.  The chain is

    co-Heawood (14) -> U3(3) graph (36) -> Hall-Janko graph (100) -> G2(4) graph (416)

Needs pynauty (``pip install pynauty``).  Usage::

    python scripts/make_g2_4.py [output.g6]
"""
from __future__ import annotations

import itertools
import random
import sys

import pynauty

from srgborsuk import graph as gc
from srgborsuk.params import SrgParams

# (fixed points of the involution, parameters after the step)
STEPS = [
    (6, SrgParams(36, 14, 4, 6)),
    (12, SrgParams(100, 36, 14, 12)),
    (20, SrgParams(416, 100, 36, 20)),
]


def co_heawood() -> gc.Graph:
    lines = [{i % 7, (i + 1) % 7, (i + 3) % 7} for i in range(7)]
    return gc.Graph.from_edges(14, [(p, 7 + l) for p in range(7) for l in range(7) if p not in lines[l]])


def compose(a, b):
    """Apply a, then b."""
    return tuple(b[a[i]] for i in range(len(a)))


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def order(g) -> int:
    ident = tuple(range(len(g)))
    k, h = 1, g
    while h != ident:
        h = compose(h, g)
        k += 1
    return k


def automorphism_generators(g: gc.Graph):
    ng = pynauty.Graph(g.n, adjacency_dict={v: g.neighbors(v) for v in range(g.n)})
    gens, *_ = pynauty.autgrp(ng)
    return [tuple(x) for x in gens]


def random_involution(gens, fixed: int, rng: random.Random):
    n = len(gens[0])
    ident = tuple(range(n))
    while True:
        g = ident
        for _ in range(60):
            g = compose(g, rng.choice(gens))
        k = order(g)
        if k % 2:
            continue
        t = ident
        for _ in range(k // 2):
            t = compose(t, g)
        if sum(t[i] == i for i in range(n)) == fixed:
            return t


def conjugacy_class(t, gens):
    seen, todo = {t}, [t]
    while todo:
        x = todo.pop()
        for g in gens:
            y = compose(compose(inverse(g), x), g)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return sorted(seen)


def extend(g: gc.Graph, cls) -> gc.Graph:
    n, m = g.n, len(cls)
    edges = [(0, 1 + i) for i in range(n)]
    edges += [(1 + i, 1 + j) for i, j in g.edges()]
    edges += [(1 + i, 1 + n + a) for a, t in enumerate(cls) for i in range(n) if t[i] == i]
    edges += [
        (1 + n + a, 1 + n + b)
        for a, b in itertools.combinations(range(m), 2)
        if order(compose(cls[a], cls[b])) == 4
    ]
    return gc.Graph.from_edges(1 + n + m, edges)


def build(seed: int = 1) -> gc.Graph:
    rng = random.Random(seed)
    g = co_heawood()
    for fixed, want in STEPS:
        gens = automorphism_generators(g)
        cls = conjugacy_class(random_involution(gens, fixed, rng), gens)
        g = extend(g, cls)
        got = gc.verify_srg(g).params
        if got != want:
            raise SystemExit(f"step produced {got}, expected {want}")
        print(f"{want}: {len(cls)} involutions", file=sys.stderr)
    return g


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "g2_4.g6"
    gc.write_graph6_file(out, build())
    print(f"wrote {out}", file=sys.stderr)
