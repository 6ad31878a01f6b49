"""G2(4) graph: from adjacency to a two-distance set and a Borsuk bound.

Run with ``python demos/g24_two_distance_set.py``.
"""
import numpy as np

from srgborsuk import borsuk, cliques, graph, representation
from srgborsuk.params import spectrum

g = graph.load_g2_4()
params = graph.verify_srg(g).params
spec = spectrum(params)
print("parameters", params)
print("eigenvalues", spec.r, spec.s, "multiplicities", spec.f, spec.g)

# one unit vector per vertex, spanning the eigenspace of r
rep = representation.rep_parameters(params)
x = representation.realize_coordinates(g, rep)
print("inner products p =", rep.p, " q =", rep.q, " dimension", x.shape[1])

gram = x @ x.T
adj = g.to_numpy().astype(bool)
print("max error on adjacent pairs    ", np.abs(gram[adj] - float(rep.p)).max())
off = ~adj & ~np.eye(g.n, dtype=bool)
print("max error on non-adjacent pairs", np.abs(gram[off] - float(rep.q)).max())

# q < p, so the diameter is realised by non-adjacent pairs and a part of
# smaller diameter is a clique
print("diameter realised by", representation.diameter_class(rep.p, rep.q))

omega = cliques.max_clique(g)
print("clique number", omega.size, "witness", omega.witness)

chain = cliques.chain_clique_bound(
    g, 3, [graph.verify_srg(graph.local_subgraph(g, 0)).params,
           graph.verify_srg(graph.local_subgraph(graph.local_subgraph(g, 0), 0)).params],
    leaf_triangle_free=True,
)
for line in chain.provenance:
    print("  ", line)

cert = borsuk.partition_lower_bound(g.n, omega.size, rep.dim)
print(cert.claim())
