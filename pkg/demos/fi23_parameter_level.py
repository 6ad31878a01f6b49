"""The Fi23 bounds, worked out from parameters alone.

The 31671-vertex graph is never built: every step below is exact rational
arithmetic on (v, k, lambda, mu).
"""
from srgborsuk import borsuk, cliques
from srgborsuk.params import SrgParams, complement_params, slice_counts, spectrum
from srgborsuk.representation import rep_parameters, spectral_identity_check

fi23 = SrgParams(31671, 3510, 693, 351)
rep = rep_parameters(fi23)
print(fi23, "f =", spectrum(fi23).f, "p =", rep.p, "q =", rep.q)

# the Gram matrix is too big to build, so check its eigenvalues instead
for name, lhs, rhs in spectral_identity_check(fi23, rep).checks:
    print(f"  {name}: {lhs} == {rhs}")

second = SrgParams(693, 180, 51, 45)
comp = complement_params(second)
crep = rep_parameters(comp)
print("second subconstituent", second, "complement", comp, "q =", crep.q)
m = cliques.ratio_independence_bound(crep.q)
print(f"norm of a sum of {m + 1} such vectors: {cliques.clique_sum_norm(m + 1, crep.q)}")

bound = cliques.fi23_clique_bound(second)
print("clique number <=", bound.size)
print(borsuk.partition_lower_bound(fi23.v, bound.size, rep.dim).claim())

counts = slice_counts(fi23, 180)
print("common non-neighbours of a vertex, edge, triangle:", counts.n1, counts.n2, counts.n3)
for cert in borsuk.slice_bound(fi23, 180, bound.size, rep.dim):
    print("  ", cert.claim())
