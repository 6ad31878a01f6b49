"""Lift the G2(4) set into higher dimensions and check the witness numerically."""
import numpy as np

from srgborsuk import borsuk, graph, representation

g = graph.load_g2_4()
rep = representation.rep_parameters(graph.G2_4_PARAMS)
x = representation.realize_coordinates(g, rep)

for n in (1, 2, 3):
    spec = borsuk.LiftSpec.from_inner_products(rep.p, rep.q, n)
    print(f"n={n}: alpha={spec.alpha:.6f} gamma={spec.gamma:.6f} R={spec.radius:.6f}")

print("\nblocks extend  points  dim  distances^2            claim")
for blocks in (1, 2):
    for extend in range(3):
        w = borsuk.lift_witness(x, rep.p, rep.q, blocks, extend, 84, 5)
        d = ", ".join(f"{v:.6f}" for v in w.distances)
        print(f"{blocks:6d} {extend:6d} {w.points.shape[0]:7d} {w.points.shape[1]:4d}  {d:22s} {w.certificate.claim()}")
        assert w.certificate.claim() == borsuk.family_bound("g24", blocks, extend).claim()

# far pairs of the block set: non-adjacent inside a block, or in different blocks
pts = borsuk.block_construction(x, rep.p, rep.q, 2)
far = borsuk.far_pair_graph(pts)
print("\nfar pairs", far.num_edges(), "expected", 2 * (416 * 315 // 2) + 416 * 416)
print("norms within", np.abs(np.linalg.norm(pts, axis=1) - 1).max(), "of 1")
