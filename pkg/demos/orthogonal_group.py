"""Schreier-Sims on O(R, q) acting on the 6561 labels (takes about 15 seconds)."""

from orbicheck import fusion, orders, orthogonal

space = orthogonal.QuadSpaceF3(fusion.FusionRing().gram())
print("type:", space.kind(), " singular vectors:", space.singular_count())
grp, gens = orthogonal.build_orthogonal_group(space, seed=0)
print("generators:", len(gens), " basic orbits:", grp.orbit_lengths())
print("order:", grp.order(), " closed form:", orders.orthogonal_order(4, 3, "minus").value)
