"""Assemble ch V# from the fixed-point and twisted parts and compare with J."""

from orbicheck import characters, lattices

order = 4
theta = lattices.theta_series(lattices.leech(), order + 1)
comp = characters.ch_vsharp_components(order, theta)
j = characters.j_series(order)
print(f"{'exp':>4} {'fixed':>14} {'twisted':>14} {'total':>14} {'J':>14}")
for e in range(-1, order + 1):
    row = [comp.fixed[e], comp.twisted_integral[e], comp.total[e], j[e]]
    print(f"{e:>4} " + " ".join(f"{str(c):>14}" for c in row))
