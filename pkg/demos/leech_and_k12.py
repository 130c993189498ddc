"""Build the Leech lattice from sqrt(2)A2^12 and print its first shells and the K12 data."""

from orbicheck import characters, lattices

leech = lattices.leech()
print("Leech: rank", leech.rank, "det", leech.det(), "even", leech.is_even())
theta = lattices.theta_series(leech, 4)
oracle = characters.leech_theta_oracle(4)
for e in range(5):
    print(f"  q^{e}: {str(theta[e]):>12}  (E4^3 - 720 Delta: {str(oracle[e])})")

k = lattices.k12()
print("K12: det", k.det(), "invariant factors", lattices.invariant_factors(k))
counts = lattices.fincke_pohst_counts(lattices.GramLattice(k.basis), 4)
print("K12 vectors by norm:", {int(n): c for n, c in counts.items()})
print("[Lambda : K12 + K12] =", lattices.lattice_lc().index_in(leech))
