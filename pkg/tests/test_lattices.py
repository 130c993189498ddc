from fractions import Fraction

import numpy as np
import pytest

from orbicheck import characters, lattices
from orbicheck.lattices import GlueVectorMap


def test_leech_is_even_unimodular(leech):
    assert leech.rank == 24
    assert leech.det() == 1
    assert leech.is_even()


def test_leech_theta_matches_modular_form(leech):
    assert lattices.theta_series(leech, 4) == characters.leech_theta_oracle(4)


def test_leech_has_no_roots(leech):
    counts = lattices.short_vectors(leech, 4)
    assert min(counts) == 4
    assert counts[Fraction(4)] == 196560


def test_enumeration_cap(leech):
    with pytest.raises(lattices.LatticeError):
        lattices.short_vectors(leech, 8)


def test_index_of_lc(leech):
    lc = lattices.lattice_lc()
    assert leech.contains_lattice(lc)
    assert lc.index_in(leech) == 729
    assert lattices.orthogonal_sum(lattices.k12(0), lattices.k12(1)) == lc


def test_k12_invariants():
    k = lattices.k12()
    assert k.det() == 729
    assert k.is_even()
    assert lattices.invariant_factors(k) == (3,) * 6
    counts = lattices.fincke_pohst_counts(lattices.GramLattice(k.basis), 4)
    assert counts == {0: 1, 4: 756}
    assert lattices.norm_counts(k, 4) == counts


def test_fincke_pohst_on_a2():
    a2 = lattices.GramLattice([[6, 0], [0, 6]])
    # sqrt(2)A2: norms 4 (6 vectors), 12 (6), 16 (6)
    assert lattices.fincke_pohst_counts(a2, 16) == {0: 1, 4: 6, 12: 6, 16: 6}


def test_tau(leech):
    tau = lattices.build_tau(12)
    assert tau.preserves_form() and tau.preserves(leech)
    assert tau.power(3).is_identity() and not tau.is_identity()
    assert tau.fixed_space_dim() == 0
    assert lattices.tau_trivial_on_discriminant(lattices.k12(), lattices.build_tau(6))


def test_h_swaps_copies_and_commutes_with_tau(leech):
    h = lattices.build_h(12)
    tau = lattices.build_tau(12)
    assert h.preserves(leech) and h.preserves(lattices.lattice_lc())
    assert h.image(lattices.k12(0)) == lattices.k12(1)
    assert ((h @ tau).matrix == (tau @ h).matrix).all()
    assert h.norm_spot_check(leech, 200)


def test_discriminant_form_is_weight_mod_3():
    disc = lattices.K12Discriminant()
    weights = (disc.coords != 0).sum(axis=1)
    assert (disc.qform() == weights % 3).all()
    table = disc.three_inner_table()
    assert (table == (disc.coords @ disc.coords.T) % 3).all()


@pytest.mark.parametrize("weight,minimum", [(1, Fraction(4, 3)), (2, Fraction(8, 3)), (3, 2),
                                            (4, Fraction(4, 3)), (6, 2)])
def test_coset_minima(weight, minimum):
    disc = lattices.K12Discriminant()
    a = [1] * weight + [0] * (6 - weight)
    assert disc.coset_min_norm(a) == minimum


def test_glue_map_calibration():
    assert GlueVectorMap().check() == []
    swapped = GlueVectorMap(rep3=((0, 0), (2, 4), (4, 2)))
    assert "rep3(1) lies in the wrong class" in swapped.check()
    other_rep = GlueVectorMap(rep3=((0, 0), (-2, -4), (2, 4)))  # same cosets, other representatives
    assert other_rep.check() == []
    wrong = GlueVectorMap(rep4=((0, 0), (3, 0), (3, 3), (0, 3)))
    assert wrong.check()
    shifted = GlueVectorMap(rep3=((0, 0), (1, 2), (2, 4)))
    assert shifted.check()


def test_uncalibrated_glue_raises():
    odd = GlueVectorMap(rep3=((0, 0), (1, 2), (2, 1)))
    with pytest.raises(lattices.GlueCalibrationError):
        lattices.leech(odd)


def test_text_roundtrip(leech):
    again = lattices.GramLattice.from_text(leech.to_text())
    assert again == leech
    rng = np.random.default_rng(1)
    for v in leech.random_vectors(20, rng):
        assert leech.contains(v)
    assert not leech.contains([1] + [0] * 23)
