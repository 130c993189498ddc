import numpy as np
import pytest

from orbicheck import orders, orthogonal
from orbicheck.perm import orbit


@pytest.mark.parametrize("n,kind", [(2, "plus"), (2, "minus"), (3, None), (4, "plus"), (4, "minus"), (5, None)])
def test_small_orders(n, kind):
    sp = orthogonal.standard_space(n, kind)
    assert sp.kind() == kind
    grp, _ = orthogonal.build_orthogonal_group(sp, seed=1)
    assert grp.order() == orders.orthogonal_group_order(n, 3, kind).value


@pytest.mark.parametrize("m,kind", [(1, "plus"), (1, "minus"), (2, "plus"), (2, "minus"), (3, "plus"), (3, "minus")])
def test_singular_counts(m, kind):
    sp = orthogonal.standard_space(2 * m, kind)
    assert sp.singular_count() == orders.singular_vector_count(m, 3, kind)


def test_omega_index_small():
    sp = orthogonal.standard_space(4, "minus")
    grp, _ = orthogonal.build_orthogonal_group(sp, seed=2)
    om, _ = orthogonal.build_omega(sp, seed=2)
    assert grp.order() == 4 * om.order()
    assert not om.contains(orthogonal.matrix_to_perm(sp, orthogonal.minus_identity(sp)))


def test_reflections(rspace):
    rng = np.random.default_rng(0)
    v = orthogonal.random_anisotropic(rspace, rng)
    r = orthogonal.reflection(rspace, v)
    assert orthogonal.is_isometry(rspace, r)
    assert orthogonal.is_identity_matrix((r @ r) % 3)
    assert ((v @ r) % 3 == (-v) % 3).all()
    isotropic = rspace.vectors[np.nonzero(rspace.qvalues == 0)[0][1]]
    with pytest.raises(orthogonal.OrthogonalError):
        orthogonal.reflection(rspace, isotropic)


def test_cartan_dieudonne_and_invariants(rspace):
    rng = np.random.default_rng(4)
    for k in range(1, 6):
        vs = [orthogonal.random_anisotropic(rspace, rng) for _ in range(k)]
        m = orthogonal.product_of_reflections(rspace, vs)
        back = orthogonal.cartan_dieudonne(rspace, m)
        assert (orthogonal.product_of_reflections(rspace, back) == m).all()
        assert len(back) % 2 == k % 2
    assert orthogonal.dickson_spinor(rspace, orthogonal.minus_identity(rspace))[0] == 0


def test_r_is_minus_type(rspace):
    assert rspace.is_nondegenerate()
    assert rspace.kind() == "minus"
    assert rspace.singular_count() == 2132


@pytest.mark.slow
def test_orthogonal_group_of_r(rspace, orth_group):
    assert orth_group.order() == 40607874478080
    sing = np.nonzero(rspace.qvalues == 0)[0]
    assert len(orbit(orth_group.strong_generators(), int(sing[1]))) == 2132
    assert all(orthogonal.preserves_q(rspace, g) for g in orth_group.strong_generators())
    assert orth_group.contains(orthogonal.matrix_to_perm(rspace, orthogonal.minus_identity(rspace)))


def test_degenerate_rejected():
    sp = orthogonal.QuadSpaceF3(np.array([[1, 0], [0, 0]]))
    assert not sp.is_nondegenerate()
    with pytest.raises(orthogonal.OrthogonalError):
        orthogonal.build_orthogonal_group(sp)
