import numpy as np

from orbicheck import f3, orthogonal
from orbicheck.extension import LabelPair, SubspaceF3
from orbicheck.fusion import ModuleLabel


def test_subspace_basics():
    s = SubspaceF3(np.array([[1, 0, 0], [0, 1, 0], [1, 1, 0]]))
    assert s.dim == 2 and s.size == 9
    assert s.contains(np.array([2, 1, 0])) and not s.contains(np.array([0, 0, 1]))
    g = np.eye(3, dtype=np.int64)
    assert s.perp(g) == SubspaceF3(np.array([[0, 0, 1]]))


def test_g6_and_u(geometry):
    assert geometry.G6.dim == 6
    assert geometry.g6_isotropic() == 0 and geometry.g6_self_dual()
    assert geometry.U.size == 3 ** 7 and geometry.Uperp.dim == 9
    assert geometry.is_totally_singular(geometry.U)


def test_exactly_two_extensions(geometry):
    assert len(geometry.lines) == 2
    assert all(geometry.is_totally_singular(s) and s.dim == 8 for s in geometry.lines)
    assert f3.rank(geometry.quotient_gram()) == 2
    assert geometry.hyperbolic_pair() is not None


def test_s_lambda(geometry):
    assert geometry.SLambda.size == 6561
    assert len(geometry.s_type_of_uperp()) == 6561


def test_ssharp_is_a_graph_of_an_anti_isometry(geometry):
    assert geometry.Ssharp.size == 6561
    assert (geometry.graph_partners() == 1).all()
    assert geometry.eta_q_check() == 0
    assert not geometry.eta_is_isometry()


def test_twist_and_grading(geometry):
    assert geometry.twist_pattern() == (4374, 4374)
    sizes, level0_is_u = geometry.phi_levels(ModuleLabel.S((0,) * 6, 1))
    assert sizes == [2187, 2187, 2187] and level0_is_u
    el = geometry.Ssharp.elements()
    assert geometry.phi_exponent(ModuleLabel.S((0,) * 6, 1), el[5]) in (0, 1, 2)


def test_pair_map(geometry, rspace):
    rng = np.random.default_rng(5)
    for _ in range(5):
        g = orthogonal.reflection(rspace, orthogonal.random_anisotropic(rspace, rng))
        assert geometry.pair_map_preserves(g)


def test_h_action(geometry):
    ok, a1, a2 = geometry.h_label_action_check()
    assert ok
    assert (a1 == (-np.eye(6, dtype=np.int64)) % 3).all()
    assert (a2 == np.eye(6, dtype=np.int64)).all()


def test_exports(geometry):
    lines = geometry.eta_table().splitlines()
    assert len(lines) == 6561
    first, second = lines[0].split(" -> ")
    assert ModuleLabel.parse(first) == ModuleLabel.from_vector(np.zeros(8, dtype=np.int64))
    basis = geometry.ssharp_basis_text().splitlines()
    assert len(basis) == 8
    pair = LabelPair.from_vector(geometry.Ssharp.basis[0])
    assert (pair.to_vector() == geometry.Ssharp.basis[0]).all()
    assert f3.rank(geometry.Ssharp.basis) == 8
