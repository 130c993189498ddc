from hypothesis import given, settings, strategies as st
import numpy as np

from orbicheck import f3

mats = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n), min_size=1, max_size=6))


@given(mats)
def test_rank_nullity(rows):
    m = np.array(rows, dtype=np.int64)
    ns = f3.nullspace(m)
    assert f3.rank(m) + len(ns) == m.shape[1]
    if len(ns):
        assert not ((m @ ns.T) % 3).any()


@settings(max_examples=50)
@given(st.integers(1, 5), st.integers(0, 10 ** 6))
def test_inverse_of_random_invertible(n, seed):
    rng = np.random.default_rng(seed)
    m = rng.integers(0, 3, (n, n))
    if f3.rank(m) < n:
        return
    assert (f3.mod3(f3.inverse(m) @ m) == np.eye(n, dtype=np.int64)).all()


def test_span_and_index():
    basis = np.array([[1, 0, 2], [0, 1, 1]])
    sp = f3.span(basis)
    assert len(sp) == 9
    assert len(set(f3.index_of(sp).tolist())) == 9
    assert f3.solve_left(basis, np.array([2, 1, 2])) is not None
    assert f3.solve_left(basis, np.array([0, 0, 1])) is None


def test_all_vectors_order():
    v = f3.all_vectors(3)
    assert (f3.index_of(v) == np.arange(27)).all()
    assert f3.square_class(1) == 0 and f3.square_class(2) == 1
