import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from orbicheck import perm
from orbicheck.perm import PermGroup


def cycle(n, pts):
    p = np.arange(n)
    for a, b in zip(pts, pts[1:] + pts[:1]):
        p[a] = b
    return p


def test_symmetric_and_alternating():
    n = 7
    s = PermGroup(n, [cycle(n, [0, 1]), cycle(n, list(range(n)))])
    assert s.order() == math.factorial(n)
    a = PermGroup(n, [cycle(n, [0, 1, 2]), cycle(n, [k for k in range(n)])])
    assert a.order() == math.factorial(n) // 2
    assert not a.contains(cycle(n, [0, 1]))
    assert s.contains(cycle(n, [0, 1]))


def test_cyclic_and_trivial():
    assert PermGroup(5, [cycle(5, [0, 1, 2, 3, 4])]).order() == 5
    assert PermGroup(4, []).order() == 1


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_elements_are_members(seed):
    g = PermGroup(8, [cycle(8, [0, 1, 2]), cycle(8, [3, 4, 5, 6, 7]), cycle(8, [2, 3])], seed=seed)
    for _ in range(5):
        assert g.contains(g.random_element())


def test_orbits_and_stabilizers():
    g = PermGroup(6, [cycle(6, [0, 1, 2]), cycle(6, [3, 4])])
    assert sorted(g.orbit(0).tolist()) == [0, 1, 2]
    assert perm.orbit_and_stabilizer(g, 3) == (2, 3)
    classes = np.array([0, 0, 0, 1, 1, 2])
    assert perm.orbit_and_stabilizer(g, 0, classes) == (1, 6)


def test_text_roundtrip():
    g = PermGroup(7, [cycle(7, [0, 1]), cycle(7, list(range(7)))])
    h = PermGroup.from_text(g.to_text())
    assert h.order() == 5040
    with pytest.raises(perm.PermError):
        PermGroup.from_text("3\n0 1\n0 0 1\n")


def test_helpers():
    p = cycle(5, [0, 1, 2])
    assert perm.order_of(p) == 3
    assert perm.is_identity(perm.compose(p, perm.inverse(p)))
