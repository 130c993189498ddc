from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from orbicheck import fusion
from orbicheck.fusion import IDENTITY, ModuleLabel, fuse

coset = st.tuples(*[st.integers(0, 2)] * 6)
labels = st.one_of(
    st.builds(ModuleLabel.S, coset, st.integers(0, 2)),
    st.builds(ModuleLabel.T, coset, st.integers(0, 2), st.sampled_from([1, 2])),
)


@given(labels)
def test_vector_roundtrip(m):
    assert ModuleLabel.from_vector(m.to_vector()) == m
    assert ModuleLabel.parse(str(m)) == m


@given(labels, labels)
def test_fusion_is_vector_addition(m, n):
    assert fuse(m, n).to_vector().tolist() == ((m.to_vector() + n.to_vector()) % 3).tolist()
    assert fuse(m, n) == fuse(n, m)


@given(labels, labels, labels)
def test_associative(m, n, p):
    assert fuse(fuse(m, n), p) == fuse(m, fuse(n, p))


@given(labels)
def test_identity_and_order_three(m):
    assert fuse(m, IDENTITY) == m
    assert fuse(m, fuse(m, m)) == IDENTITY


@settings(max_examples=200)
@given(labels, labels)
def test_closed_and_polar_forms_agree(ring, m, n):
    assert ring.bform_closed(m, n) == ring.bform_polar(m, n)


def test_weight_conventions(ring):
    assert ring.three_weight(IDENTITY) == 0
    t = ModuleLabel.T((0,) * 6, 0, 1)
    assert ring.three_weight(t) == 2
    assert ring.qform(t) == 1
    s = ModuleLabel.S((1, 0, 0, 0, 0, 0), 0)
    assert ring.qform(s) == 1  # weight-1 coset: 3|a|^2 = 4


def test_array_fusion_matches_case_rules():
    rng = np.random.default_rng(3)
    v1, v2 = rng.integers(0, 3, (200, 8)), rng.integers(0, 3, (200, 8))
    a, x, i = fusion.fuse_arrays(*fusion.vectors_to_labels(v1), *fusion.vectors_to_labels(v2))
    got = fusion.labels_to_vectors(a, x, i)
    assert (got == (v1 + v2) % 3).all()


def test_sampled_checks(ring):
    rng = np.random.default_rng(0)
    assert fusion.check_fusion_is_vector_addition(ring, 4, rng) == 0
    assert fusion.check_commutative(ring, 4, rng) == 0
    assert fusion.check_bilinear(ring, 4, rng) == 0
    assert fusion.check_associative_sample(200, rng) == 0
    assert fusion.check_q_is_quadratic(ring) == 0


def test_minus_type(ring):
    assert len(fusion.radical(ring)) == 0
    assert len(ring.singular_vectors()) == 2132
    assert int((ring.disc.qform() == 0).sum()) - 1 == 224


def test_bad_labels():
    with pytest.raises(fusion.FusionError):
        ModuleLabel.T((0,) * 6, 0, 0)
    with pytest.raises(fusion.FusionError):
        ModuleLabel("S", (0,) * 6, 0, 1)
    with pytest.raises(fusion.FusionError):
        ModuleLabel.S((0,) * 5, 0)
    with pytest.raises(fusion.FusionError):
        ModuleLabel.parse("U:000000:0")


def test_s_lowest_weights_match_q(ring):
    from fractions import Fraction
    for w in range(7):
        a = (1,) * w + (0,) * (6 - w)
        lw = ring.s_lowest_weight(a)
        assert (3 * lw).denominator == 1
        assert int(3 * lw) % 3 == ring.three_weight(ModuleLabel.S(a, 0))
    assert ring.s_lowest_weight((0,) * 6) == 0
    assert ring.s_lowest_weight((1, 0, 0, 0, 0, 0)) == Fraction(2, 3)
