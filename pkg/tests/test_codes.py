from hypothesis import given, strategies as st
import pytest

from orbicheck import codes


def test_d_parameters():
    d = codes.ternary_d()
    assert d.size == 729
    assert d.min_weight() == 3
    assert d.weight_distribution() == {0: 1, 3: 24, 6: 192, 9: 512}
    assert codes.is_self_orthogonal_f3(d)


def test_hexacode_parameters():
    h = codes.hexacode()
    assert (h.length, h.dimension, h.size) == (6, 3, 64)
    assert h.weight_distribution() == {0: 1, 4: 45, 6: 18}
    assert not codes.hermitian_trace_products(h).any()


def test_eps_s_stabilises_both_glue_codes():
    assert codes.is_invariant(codes.ternary_d(), codes.swap_halves_map(12, "F3"))
    assert codes.is_invariant(codes.glue_code_c(), codes.swap_halves_map(12, "F4"))
    assert codes.is_invariant(codes.ternary_d(), codes.MonomialMap.identity(12))


def test_plain_swap_without_sign_does_not_stabilise_d():
    assert not codes.is_invariant(codes.ternary_d(), codes.swap_halves_map(12, "F3", negate_second=False))


def test_text_roundtrip():
    for c, fld in ((codes.ternary_d(), "F3"), (codes.hexacode(), "F4")):
        assert codes.LinearCode.from_text(c.to_text(), fld).word_set() == c.word_set()


def test_invalid_codes_rejected():
    with pytest.raises(codes.CodeError):
        codes.LinearCode("F3", ((1, 0), (2, 0)))
    with pytest.raises(codes.CodeError):
        codes.LinearCode("F3", ((1, 3),))
    with pytest.raises(codes.CodeError):
        codes.LinearCode("F5", ((1,),))
    with pytest.raises(codes.CodeError):
        codes.MonomialMap((0, 0), (1, 1))


perms = st.permutations(list(range(6)))
signs = st.lists(st.sampled_from([1, 2]), min_size=6, max_size=6)


@given(perms, signs, perms, signs)
def test_monomial_compose_and_inverse(p1, s1, p2, s2):
    a = codes.MonomialMap(tuple(p1), tuple(s1))
    b = codes.MonomialMap(tuple(p2), tuple(s2))
    word = (1, 2, 0, 1, 1, 2)
    assert a.compose(b).apply_word(word) == a.apply_word(b.apply_word(word))
    assert a.inverse().apply_word(a.apply_word(word)) == word
