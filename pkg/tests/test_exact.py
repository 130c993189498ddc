from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from orbicheck.exact import CycRational, F4Elem, QSeries, SeriesError

fracs = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
cyc = st.builds(CycRational, fracs, fracs)


@given(cyc, cyc, cyc)
def test_cyc_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(cyc)
def test_cyc_inverse_and_norm(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
        return
    assert a * a.inverse() == CycRational(1)
    assert (a * a.conj()).is_real()
    assert a.conj().conj() == a


def test_xi_is_a_primitive_cube_root():
    xi = CycRational.xi()
    assert xi * xi * xi == CycRational(1)
    assert xi != CycRational(1)
    assert CycRational(1) + xi + xi * xi == CycRational(0)
    assert xi.conj() == CycRational.xi(2)


def test_f4_is_a_field():
    elems = [F4Elem(b) for b in range(4)]
    for a in elems[1:]:
        assert a * a.inverse() == F4Elem(1)
        assert a.frobenius() == a * a
    w = F4Elem(2)
    assert w * w + w + F4Elem(1) == F4Elem(0)
    with pytest.raises(ValueError):
        F4Elem(4)


def test_qseries_inverse_roundtrip():
    s = QSeries({0: 1, 1: -24, 2: 252, Fraction(1, 3): 5}, trunc=6)
    prod = s * s.inverse()
    assert prod == QSeries({0: 1}, trunc=6)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6), st.integers(0, 3))
def test_qseries_power_matches_repeated_product(coeffs, n):
    s = QSeries({k: c for k, c in enumerate(coeffs)}, trunc=8)
    direct = QSeries.monomial(0, 1)
    for _ in range(n):
        direct = direct * s
    assert s.pow_int(n).agrees_with(direct, upto=8)


def test_truncation_is_enforced():
    s = QSeries({0: 1, 1: 2}, trunc=3)
    with pytest.raises(SeriesError):
        s[4]
    assert s[2] == 0
    assert (s * QSeries({-1: 1}, trunc=None)).trunc == 2


def test_shift_and_text_roundtrip():
    s = QSeries({Fraction(1, 3): 7, 2: Fraction(-1, 2)}, trunc=5).shift(-1)
    assert s.valuation() == Fraction(-2, 3)
    assert s.trunc == 4
    assert QSeries.from_text(s.to_text()) == s


def test_exponent_grid_and_mismatched_denominators():
    with pytest.raises(SeriesError):
        QSeries({Fraction(1, 7): 1}, denom=72)
    with pytest.raises(SeriesError):
        QSeries({0: 1}, denom=72) + QSeries({0: 1}, denom=1)
    with pytest.raises(SeriesError):
        QSeries.zero(trunc=3).inverse()
