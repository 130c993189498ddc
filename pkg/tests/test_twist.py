from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from orbicheck import twist
from orbicheck.exact import CycRational


@pytest.fixture(scope="module")
def coeffs():
    return [twist.compute_cmn(i, 8) for i in range(3)]


def test_constant_terms_vanish(coeffs):
    assert all(c[(0, 0)] == CycRational(0) for c in coeffs)


def test_symmetries(coeffs):
    c0, c1, c2 = coeffs
    assert c1.conj() == c2
    assert c0.swap() == c0
    assert all(c0[k].is_real() for k in c0.keys())


def test_low_order_values(coeffs):
    # c^0_{11} from the second-order expansion of the log
    assert coeffs[0][(1, 1)] == CycRational(Fraction(1, 27))
    assert coeffs[0][(1, 0)] == CycRational(Fraction(-1, 6))


def test_stability(coeffs):
    assert twist.compute_cmn(2, 11).truncate(8) == coeffs[2]


@given(st.fractions(max_denominator=9), st.integers(0, 6))
def test_binomial_series(alpha, n):
    b = twist.binomial_series(alpha, n)
    assert b[0] == 1
    if n >= 1:
        assert b[1] == alpha


def test_log_argument_is_normalised():
    for r in (1, 2):
        assert twist.log_argument(r, 4).constant() == CycRational(1)
    with pytest.raises(twist.TwistError):
        twist.log_argument(0, 4)
    with pytest.raises(twist.TwistError):
        twist.compute_cmn(0, twist.MAX_ORDER + 1)


def test_export_table():
    lines = twist.export_table(3).splitlines()
    assert len(lines) == 3 * 10
    m, n, i, re, im = lines[0].split()
    assert (m, n, i, re, im) == ("0", "0", "0", "0", "0")
