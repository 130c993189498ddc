from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from orbicheck import characters as ch
from orbicheck import lattices
from orbicheck.exact import QSeries


def test_delta_matches_pentagonal():
    assert ch.delta(8) == ch.pentagonal_eta24(8)
    d = ch.delta(3)
    assert [d[k] for k in (1, 2, 3)] == [1, -24, 252]


def test_e4_and_j():
    e4 = ch.eisenstein_E4(3)
    assert [e4[k] for k in range(4)] == [1, 240, 2160, 6720]
    j = ch.j_series(3)
    assert [j[k] for k in (-1, 0, 1, 2, 3)] == [1, 0, 196884, 21493760, 864299970]


@given(st.integers(-30, 30), st.integers(1, 12))
def test_euler_power_multiplies(r, n):
    a = ch.euler_power(r, n)
    b = ch.euler_power(-r, n)
    prod = [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]
    assert prod == [1] + [0] * (n - 1)


def test_tau_trace_quotient():
    tau = ch.eta_quotient(ch.EtaQuotientSpec(((1, 12), (3, -12))), 3)
    assert [tau[k] for k in (-1, 0, 1, 2, 3)] == [1, -12, 54, -76, -243]
    assert tau == ch.tau_trace_oracle(3)


def test_twisted_quotient_equals_fock_count():
    tw = ch.eta_quotient(ch.EtaQuotientSpec(((1, 12), (Fraction(1, 3), -12))), 3)
    assert tw == ch.fock_character(ch.LEECH_PROFILE, 3)
    assert [tw[Fraction(k, 3)] for k in (1, 2, 3, 4)] == [1, 12, 90, 508]


def test_fock_brute_force_agrees():
    for profile in (ch.LEECH_PROFILE, ch.UNTWISTED_24):
        counts = ch.fock_counts(profile, 5)
        assert [ch.fock_enumerate(profile, k) for k in range(5)] == counts
    assert ch.fock_enumerate(ch.UNTWISTED_24, 6) == 324
    assert ch.LEECH_PROFILE.vacuum_weight == Fraction(4, 3)


def test_vsharp_components(leech):
    theta = lattices.theta_series(leech, 5)
    comp = ch.ch_vsharp_components(4, theta)
    assert comp.total == ch.j_series(4)
    assert comp.fixed[1] == 65664 and comp.twisted_integral[1] == 65610
    assert comp.twisted_integral.valuation() == 1
    assert [comp.fixed[k] for k in (2, 3, 4)] == [7164536, 288099828, 6748619544]


def test_defect_factor():
    assert ch.defect_factor(lattices.build_tau(12).matrix) == 729
    with pytest.raises(ch.CharacterError):
        ch.defect_factor([[-1]])


def test_bad_eta_factors():
    with pytest.raises(ch.CharacterError):
        ch.EtaQuotientSpec(((0, 1),))
    with pytest.raises(ch.CharacterError):
        ch.EtaQuotientSpec(((Fraction(1, 7), 1),))


def test_series_cache(tmp_path):
    calls = []

    def build():
        calls.append(1)
        return QSeries({0: 1, 1: 5}, trunc=3)

    a = ch.cached_series(tmp_path, "s", build)
    b = ch.cached_series(tmp_path, "s", build)
    assert a == b and len(calls) == 1
    (tmp_path / "series" / "s.txt").write_text("# denom 72 trunc 3\n0/1 1/1\n1/1 6/1\n")
    assert ch.cached_series(tmp_path, "s", build) == a
    assert len(calls) == 2
