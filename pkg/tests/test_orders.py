from hypothesis import given, strategies as st
import pytest

from orbicheck import orders
from orbicheck.orders import FactoredInteger


@given(st.integers(1, 10 ** 12), st.integers(1, 10 ** 12))
def test_factored_arithmetic(a, b):
    fa, fb = FactoredInteger(a), FactoredInteger(b)
    assert (fa * fb).value == a * b
    assert (fa * fb / fb) == fa
    assert fa.divides(fa * fb)


def test_bad_inputs():
    with pytest.raises(ValueError):
        FactoredInteger(0)
    with pytest.raises(ValueError):
        FactoredInteger({4: 1})
    with pytest.raises(ValueError):
        FactoredInteger(6) / FactoredInteger(4)


def test_atlas_orders():
    assert orders.SUZ.value == 448345497600
    assert orders.PSU4_3.value == 3265920
    assert orders.orthogonal_order(4, 3, "minus").value == 40607874478080
    assert orders.omega_minus_8_3().value * 2 == 1066 * 729 * 8 * orders.PSU4_3.value


def test_suites_all_pass():
    checks = orders.shape_arithmetic_suite() + orders.dimension_sums()
    assert len(checks) >= 8
    assert all(c.status == "pass" for c in checks)


def test_singular_counts():
    assert orders.singular_vector_count(4, 3, "minus") == 2132
    assert orders.singular_vector_count(4, 3, "plus") == 2240
    assert orders.singular_vector_count(3, 3, "minus") == 224
