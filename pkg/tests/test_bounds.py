import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import InvalidArgumentError
from core.tools.bounds import (
    BOUNDS,
    exact_root,
    ineq2_6r_holds,
    ineq2_6r_scan,
    ineq2_hcf2_holds,
    ineq2_hcf2_max,
    ineq2_holds,
    ineq2_lhs,
    ineq2_survivors,
    poly_y6_holds,
    poly_y6_scan,
)


def test_exact_root():
    assert exact_root(729, 3) == 9
    assert exact_root(14641, 4) == 11
    with pytest.raises(InvalidArgumentError):
        exact_root(10, 2)


def test_subfield_inequality():
    assert ineq2_lhs(2401, 4) == 60 * 50
    assert ineq2_holds(2401, 4)
    assert not ineq2_holds(14641, 4)
    assert ineq2_holds(3721, 2)
    assert not ineq2_holds(4489, 2)
    with pytest.raises(InvalidArgumentError):
        ineq2_holds(121, 1)


def test_polynomial_boundary():
    assert poly_y6_holds(5)
    assert not poly_y6_holds(6)
    assert poly_y6_scan() == {"false_for_all": True, "largest_y_holding": 5, "value_at_lo": [44342, 117649]}


@given(st.integers(min_value=1, max_value=300))
def test_six_divides_r_is_the_polynomial(y):
    assert ineq2_6r_holds(y) == poly_y6_holds(y)


def test_six_divides_r_scan():
    assert ineq2_6r_scan() == {"fails_for_all": True, "checked": 194, "matches_polynomial": True}


def test_square_case_boundary():
    assert ineq2_hcf2_holds(121 ** 2)
    assert not ineq2_hcf2_holds(122 ** 2)
    assert ineq2_hcf2_max() == {"max_sqrt_q": 121, "max_q": 14641}


def test_survivors():
    survivors = ineq2_survivors()
    assert survivors == [121, 169, 289, 361, 529, 841, 961, 1369, 1681, 1849, 2209, 2401, 2809, 3481, 3721]
    assert 11 ** 4 not in survivors
    assert all(q % 5 in (1, 4) for q in survivors)


def test_bound_registry():
    assert set(BOUNDS) == {"poly_y6", "ineq2_6r", "ineq2_hcf2", "ineq2_survivors"}
    assert BOUNDS["ineq2_survivors"]()["survivors"][-1] == 3721
