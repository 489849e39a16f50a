from math import log

import pytest
from hypothesis import given, settings, strategies as st

from lincat.category import VecSpace
from lincat.ffield import characters, finite_field
from lincat.linearize import apply_echi, dim_echi_fast, hom_dim
from lincat.profiles import (EXPANSION_BITS, QInteger, asymptotic_check, ceil_sqrt, growth_table, ordered_bell,
                             ordered_bell_bruteforce, psi_lin, psi_vec, q_int, q_int_value, rows_to_csv,
                             rows_to_json)


def test_q_int_small_values():
    assert [q_int(n, 2) for n in range(5)] == [0, 1, 3, 7, 15]
    assert q_int(3, 3) == 13
    with pytest.raises(ValueError):
        q_int(-1, 2)
    with pytest.raises(ValueError):
        q_int(2, 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 60), st.integers(0, 60), st.integers(2, 9))
def test_q_int_addition_identity(a, b, q):
    assert q_int(a + b, q) == q_int(a, q) + q ** a * q_int(b, q)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 40), st.integers(2, 9))
def test_q_int_is_geometric_sum(n, q):
    assert q_int(n, q) == sum(q ** i for i in range(n))


@pytest.mark.parametrize("n", range(9))
def test_ordered_bell_against_bruteforce(n):
    assert ordered_bell(n) == ordered_bell_bruteforce(n)


def test_ordered_bell_values():
    assert [ordered_bell(n) for n in range(7)] == [1, 1, 3, 13, 75, 541, 4683]


def test_symbolic_q_integer_beyond_budget():
    n = EXPANSION_BITS + 1
    v = q_int_value(n, 2)
    assert isinstance(v, QInteger) and str(v) == "[%d]_2" % n
    assert str(ceil_sqrt(v)) == "ceil(sqrt([%d]_2))" % n
    assert q_int_value(10, 2) == 1023


def test_ceil_sqrt():
    assert [ceil_sqrt(x) for x in (1, 2, 4, 5, 15, 16)] == [1, 2, 2, 3, 4, 4]


def test_vec_row_with_decomposition():
    (row,) = growth_table("vec", 1, d=2, q=2, decompose=True)
    assert (row.n, row.psi_source, row.psi_lin, row.phi_exact) == (1, 4, 15, 7)
    assert row.phi_lower <= row.phi_exact <= row.phi_upper


def test_unit_object_profile_is_constant():
    rows = growth_table("vec", 5, d=1, q=3)
    assert [r.psi_source for r in rows] == [1] * 5
    assert [r.psi_lin for r in rows] == [1] * 5


@pytest.mark.parametrize("d,q,n_max", [(2, 2, 3), (2, 3, 2), (3, 2, 2)])
def test_row_invariants(d, q, n_max):
    for r in growth_table("vec", n_max, d=d, q=q):
        assert r.psi_lin == psi_lin(r.psi_source, q) == q_int(d ** (2 * r.n), q)
        assert r.phi_lower ** 2 >= r.psi_lin > (r.phi_lower - 1) ** 2
        assert r.phi_upper == r.psi_lin


def test_delannoy_rows():
    rows = growth_table("delannoy", 4, q=2)
    assert [r.psi_source for r in rows] == [3, 75, 4683, 545835]
    assert [r.psi_lin for r in rows[:2]] == [7, 2 ** 75 - 1]
    assert str(rows[3].psi_lin) == "[545835]_2"
    assert rows[3].to_json()["phi_lower"] == "ceil(sqrt([545835]_2))"


@pytest.mark.parametrize("F,d,n", [(finite_field(2), 1, 1), (finite_field(2), 2, 1), (finite_field(3), 1, 2),
                                   (finite_field(3), 2, 1), (finite_field(4), 1, 3)])
def test_psi_formula_counting_and_rank_paths_agree(F, d, n):
    formula = q_int(psi_vec(d, n), F.q)
    X = VecSpace(F, d ** n)
    counting = dim_echi_fast(X.hom_size(X), F.q)
    assert formula == counting
    for chi in characters(F):
        Y = apply_echi(X, chi)
        assert hom_dim(Y, Y) == formula


def test_asymptotic_check():
    rep = asymptotic_check(1, 64)
    assert rep.threshold == 1
    assert rep.indeterminate == [] and rep.psi_monotone
    # float cross-check away from the exact path
    for n in (2, 10, 30):
        assert log(ordered_bell(2 * n)) >= n * log(n)
    assert all(m > 0 for m in rep.margins)


def test_asymptotic_threshold_can_exceed_one():
    # the exact comparison a(2n) >= n^n is decided per n; on a one-point range the threshold is that point
    rep = asymptotic_check(5, 5)
    assert rep.threshold == 5 and rep.exact_ok == [True]


def test_serializers():
    rows = growth_table("vec", 2, d=2, q=2)
    text = rows_to_csv(rows)
    assert text.splitlines()[0] == "n,psi_source,psi_lin,phi_lower,phi_exact,phi_upper"
    assert text.splitlines()[1] == "1,4,15,4,,15"
    assert '"psi_lin": 15' in rows_to_json(rows)


def test_unknown_example():
    with pytest.raises(ValueError):
        growth_table("nope", 1)
