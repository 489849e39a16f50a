from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lincat.scalars import (CycloScalar, DenominatorError, ExactMatrix, ModEchelon, bareiss_echelon, cyclo_arith,
                            cyclotomic_poly, euler_phi, mat_column_basis, mat_nullspace, mat_rank, mat_solve,
                            reduce_mod, root_of_unity, same_span)
from lincat.scalars.modular import primes_one_mod

ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 12]
small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def cyclo(m):
    return st.lists(small, min_size=euler_phi(m), max_size=euler_phi(m)).map(lambda cs: CycloScalar(m, cs))


def cyclo_triples():
    return st.sampled_from(ORDERS).flatmap(lambda m: st.tuples(cyclo(m), cyclo(m), cyclo(m)))


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(m) for m in (1, 2, 6, 7, 12)] == [1, 1, 2, 6, 4]


def test_roots_of_unity():
    for m in ORDERS:
        z = CycloScalar.zeta(m)
        assert z ** m == 1
        total = sum((CycloScalar.zeta(m, k) for k in range(m)), CycloScalar.zero(m))
        assert total == (1 if m == 1 else 0)
    assert CycloScalar.zeta(4) ** 2 == -1
    assert CycloScalar.zeta(3) + CycloScalar.zeta(3, 2) == -1


@settings(max_examples=60, deadline=None)
@given(cyclo_triples())
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == 0
    if b:
        assert (a / b) * b == a
        assert b * b.inverse() == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ORDERS).flatmap(cyclo))
def test_wire_form_roundtrip(a):
    assert CycloScalar.parse(a.m, str(a)) == a


def test_cyclo_arith_ops():
    a, b = CycloScalar.zeta(6), CycloScalar.from_rational(6, Fraction(1, 2))
    assert cyclo_arith(a, b, "add") == a + b
    assert cyclo_arith(a, b, "div") == a * 2
    with pytest.raises(ZeroDivisionError):
        cyclo_arith(a, CycloScalar.zero(6), "div")
    with pytest.raises(ValueError):
        cyclo_arith(a, CycloScalar.zero(4), "add")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 4, 5, 8]).flatmap(lambda m: st.tuples(cyclo(m), cyclo(m))))
def test_reduction_is_a_ring_map(ab):
    a, b = ab
    m = a.m
    p = next(primes_one_mod(m, 100))
    w = root_of_unity(m, p)
    ra, rb = reduce_mod(a, p, w), reduce_mod(b, p, w)
    assert reduce_mod(a + b, p, w) == ra + rb
    assert reduce_mod(a * b, p, w) == ra * rb


def test_reduction_examples():
    assert reduce_mod(CycloScalar.from_rational(1, Fraction(1, 2)), 13, 1).residue == 7
    assert reduce_mod(CycloScalar.zeta(4), 13, 5).residue == 5
    with pytest.raises(DenominatorError):
        reduce_mod(CycloScalar.from_rational(1, Fraction(1, 13)), 13, 1)
    with pytest.raises(ValueError):
        reduce_mod(CycloScalar.zeta(4), 13, 3)


def fraction_rank(rows):
    """Plain Gauss-Jordan over Fractions: the oracle for rank tests."""
    A = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][c] != 0:
                f = A[i][c] / A[rank][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


matrices = st.integers(1, 6).flatmap(lambda c: st.lists(
    st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=6))


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_and_kernel_against_fraction_oracle(rows):
    M = ExactMatrix(rows, 1)
    r = mat_rank(M)
    assert r == fraction_rank(rows)
    K = mat_nullspace(M)
    assert K.cols == M.cols - r
    if K.cols:
        assert all(not x for row in (M @ K).entries for x in row)
    assert len(mat_column_basis(M)) == r


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_rank_with_duplicate_rows_over_q_zeta(rows):
    # rank is invariant under scaling rows by units of Q(zeta_5) and repeating rows
    z = CycloScalar.zeta(5)
    scaled = [[z * x for x in row] for row in rows] + [[(z + 2) * x for x in rows[0]]]
    assert mat_rank(ExactMatrix(scaled, 5)) == fraction_rank(rows)


def test_cyclotomic_kernel():
    z = CycloScalar.zeta(3)
    M = ExactMatrix([[1, z, z * z], [z * z, 1, z]], 3)
    K = mat_nullspace(M)
    assert K.cols == 2
    for col in K.columns():
        for row in M.entries:
            assert sum((a * b for a, b in zip(row, col)), CycloScalar.zero(3)) == 0


def test_solve_and_span():
    M = ExactMatrix([[1, 1], [1, 2]], 1)
    x = mat_solve(M, [3, 5])
    assert x == [1, 2]
    assert mat_solve(ExactMatrix([[1, 1], [2, 2]], 1), [1, 3]) is None
    A = ExactMatrix([[1, 0], [0, 1], [1, 1]], 1)
    B = ExactMatrix([[1, 1], [1, -1], [2, 0]], 1)
    assert same_span(A, B)
    assert not same_span(A, ExactMatrix([[1], [0], [0]], 1))


def test_bareiss_integer_exactness():
    rows = [[2, 4, 6], [1, 3, 5], [3, 5, 7]]
    ech, piv = bareiss_echelon(rows, 3)
    assert piv == [0, 1]
    assert len(ech) == 2


def test_mod_echelon_labels_and_nullspace():
    p = 101
    E = ModEchelon(3, p)
    new = E.add([[1, 2, 3], [2, 4, 6]], labels=["a", "b"])
    assert new == ["a"]
    assert E.add([[0, 1, 1]]) == [2]
    K = E.nullspace()
    assert K.shape == (1, 3)
    assert not (E.E @ K[0] % p).any()


def test_unlucky_guide_prime_falls_back_to_exact_elimination():
    from lincat.scalars import guide_prime
    P, _ = guide_prime(1)
    M = ExactMatrix([[P, 0], [0, 1]], 1)
    assert mat_rank(M) == 2
    assert mat_nullspace(M).cols == 0
