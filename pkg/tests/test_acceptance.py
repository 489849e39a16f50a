"""Acceptance suite: ten criteria, each checked at its stated tolerance and
time limit. Every criterion prints one PASS/FAIL line (collected by
conftest.py under pytest, or printed directly when run as a script)."""

import random
import time
from functools import wraps

import pytest

from lincat.algebra import (NotSemisimpleError, block_decompose, echi_kuhn_algebra, gram_radical, kuhn_algebra,
                            object_length, random_semisimple_gma, segre, upper_triangular_algebra)
from lincat.category import VecSpace
from lincat.ffield import MonAlgElem, characters, finite_field, idempotent
from lincat.linearize import (apply_echi, categorical_dimension, categorical_trace, dim_echi_fast, hom_dim,
                              lin_snake_identities, trace_formula)
from lincat.profiles import asymptotic_check, ordered_bell, ordered_bell_bruteforce, psi_vec, q_int
from lincat.scalars import ExactMatrix, mat_rank
from lincat.suites import segre_product_instance

RESULTS = {}


def criterion(number, title, limit):
    """Record pass/fail and wall time; a run over ``limit`` seconds fails."""
    def wrap(fn):
        @wraps(fn)
        def run():
            start = time.perf_counter()
            ok = False
            try:
                fn()
                elapsed = time.perf_counter() - start
                assert elapsed < limit, "took %.1f s, limit %s s" % (elapsed, limit)
                ok = True
            finally:
                elapsed = time.perf_counter() - start
                RESULTS[number] = "CRITERION %2d: %s  %-46s %7.2f s (limit %s s)" % (
                    number, "PASS" if ok else "FAIL", title, elapsed, limit)
        run.criterion = number
        return run
    return wrap


@criterion(1, "idempotent system of k[F_q]", 1)
def test_criterion_01_idempotents():
    for q in (2, 3, 4, 5, 7):
        F = finite_field(q)
        m = max(q - 1, 1)
        idems = [idempotent(F, "zero")] + [idempotent(F, chi) for chi in characters(F)]
        total = MonAlgElem(F, [0] * q, m)
        for e in idems:
            total = total + e
        assert total == MonAlgElem.one(F, m)
        for i, e in enumerate(idems):
            assert e * e == e
            compressed = [(e * MonAlgElem.basis(F, a, m) * e).coeffs for a in range(q)]
            assert mat_rank(ExactMatrix(compressed, m, q)) == 1
            for f in idems[i + 1:]:
                assert (e * f).is_zero() and (f * e).is_zero()


@criterion(2, "trace radical of R_n(F_q) vanishes", 600)
def test_criterion_02_kuhn_semisimple():
    cases = [([1], 2), ([1], 3), ([1], 4), ([2], 2), ([2], 3), ([3], 2), ([1, 1], 2), ([1, 2], 2)]
    sizes = {}
    for dims, q in cases:
        A = kuhn_algebra(finite_field(q), dims).flatten()
        assert gram_radical(A).radical_dim == 0, (dims, q)
        sizes[(tuple(dims), q)] = A.dim
    # dim R_{n_1..n_r}(F_q) = sum over (i, j) of q^(n_i n_j)
    assert sizes[((3,), 2)] == 512 and sizes[((1, 2), 2)] == 2 + 4 + 4 + 16


@criterion(3, "dim End(e_chi[F_q^d]) = [d^2]_q", 60)
def test_criterion_03_hom_chi():
    for q in (2, 3):
        F = finite_field(q)
        for d in (1, 2):
            for chi in characters(F):
                Y = apply_echi(VecSpace(F, d), chi)
                assert hom_dim(Y, Y) == q_int(d * d, q)
    for k in range(1, 17):
        assert dim_echi_fast(2 ** k, 2) == q_int(k, 2)
    assert dim_echi_fast(2 ** 16, 2) == 65535


@criterion(4, "psi_Y(n) = [psi_X(n)]_q on three paths", 60)
def test_criterion_04_profile_formula():
    for q in (2, 3):
        F = finite_field(q)
        for d in (1, 2, 3):
            for n in (1, 2, 3):
                X = VecSpace(F, d ** n)
                assert q_int(psi_vec(d, n), q) == dim_echi_fast(X.hom_size(X), q)
    F = finite_field(2)
    Y = apply_echi(VecSpace(F, 2), characters(F)[0])
    assert hom_dim(Y, Y) == q_int(psi_vec(2, 1), 2) == 15


@criterion(5, "blocks of k[M_2(F_2)] and its e_chi corner", 60)
def test_criterion_05_blocks_m2_f2():
    F = finite_field(2)
    report = block_decompose(kuhn_algebra(F, [2]).flatten())
    assert sorted(b.dim for b in report.blocks) == [1, 1, 1, 4, 9]
    assert sorted(b.m for b in report.blocks) == [1, 1, 1, 2, 3]
    assert len(report.primes) == 2 and all(report.gram_det_mod[p] for p in report.primes)
    corner = echi_kuhn_algebra(F, [2], characters(F)[0]).flatten()
    creport = block_decompose(corner)
    assert sorted(b.dim for b in creport.blocks) == [1, 1, 4, 9]
    length = object_length(corner)
    assert (length.phi, length.psi) == (7, 15)
    assert length.phi <= length.psi <= length.phi ** 2 == 49


@criterion(6, "Segre products of semisimple GMAs", 120)
def test_criterion_06_segre():
    rng = random.Random(0)
    for _ in range(50):
        order = rng.randint(1, 3)
        A = random_semisimple_gma(rng, order, max_component_dim=2)
        B = random_semisimple_gma(rng, order, max_component_dim=2)
        assert gram_radical(segre(A, B).flatten()).radical_dim == 0
    direct, via = segre_product_instance()
    assert direct.same_structure(via)


@criterion(7, "rigidity of e_chi[F_q^d] and End(e_chi[1])", 60)
def test_criterion_07_rigidity():
    for q in (2, 3):
        F = finite_field(q)
        for chi in characters(F):
            for d in (0, 1, 2):
                assert lin_snake_identities(VecSpace(F, d), chi) == (True, True)
            one = apply_echi(VecSpace(F, 1), chi)
            assert hom_dim(one, one) == 1


@criterion(8, "tr(e_chi[phi]) = chi(tr phi)", 60)
def test_criterion_08_trace():
    for q, count in ((2, 16), (3, 81)):
        F = finite_field(q)
        X = VecSpace(F, 2)
        ends = list(X.homs(X))
        assert len(ends) == count
        zero_trace = 0
        for phi in ends:
            zero_trace += phi.trace() == 0
            for chi in characters(F):
                assert categorical_trace(phi, chi) == trace_formula(phi, chi) == chi(phi.trace())
        assert zero_trace > 0
        for chi in characters(F):
            assert categorical_dimension(X, chi) == chi(2 % q)


@criterion(9, "ordered Bell numbers and log a(2n) >= n log n", 60)
def test_criterion_09_delannoy():
    for n in range(9):
        assert ordered_bell(n) == ordered_bell_bruteforce(n)
    rep = asymptotic_check(1, 64)
    assert rep.threshold is not None and rep.threshold == 1
    assert rep.indeterminate == [] and rep.psi_monotone


@criterion(10, "upper-triangular control is rejected", 1)
def test_criterion_10_negative_control():
    A = upper_triangular_algebra()
    assert gram_radical(A).radical_dim == 1
    with pytest.raises(NotSemisimpleError) as exc:
        block_decompose(A)
    assert exc.value.radical_dim == 1


CRITERIA = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]


if __name__ == "__main__":
    import sys
    failed = 0
    for fn in CRITERIA:
        try:
            fn()
        except Exception:
            failed += 1
        print(RESULTS[fn.criterion])
    sys.exit(1 if failed else 0)
