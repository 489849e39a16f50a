import random

import pytest
from hypothesis import given, settings, strategies as st

from lincat.algebra import (GMA, CertificateError, NoUnit, NonSplitError, NotAssociative, NotSemisimpleError,
                            SCAlgebra,
                            block_decompose, compress, echi_kuhn_algebra, end_algebra, end_gma, exact_center,
                            find_unit, gram_radical, kuhn_algebra, modular_blocks, object_length,
                            random_semisimple_gma, refines, segre, unit_pattern, upper_triangular_algebra)
from lincat.category import ProductObject, VecSpace
from lincat.ffield import characters, finite_field
from lincat.linearize import AddObject, apply_echi
from lincat.scalars import ExactMatrix, mat_nullspace
from lincat.suites import gram_orthogonal, segre_product_instance

F2, F3, F4, F5 = (finite_field(q) for q in (2, 3, 4, 5))

# Irreducible complex characters of GL_r(F_q) (standard tables), grouped into
# Galois orbits over Q(zeta_{q-1}): (degree, orbit size). GL_2(F_3) has a pair of
# degree-2 characters with values in Q(sqrt(-2)), which is not inside Q(zeta_2).
GL_CHARS = {
    (0, 2): [(1, 1)], (0, 3): [(1, 1)], (0, 4): [(1, 1)], (0, 5): [(1, 1)],
    (1, 2): [(1, 1)], (1, 3): [(1, 1)] * 2, (1, 4): [(1, 1)] * 3, (1, 5): [(1, 1)] * 4,
    (2, 2): [(1, 1), (1, 1), (2, 1)],
    (2, 3): [(1, 1), (1, 1), (2, 1), (2, 2), (3, 1), (3, 1), (4, 1)],
}


def gaussian_binomial(n, r, q):
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def monoid_block_oracle(n, q):
    """(dim, center_dim) of the blocks of k[M_n(F_q)] over Q(zeta_{q-1}): one block per
    (rank r, Galois orbit of irreducibles of GL_r(F_q)), a matrix algebra of size
    degree * [n choose r]_q over a center of degree equal to the orbit size."""
    return sorted((orbit * (deg * gaussian_binomial(n, r, q)) ** 2, orbit)
                  for r in range(n + 1) for deg, orbit in GL_CHARS[(r, q)])


def test_end_algebra_examples():
    assert end_algebra(VecSpace(F2, 1)).dim == 2
    assert end_algebra(AddObject([VecSpace(F2, 1), VecSpace(F2, 1)])).dim == 8
    assert end_algebra(apply_echi(VecSpace(F2, 2), characters(F2)[0])).dim == 15


def test_gram_example():
    A = end_algebra(VecSpace(F2, 1))
    gr = gram_radical(A)
    assert [[int(str(x)) for x in row] for row in gr.gram.entries] == [[1, 1], [1, 2]]
    assert gr.radical_dim == 0


def test_negative_control():
    A = upper_triangular_algebra()
    assert gram_radical(A).radical_dim == 1
    with pytest.raises(NotSemisimpleError) as exc:
        block_decompose(A)
    assert exc.value.radical_dim == 1


def test_no_unit():
    nil = SCAlgebra(1, {}, 1)
    assert find_unit(nil) is None
    with pytest.raises(NoUnit):
        gram_radical(nil)


def test_unit_is_solved_when_absent():
    A = kuhn_algebra(F2, [1, 1]).flatten()
    B = SCAlgebra(A.dim, {k: v for k, v in A.table.items()}, A.m)
    assert find_unit(B) == A.unit


def test_associativity_is_checked():
    # b0 b0 = b1, b1 b0 = b0, everything else 0: (b0 b0) b0 = b0 but b0 (b0 b0) = 0
    with pytest.raises(NotAssociative):
        SCAlgebra(2, {(0, 0): ((1, 1),), (1, 0): ((0, 1),)}, 1)


@pytest.mark.parametrize("F,dims", [(F2, [1]), (F2, [2]), (F2, [1, 1]), (F2, [1, 2]), (F3, [1, 1]),
                                    (F3, [2]), (F4, [1]), (F2, [0, 1])])
def test_category_route_equals_direct_construction(F, dims):
    direct = kuhn_algebra(F, dims, m=1)
    via = end_gma(AddObject([VecSpace(F, d) for d in dims]), 1)
    assert direct.dims == via.dims
    assert direct.flatten().same_structure(via.flatten())
    assert direct.flatten().unit == via.flatten().unit


@pytest.mark.parametrize("n,q", [(1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3)])
def test_blocks_against_rank_stratification_oracle(n, q):
    report = block_decompose(kuhn_algebra(finite_field(q), [n]).flatten())
    assert sorted((b.dim, b.center_dim) for b in report.blocks) == monoid_block_oracle(n, q)
    assert all(b.split == (b.center_dim == 1) for b in report.blocks)
    assert sum(b.dim for b in report.blocks) == report.dim
    assert report.center_dim == sum(b.center_dim for b in report.blocks)


def test_blocks_of_m2_f2():
    report = block_decompose(kuhn_algebra(F2, [2]).flatten())
    assert sorted(b.dim for b in report.blocks) == [1, 1, 1, 4, 9]
    assert sorted(b.m for b in report.blocks) == [1, 1, 1, 2, 3]
    assert len(report.primes) == 2 and all(report.gram_det_mod[p] for p in report.primes)
    js = report.to_json()
    assert set(js) == {"dim", "semisimple", "primes", "blocks", "gram_det_mod", "center_dim", "probed_primes"}
    assert len(js["gram_det_mod"]) == 2


def test_blocks_of_m1_f2():
    report = block_decompose(kuhn_algebra(F2, [1]).flatten())
    assert [b.dim for b in report.blocks] == [1, 1]


@pytest.mark.parametrize("F,dims", [(F2, [2]), (F3, [1]), (F3, [2]), (F3, [1, 1]), (F4, [1]), (F2, [1, 2])])
def test_orbit_basis_matches_generic_compression(F, dims):
    # dual route: orbit-basis construction versus e A e computed by exact solves
    A = kuhn_algebra(F, dims).flatten()
    for chi in characters(F):
        fast = echi_kuhn_algebra(F, dims, chi).flatten()
        e = [0] * A.dim
        off = 0
        gma = kuhn_algebra(F, dims)
        offsets = gma.offsets()
        for i, n in enumerate(dims):
            # e_chi acting on summand i: sum_a coefficient(a) [a * id]
            from lincat.ffield import idempotent
            coeffs = idempotent(F, chi).coeffs
            for a, c in enumerate(coeffs):
                if c and n:
                    ident = [F.mul_table[a][int(r == s)] for r in range(n) for s in range(n)]
                    code = 0
                    for x in ident:
                        code = code * F.q + x
                    e[offsets[(i, i)] + code] = e[offsets[(i, i)] + code] + c
        slow = compress(SCAlgebra(A.dim, A.table, chi.m, unit=A.unit, check=False), e)
        assert slow.dim == fast.dim
        assert block_decompose(slow).block_dims == block_decompose(fast).block_dims


def test_echi_compressions_partition_the_blocks():
    for F, n in [(F2, 2), (F3, 2), (F4, 1)]:
        whole = block_decompose(kuhn_algebra(F, [n]).flatten()).block_dims
        parts = [1]
        for chi in characters(F):
            parts += block_decompose(echi_kuhn_algebra(F, [n], chi).flatten()).block_dims
        assert sorted(parts) == whole


def test_echi_block_example():
    report = block_decompose(echi_kuhn_algebra(F2, [2], characters(F2)[0]).flatten())
    assert sorted(b.dim for b in report.blocks) == [1, 1, 4, 9]
    assert sorted(b.m for b in report.blocks) == [1, 1, 2, 3]


def test_exact_center_against_full_kernel():
    for A in (kuhn_algebra(F2, [2]).flatten(), echi_kuhn_algebra(F3, [1, 1], characters(F3)[1]).flatten()):
        n = A.dim
        rows = []
        for j in range(n):
            b = A.basis_vector(j)
            cols = [[x - y for x, y in zip(A.mul(A.basis_vector(i), b), A.mul(b, A.basis_vector(i)))]
                    for i in range(n)]
            rows += ExactMatrix.from_columns(cols, n, A.m).entries
        assert len(exact_center(A)) == mat_nullspace(ExactMatrix(rows, A.m, n)).cols


def test_split_primes_refine_the_rational_blocks():
    # p = 1, 3 mod 8 splits sqrt(-2) and the (8, 2) block of k[M_2(F_3)]; p = 5, 7 mod 8 does not
    A = kuhn_algebra(F3, [2]).flatten()
    inert, split = modular_blocks(A, 101), modular_blocks(A, 89)
    assert (8, 2) in inert and (8, 2) not in split
    assert inert == modular_blocks(A, 103)
    assert refines(split, inert) and not refines(inert, split)
    report = block_decompose(A)
    assert report.primes == [101, 103]
    assert [(b.dim, b.center_dim) for b in report.blocks if not b.split] == [(8, 2)]
    with pytest.raises(NonSplitError):
        report.length()


def test_refines():
    assert refines([(4, 1), (4, 1), (1, 1)], [(8, 2), (1, 1)])
    assert not refines([(4, 1), (1, 1), (1, 1)], [(8, 2), (1, 1)])
    assert not refines([(9, 1)], [(8, 2), (1, 1)])
    assert refines([(1, 1)], [(1, 1)])


FINE = [(1, 1), (1, 1), (1, 1), (4, 1), (9, 1)]


@pytest.mark.parametrize("structures", [
    [FINE, [(1, 1), (1, 1), (1, 1), (13, 2)]],  # coarse data that the fine data does not refine
    [[(2, 2), (1, 1), (4, 1), (9, 1)]] + [FINE] * 30,  # coarsest data seen by one prime only
    [FINE, [(1, 1), (1, 1), (14, 1)]],  # center dimension disagrees with the exact center
])
def test_certificate_failure_is_reported(monkeypatch, structures):
    import lincat.algebra.semisimple as ss
    A = kuhn_algebra(F2, [2]).flatten()
    calls = []

    def fake(A_, p, w=None):
        calls.append(p)
        return structures[(len(calls) - 1) % len(structures)]
    monkeypatch.setattr(ss, "modular_blocks", fake)
    with pytest.raises(CertificateError):
        ss.block_decompose(A)


def test_object_length_examples():
    chi2 = characters(F2)[0]
    r = object_length(apply_echi(VecSpace(F2, 1), chi2))
    assert (r.phi, r.psi) == (1, 1)
    r = object_length(apply_echi(VecSpace(F2, 2), chi2))
    assert (r.phi, r.psi) == (7, 15)
    assert r.phi <= r.psi <= r.phi ** 2
    for chi in characters(F3):
        r = object_length(apply_echi(VecSpace(F3, 1), chi))
        assert (r.phi, r.psi) == (1, 1)


def test_segre_with_unit_pattern_is_identity():
    A = kuhn_algebra(F2, [1, 1])
    assert segre(A, unit_pattern(2, A.m)).flatten().same_structure(A.flatten())


def test_segre_order_mismatch():
    with pytest.raises(ValueError):
        segre(kuhn_algebra(F2, [1]), kuhn_algebra(F2, [1, 1]))


def test_segre_dimension_formula():
    A, B = kuhn_algebra(F2, [1, 1], m=1), kuhn_algebra(F3, [1, 1], m=1)
    S = segre(A, B)
    assert S.dim == sum(A.dims[i][j] * B.dims[i][j] for i in range(2) for j in range(2)) == 24


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_segre_of_semisimple_is_semisimple(seed, order):
    rng = random.Random(seed)
    A, B = random_semisimple_gma(rng, order), random_semisimple_gma(rng, order)
    assert gram_radical(A.flatten()).radical_dim == 0
    assert gram_radical(segre(A, B).flatten()).radical_dim == 0


def test_product_category_segre_instance():
    direct, via = segre_product_instance()
    assert direct.dim == via.dim == 24
    assert direct.same_structure(via)


@pytest.mark.parametrize("a,b", [([1, 1], [1, 0]), ([1, 0], [0, 1]), ([2, 1], [1, 1])])
def test_isotypic_pipeline_agrees_with_direct_route(a, b):
    X = AddObject([ProductObject(VecSpace(F2, x), VecSpace(F3, y)) for x, y in zip(a, b)])
    direct = end_gma(X, 1).flatten()
    pipeline = segre(kuhn_algebra(F2, a, m=1), kuhn_algebra(F3, b, m=1)).flatten()
    assert direct.same_structure(pipeline)
    assert gram_radical(direct).radical_dim == 0


@settings(max_examples=10, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=3), st.sampled_from([2, 3]))
def test_trace_pairing_orthogonality(dims, q):
    F = finite_field(q)
    if sum(q ** (x * y) for x in dims for y in dims) > 200:
        return
    assert gram_orthogonal(end_gma(AddObject([VecSpace(F, d) for d in dims]), 1))


def test_flatten_keeps_unit_two_sided():
    rng = random.Random(5)
    for _ in range(10):
        g = random_semisimple_gma(rng, rng.randint(1, 3))
        A = g.flatten()
        assert A.is_unit(A.unit)


def test_json_roundtrip():
    A = echi_kuhn_algebra(F3, [1, 1], characters(F3)[1]).flatten()
    B = SCAlgebra.from_json(A.to_json())
    assert B.same_structure(A) and B.unit == A.unit
