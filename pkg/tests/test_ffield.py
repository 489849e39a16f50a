import pytest
from hypothesis import given, settings, strategies as st

from lincat.ffield import (Character, CharacterOrderError, FqElem, MonAlgElem, character_inner, characters,
                           field_params, finite_field, idempotent)
from lincat.scalars import CycloScalar, ExactMatrix, mat_rank

QS = [2, 3, 4, 5, 7, 8, 9]


def test_field_params():
    assert field_params(8) == (2, 3)
    assert field_params(9) == (3, 2)
    with pytest.raises(ValueError):
        field_params(6)


@pytest.mark.parametrize("q", QS)
def test_field_tables(q):
    F = finite_field(q)
    assert len(list(F.elements())) == q
    for x in range(q):
        assert F.power(x, q) == x
        assert F.add(x, F.neg_table[x]) == 0
        if x:
            assert F.mul(x, F.inv_table[x]) == 1
    # generator has order exactly q - 1
    g = F.generator
    assert len({F.power(g, t) for t in range(q - 1)}) == q - 1


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(QS).flatmap(lambda q: st.tuples(st.just(q), *[st.integers(0, q - 1)] * 3)))
def test_field_axioms(data):
    q, a, b, c = data
    F = finite_field(q)
    x, y, z = FqElem(F, a), FqElem(F, b), FqElem(F, c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    if b:
        assert (x / y) * y == x


def test_explicit_modulus_must_be_irreducible():
    assert finite_field(4, (1, 1, 1)).q == 4
    with pytest.raises(ValueError):
        finite_field(4, (1, 0, 1))


@pytest.mark.parametrize("q", QS)
def test_characters_are_multiplicative(q):
    F = finite_field(q)
    chis = characters(F)
    assert len(chis) == q - 1
    assert chis[0].is_trivial and not any(c.is_trivial for c in chis[1:])
    for chi in chis:
        assert chi(0) == 0
        assert chi(F.generator) == CycloScalar.zeta(q - 1, chi.exponent) if q > 2 else chi(1) == 1
        for a in range(1, q):
            for b in range(1, q):
                assert chi(F.mul(a, b)) == chi(a) * chi(b)


def test_character_order_error():
    with pytest.raises(CharacterOrderError):
        Character(finite_field(5), 1, m=2)
    # a larger multiple of q - 1 is fine
    assert Character(finite_field(5), 1, m=8)(finite_field(5).generator) == CycloScalar.zeta(8, 2)


@pytest.mark.parametrize("q", QS)
def test_character_orthogonality(q):
    F = finite_field(q)
    for chi in characters(F):
        for psi in characters(F):
            assert character_inner(chi, psi) == ((q - 1) if chi == psi else 0)


@pytest.mark.parametrize("q", QS)
def test_idempotent_system(q):
    F = finite_field(q)
    m = max(q - 1, 1)
    idems = [idempotent(F, "zero")] + [idempotent(F, chi) for chi in characters(F)]
    total = idems[0]
    for e in idems[1:]:
        total = total + e
    assert total == MonAlgElem.one(F, m)
    for i, e in enumerate(idems):
        assert e * e == e
        compressed = [(e * MonAlgElem.basis(F, a, m) * e).coeffs for a in range(q)]
        assert mat_rank(ExactMatrix(compressed, m, q)) == 1
        for f in idems[i + 1:]:
            assert (e * f).is_zero()


def test_echi_absorbs_scalars():
    # [a] e_chi = chi(a) e_chi: the defining property of the character idempotent
    F = finite_field(5)
    for chi in characters(F):
        e = idempotent(F, chi)
        for a in range(5):
            assert MonAlgElem.basis(F, a, 4) * e == e.scale(chi(a))


def test_idempotent_rejects_other_labels():
    with pytest.raises(ValueError):
        idempotent(finite_field(3), "one")


def test_monalg_json_order():
    F = finite_field(3)
    e = idempotent(F, characters(F)[1])
    js = e.to_json()
    assert [x["element"] for x in js] == [1, 2]
    assert js[0]["scalar"] == "(1/2)*(1)"
