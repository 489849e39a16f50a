"""Named property suites shared by ``lincat verify`` and the test-suite.

Each suite returns a SuiteResult: one entry per check, plus the first
counterexample (JSON-serializable) when something fails.
"""

import random
from dataclasses import dataclass, field as dc_field

from .algebra import (end_gma, gram_radical, kuhn_algebra, random_semisimple_gma, segre,
                      unit_pattern, upper_triangular_algebra)
from .algebra.semisimple import gram_matrix
from .category import ProductObject, VecSpace
from .ffield import character_inner, characters, finite_field, idempotent, MonAlgElem
from .linearize import (AddObject, apply_echi, categorical_dimension, categorical_trace, dim_echi_fast, hom_dim,
                        lin_snake_identities, trace_formula)
from .profiles import q_int
from .scalars import ExactMatrix, mat_rank


@dataclass
class SuiteResult:
    suite: str
    params: dict
    checks: list = dc_field(default_factory=list)
    counterexample: dict = None

    @property
    def passed(self):
        return all(c["passed"] for c in self.checks)

    def record(self, name, ok, **detail):
        self.checks.append({"name": name, "passed": bool(ok), **detail})
        if not ok and self.counterexample is None:
            self.counterexample = {"check": name, **detail}
        return ok

    def to_json(self):
        return {"suite": self.suite, "params": self.params, "passed": self.passed,
                "n_checks": len(self.checks), "n_failed": sum(not c["passed"] for c in self.checks),
                "checks": self.checks, "counterexample": self.counterexample}


def _field_m(F, m):
    return m if m is not None else max(F.q - 1, 1)


def idempotents(q, m=None):
    """{e_0} + {e_chi}: orthogonal idempotents summing to [1], each primitive;
    plus character orthogonality."""
    F = finite_field(q)
    m = _field_m(F, m)
    res = SuiteResult("idempotents", {"q": q, "m": m})
    chis = characters(F, m)
    idems = [("e_0", idempotent(F, "zero", m))] + [("e_chi%d" % c.exponent, idempotent(F, c, m)) for c in chis]
    total = MonAlgElem(F, [0] * q, m)
    for _, e in idems:
        total = total + e
    res.record("sum equals [1]", total == MonAlgElem.one(F, m), sum=total.to_json())
    for i, (ni, ei) in enumerate(idems):
        res.record("%s idempotent" % ni, ei * ei == ei, element=ei.to_json())
        span = [ei * MonAlgElem.basis(F, a, m) * ei for a in range(q)]
        rank = mat_rank(ExactMatrix([s.coeffs for s in span], m, q))
        res.record("%s primitive" % ni, rank == 1, compression_rank=rank)
        for nj, ej in idems[i + 1:]:
            res.record("%s * %s = 0" % (ni, nj), (ei * ej).is_zero() and (ej * ei).is_zero())
    for chi in chis:
        for psi in chis:
            expect = q - 1 if chi == psi else 0
            got = character_inner(chi, psi)
            res.record("<chi%d, chi%d>" % (chi.exponent, psi.exponent), got == expect, value=str(got))
    return res


def snake(q, d=2, m=None):
    """Zig-zag identities for [F^e] and e_chi[F^e], e <= d; End(e_chi[1]) is 1-dimensional."""
    F = finite_field(q)
    m = _field_m(F, m)
    res = SuiteResult("snake", {"q": q, "d": d, "m": m})
    for e in range(d + 1):
        X = VecSpace(F, e)
        first, second = lin_snake_identities(X, None, m)
        res.record("[V%d^%d] snakes" % (q, e), first and second, object=str(X))
        for chi in characters(F, m):
            first, second = lin_snake_identities(X, chi)
            res.record("e_chi%d[V%d^%d] snakes" % (chi.exponent, q, e), first and second,
                       object=str(X), chi=chi.exponent)
    for chi in characters(F, m):
        one = apply_echi(VecSpace(F, 1), chi)
        dim = hom_dim(one, one)
        res.record("dim End(e_chi%d[1]) = 1" % chi.exponent, dim == 1, got=dim)
    return res


def homchi(q, d=2, m=None, fast_max_exponent=16):
    """rank of e_chi on k[End(F^e)] equals [e^2]_q for e <= d and every chi;
    the counting path then extends to exponents up to ``fast_max_exponent``."""
    F = finite_field(q)
    m = _field_m(F, m)
    res = SuiteResult("homchi", {"q": q, "d": d, "m": m})
    for e in range(1, d + 1):
        X = VecSpace(F, e)
        expect = q_int(e * e, q)
        for chi in characters(F, m):
            Y = apply_echi(X, chi)
            got = hom_dim(Y, Y)
            res.record("dim End(e_chi%d[V%d^%d])" % (chi.exponent, q, e), got == expect, got=got, expected=expect)
        fast = dim_echi_fast(X.hom_size(X), q)
        res.record("counting path V%d^%d" % (q, e), fast == expect, got=fast, expected=expect)
    for k in range(1, fast_max_exponent + 1):
        fast = dim_echi_fast(q ** k, q)
        res.record("counting path |S| = %d^%d" % (q, k), fast == q_int(k, q), got=fast, expected=q_int(k, q))
    return res


def trace(q, d=2, m=None):
    """Categorical trace of e_chi[phi] equals chi(tr phi) for every phi in End(F^d)."""
    F = finite_field(q)
    m = _field_m(F, m)
    res = SuiteResult("trace", {"q": q, "d": d, "m": m})
    X = VecSpace(F, d)
    chis = characters(F, m)
    mismatches = 0
    for phi in X.homs(X):
        for chi in chis:
            got, want = categorical_trace(phi, chi), trace_formula(phi, chi)
            if got != want:
                mismatches += 1
                res.record("tr(e_chi%d[%s])" % (chi.exponent, phi), False, got=str(got), expected=str(want))
    res.record("all %d endomorphisms x %d characters" % (X.hom_size(X), len(chis)), mismatches == 0,
               mismatches=mismatches)
    for chi in chis:
        got, want = categorical_dimension(X, chi), chi(d % F.p)
        res.record("dim e_chi%d[V%d^%d] = chi(%d)" % (chi.exponent, q, d, d), got == want,
                   got=str(got), expected=str(want))
    return res


def segre_product_instance(m=1):
    """End([X] + [X]) for X = (F_2^1, F_3^1) against the Segre product of the
    End algebras of its two isotypic parts."""
    F2, F3 = finite_field(2), finite_field(3)
    X = ProductObject(VecSpace(F2, 1), VecSpace(F3, 1))
    Y = ProductObject(VecSpace(F2, 1), VecSpace(F3, 0))
    Z = ProductObject(VecSpace(F2, 0), VecSpace(F3, 1))
    direct = end_gma(AddObject([X, X]), m).flatten()
    via = segre(end_gma(AddObject([Y, Y]), m), end_gma(AddObject([Z, Z]), m)).flatten()
    return direct, via


def gram_orthogonal(gma):
    """Trace-form block structure of a GMA: A_{i,j} pairs only with A_{j,i}."""
    A = gma.flatten(check=False)
    G = gram_matrix(A)
    off = gma.offsets()
    n = gma.order
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if (k, l) == (j, i):
                        continue
                    for a in range(gma.dims[i][j]):
                        for b in range(gma.dims[k][l]):
                            if G[off[(i, j)] + a, off[(k, l)] + b]:
                                return False
    return True


def segre_suite(seed=0, pairs=50, max_order=3):
    """Segre closure on random semisimple GMAs, the unit pattern, and the product-category instance."""
    rng = random.Random(seed)
    res = SuiteResult("segre", {"seed": seed, "pairs": pairs, "max_order": max_order})
    for t in range(pairs):
        order = rng.randint(1, max_order)
        A = random_semisimple_gma(rng, order)
        B = random_semisimple_gma(rng, order)
        S = segre(A, B).flatten()
        rad = gram_radical(S).radical_dim
        res.record("pair %d (order %d, dim %d)" % (t, order, S.dim), rad == 0, radical_dim=rad,
                   blocks_a=A.blocks, blocks_b=B.blocks)
        if t < 5:
            unit = segre(A, unit_pattern(order, A.m)).flatten()
            res.record("pair %d: A [x] unit pattern = A" % t, unit.same_structure(A.flatten()))
            res.record("pair %d: trace pairing block structure" % t, gram_orthogonal(A))
    direct, via = segre_product_instance()
    res.record("End([X]+[X]) = Segre product, X = (V2^1, V3^1)", direct.same_structure(via),
               dim=direct.dim, segre_dim=via.dim)
    return res


KUHN_CASES = [((1,), 2), ((1,), 3), ((1,), 4), ((2,), 2), ((2,), 3), ((1, 1), 2), ((1, 2), 2)]


def gram_suite(cases=KUHN_CASES):
    """Trace radical of R_{n_1..n_r}(F_q) vanishes; the upper-triangular control has radical 1."""
    res = SuiteResult("gram", {"cases": [[list(d), q] for d, q in cases]})
    for dims, q in cases:
        A = kuhn_algebra(finite_field(q), list(dims)).flatten()
        rad = gram_radical(A).radical_dim
        res.record("R_%s(F_%d), dim %d" % (",".join(map(str, dims)), q, A.dim), rad == 0, radical_dim=rad)
    rad = gram_radical(upper_triangular_algebra()).radical_dim
    res.record("upper-triangular control", rad == 1, radical_dim=rad)
    return res


SUITES = ("idempotents", "snake", "homchi", "trace", "segre", "gram")


def run_suite(name, q=2, d=2, m=None, seed=0):
    if name == "idempotents":
        return idempotents(q, m)
    if name == "snake":
        return snake(q, d, m)
    if name == "homchi":
        return homchi(q, d, m)
    if name == "trace":
        return trace(q, d, m)
    if name == "segre":
        return segre_suite(seed)
    if name == "gram":
        return gram_suite()
    raise ValueError("unknown suite %r; choose from %s" % (name, ", ".join(SUITES)))
