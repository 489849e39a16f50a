"""Structure-constant algebras, generalized matrix algebras, Segre
products, and the concrete endomorphism algebras R_{n_1,...,n_r}(F)."""

import random
from fractions import Fraction
from itertools import product

import numpy as np

from ..category import CapExceeded, default_cap
from ..linearize import KarObject, LinMorphism, as_add
from ..scalars import CycloScalar, ExactMatrix, as_scalar, mat_column_basis, mat_solve

FULL_ASSOCIATIVITY_DIM = 64
SAMPLED_TRIPLES = 2000


class NotAssociative(ValueError):
    pass


class SCAlgebra:
    """Finite-dimensional associative algebra over Q(zeta_m) given by
    structure constants: ``table[(i, j)]`` lists the (k, c) with
    b_i b_j = sum c b_k."""

    def __init__(self, dim, table, m, unit=None, labels=None, check=True):
        self.dim = dim
        self.m = m
        self.table = {key: tuple((k, as_scalar(m, c)) for k, c in terms if c)
                      for key, terms in table.items()}
        self.table = {key: terms for key, terms in self.table.items() if terms}
        self.unit = None if unit is None else [as_scalar(m, x) for x in unit]
        self.labels = labels
        if check:
            self.check_associative()
            if self.unit is not None and not self.is_unit(self.unit):
                raise ValueError("supplied unit is not a two-sided identity")

    # -- arithmetic ---------------------------------------------------
    def zero_vector(self):
        return [CycloScalar.zero(self.m)] * self.dim

    def basis_vector(self, i):
        v = self.zero_vector()
        v[i] = CycloScalar.one(self.m)
        return v

    def mul(self, x, y):
        out = self.zero_vector()
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        table = self.table
        for i, a in xs:
            for j, b in ys:
                terms = table.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] = out[k] + ab * c
        return out

    def _mul_sparse(self, x, y):
        out = {}
        table = self.table
        for i, a in x.items():
            for j, b in y.items():
                for k, c in table.get((i, j), ()):
                    v = a * b * c
                    out[k] = out[k] + v if k in out else v
        return {k: v for k, v in out.items() if v}

    def check_associative(self, seed=0):
        n = self.dim
        one = CycloScalar.one(self.m)
        if n <= FULL_ASSOCIATIVITY_DIM:
            triples = product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(SAMPLED_TRIPLES)]
        for i, j, k in triples:
            bi, bj, bk = {i: one}, {j: one}, {k: one}
            left = self._mul_sparse(self._mul_sparse(bi, bj), bk)
            right = self._mul_sparse(bi, self._mul_sparse(bj, bk))
            if left != right:
                raise NotAssociative("(b%d b%d) b%d != b%d (b%d b%d)" % (i, j, k, i, j, k))

    def is_unit(self, u):
        for j in range(self.dim):
            b = self.basis_vector(j)
            if self.mul(u, b) != b or self.mul(b, u) != b:
                return False
        return True

    def left_matrix(self, x):
        """Matrix of y -> x y in the basis."""
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        return ExactMatrix.from_columns(cols, self.dim, self.m)

    def coo(self):
        """(I, J, K, coefficients) listing every nonzero structure constant."""
        I, J, K, C = [], [], [], []
        for (i, j), terms in self.table.items():
            for k, c in terms:
                I.append(i)
                J.append(j)
                K.append(k)
                C.append(c)
        return np.array(I, dtype=np.int64), np.array(J, dtype=np.int64), np.array(K, dtype=np.int64), C

    def max_denominator(self):
        d = 1
        for terms in self.table.values():
            for _, c in terms:
                d = max(d, c.denominator())
        if self.unit is not None:
            for c in self.unit:
                d = max(d, c.denominator())
        return d

    def same_structure(self, other):
        """Structure constants equal under the identity basis matching."""
        return self.dim == other.dim and self.m == other.m and self.table == other.table

    def __repr__(self):
        return "SCAlgebra(dim=%d, m=%d)" % (self.dim, self.m)

    def to_json(self):
        """{dim, m, table: [[i, j, k, scalar], ...], unit} with scalars in wire form."""
        rows = [[i, j, k, str(c)] for (i, j), terms in sorted(self.table.items()) for k, c in terms]
        return {"dim": self.dim, "m": self.m, "table": rows,
                "unit": None if self.unit is None else [str(c) for c in self.unit]}

    @classmethod
    def from_json(cls, data, check=True):
        m = data.get("m", 1)
        table = {}
        for i, j, k, c in data["table"]:
            c = CycloScalar.parse(m, c) if isinstance(c, str) else as_scalar(m, c)
            table.setdefault((i, j), []).append((k, c))
        unit = data.get("unit")
        if unit is not None:
            unit = [CycloScalar.parse(m, c) if isinstance(c, str) else c for c in unit]
        return cls(data["dim"], table, m, unit=unit, check=check)


def find_unit(A):
    """Two-sided identity of A solved exactly, or None."""
    if A.unit is not None:
        return A.unit
    n = A.dim
    rows, rhs = [], []
    zero, one = CycloScalar.zero(A.m), CycloScalar.one(A.m)
    # u b_j = b_j and b_j u = b_j, coordinate k: sum_i u_i c_{ij}^k = delta_jk
    for j in range(n):
        left = [[zero] * n for _ in range(n)]
        right = [[zero] * n for _ in range(n)]
        for i in range(n):
            for k, c in A.table.get((i, j), ()):
                left[k][i] = left[k][i] + c
            for k, c in A.table.get((j, i), ()):
                right[k][i] = right[k][i] + c
        for k in range(n):
            target = one if k == j else zero
            rows.append(left[k])
            rhs.append(target)
            rows.append(right[k])
            rhs.append(target)
    sol = mat_solve(ExactMatrix(rows, A.m, n), rhs)
    if sol is None:
        return None
    A.unit = sol
    return sol


class GMA:
    """Generalized matrix algebra of order n.

    ``dims[i][j]`` is the dimension of A_{i,j}; ``tables[(i, j, l)]`` maps
    (a, b) to the (c, coef) terms of a*b in A_{i,l} for a in A_{i,j} and
    b in A_{j,l}. Products A_{i,j} A_{r,s} with j != r are zero by
    construction. ``unit`` optionally maps i to a vector of A_{i,i}.
    """

    def __init__(self, order, dims, tables, m, unit=None):
        self.order = order
        self.dims = [list(r) for r in dims]
        self.m = m
        self.tables = {key: {ab: tuple((c, as_scalar(m, v)) for c, v in terms if v)
                             for ab, terms in tab.items()}
                       for key, tab in tables.items()}
        self.unit = unit

    @property
    def dim(self):
        return sum(sum(r) for r in self.dims)

    def offsets(self):
        off, pos = {}, 0
        for i in range(self.order):
            for j in range(self.order):
                off[(i, j)] = pos
                pos += self.dims[i][j]
        return off

    def flatten(self, check=True):
        off = self.offsets()
        table = {}
        for (i, j, l), tab in self.tables.items():
            for (a, b), terms in tab.items():
                if terms:
                    table[(off[(i, j)] + a, off[(j, l)] + b)] = tuple((off[(i, l)] + c, v) for c, v in terms)
        unit = None
        if self.unit is not None:
            unit = [CycloScalar.zero(self.m)] * self.dim
            for i, vec in self.unit.items():
                for a, v in enumerate(vec):
                    unit[off[(i, i)] + a] = as_scalar(self.m, v)
        return SCAlgebra(self.dim, table, self.m, unit=unit, check=check)


def segre(A, B):
    """Segre product: (A [x] B)_{i,j} = A_{i,j} (x) B_{i,j}, basis (a, b) -> a * dim B_{i,j} + b."""
    if A.order != B.order:
        raise ValueError("Segre product needs equal orders, got %d and %d" % (A.order, B.order))
    if A.m != B.m:
        raise ValueError("mismatched cyclotomic orders")
    n = A.order
    dims = [[A.dims[i][j] * B.dims[i][j] for j in range(n)] for i in range(n)]
    tables = {}
    for key, ta in A.tables.items():
        tb = B.tables.get(key)
        if not tb:
            continue
        i, j, l = key
        dbj, dbl, dbil = B.dims[i][j], B.dims[j][l], B.dims[i][l]
        tab = {}
        for (a1, a2), ta_terms in ta.items():
            for (b1, b2), tb_terms in tb.items():
                terms = {}
                for ca, va in ta_terms:
                    for cb, vb in tb_terms:
                        c = ca * dbil + cb
                        v = va * vb
                        terms[c] = terms[c] + v if c in terms else v
                tab[(a1 * dbj + b1, a2 * dbl + b2)] = tuple(terms.items())
        tables[key] = tab
    unit = None
    if A.unit is not None and B.unit is not None:
        unit = {}
        for i in range(n):
            ua, ub = A.unit.get(i, []), B.unit.get(i, [])
            unit[i] = [x * y for x in ua for y in ub] if dims[i][i] else []
            if dims[i][i] == 0:
                unit[i] = []
    return GMA(n, dims, tables, A.m, unit)


def unit_pattern(n, m):
    """Order-n GMA with every component 1-dimensional and b*b = b: the neutral element for Segre."""
    one = CycloScalar.one(m)
    tables = {(i, j, l): {(0, 0): ((0, one),)} for i in range(n) for j in range(n) for l in range(n)}
    return GMA(n, [[1] * n for _ in range(n)], tables, m, {i: [one] for i in range(n)})


# -- R_{n_1..n_r}(F) built directly from matrix multiplication ------------

def _all_matrices(q, rows, cols):
    """Every rows x cols matrix over codes 0..q-1, in row-major lexicographic order."""
    N = rows * cols
    if N == 0:
        return np.zeros((1, rows, cols), dtype=np.int64)
    grid = np.indices((q,) * N).reshape(N, -1).T
    return grid.reshape(-1, rows, cols).astype(np.int64)


def _encode(mats, q):
    flat = mats.reshape(mats.shape[0], -1)
    N = flat.shape[1]
    weights = q ** np.arange(N - 1, -1, -1, dtype=np.int64)
    return flat @ weights if N else np.zeros(mats.shape[0], dtype=np.int64)


def _matmul_all(field, A, B):
    """All products A[x] @ B[y] over F_q, shape (len A, len B, n, l)."""
    if field.k == 1:
        return np.einsum("xik,ykl->xyil", A, B) % field.p
    mul = np.array(field.mul_table, dtype=np.int64)
    add = np.array(field.add_table, dtype=np.int64)
    n, k = A.shape[1], A.shape[2]
    l = B.shape[2]
    out = np.zeros((A.shape[0], B.shape[0], n, l), dtype=np.int64)
    for t in range(k):
        term = mul[A[:, None, :, t, None], B[None, :, None, t, :]]
        out = add[out, term]
    return out


def kuhn_algebra(field, dims, m=None, cap=None):
    """R_{n_1,...,n_r}(F) as a GMA: component (i, j) is k[M_{n_i, n_j}(F)]
    with basis the matrices in lexicographic order of entry codes."""
    q = field.q
    if m is None:
        m = max(q - 1, 1)
    cap = default_cap() if cap is None else cap
    r = len(dims)
    sizes = [[q ** (dims[i] * dims[j]) for j in range(r)] for i in range(r)]
    if sum(map(sum, sizes)) > cap:
        raise CapExceeded("R_%s(F_%d) has dimension %d > cap %d" % (list(dims), q, sum(map(sum, sizes)), cap))
    mats = {(i, j): _all_matrices(q, dims[i], dims[j]) for i in range(r) for j in range(r)}
    one = CycloScalar.one(m)
    tables = {}
    for i, j, l in product(range(r), repeat=3):
        A, B = mats[(i, j)], mats[(j, l)]
        if dims[j] == 0:
            prods = np.zeros((len(A), len(B), dims[i], dims[l]), dtype=np.int64)
        else:
            prods = _matmul_all(field, A, B)
        codes = _encode(prods.reshape(len(A) * len(B), dims[i], dims[l]), q).reshape(len(A), len(B))
        tables[(i, j, l)] = {(a, b): ((int(codes[a, b]), one),) for a in range(len(A)) for b in range(len(B))}
    unit = {}
    for i in range(r):
        vec = [0] * sizes[i][i]
        ident = np.eye(dims[i], dtype=np.int64)[None]
        vec[int(_encode(ident, q)[0]) if dims[i] else 0] = 1
        unit[i] = vec
    return GMA(r, sizes, tables, m, unit)


def _normalize(field, mat_codes):
    """(a, rep) with mat = a * rep and rep's first nonzero entry equal to 1; a = 0 for the zero matrix."""
    for x in mat_codes:
        if x:
            inv = field.inv_table[x]
            return x, tuple(field.mul_table[inv][y] for y in mat_codes)
    return 0, None


def echi_kuhn_algebra(field, dims, chi, cap=None):
    """e_chi R_{n_1..n_r}(F) e_chi in the orbit basis v_phi = e_chi[phi],
    phi running over normalized nonzero matrices. Products follow from
    e_chi[a phi] = chi(a) e_chi[phi] and e_chi[0] = 0."""
    q = field.q
    m = chi.m
    cap = default_cap() if cap is None else cap
    r = len(dims)
    if sum(q ** (dims[i] * dims[j]) for i in range(r) for j in range(r)) > cap:
        raise CapExceeded("R_%s(F_%d) exceeds cap %d" % (list(dims), q, cap))
    mats, reps, index = {}, {}, {}
    for i, j in product(range(r), repeat=2):
        allm = _all_matrices(q, dims[i], dims[j])
        mats[(i, j)] = allm
        keep = []
        for M in allm:
            codes = tuple(int(x) for x in M.ravel())
            a, rep = _normalize(field, codes)
            if a == 1:
                keep.append(codes)
        reps[(i, j)] = keep
        index[(i, j)] = {codes: t for t, codes in enumerate(keep)}
    sizes = [[len(reps[(i, j)]) for j in range(r)] for i in range(r)]
    tables = {}
    for i, j, l in product(range(r), repeat=3):
        RA, RB = reps[(i, j)], reps[(j, l)]
        if not RA or not RB:
            continue
        A = np.array(RA, dtype=np.int64).reshape(len(RA), dims[i], dims[j])
        B = np.array(RB, dtype=np.int64).reshape(len(RB), dims[j], dims[l])
        prods = _matmul_all(field, A, B)
        tab = {}
        idx = index[(i, l)]
        for a in range(len(RA)):
            for b in range(len(RB)):
                codes = tuple(int(x) for x in prods[a, b].ravel())
                s, rep = _normalize(field, codes)
                if s:
                    tab[(a, b)] = ((idx[rep], chi(s)),)
        tables[(i, j, l)] = tab
    unit = {}
    for i in range(r):
        vec = [0] * sizes[i][i]
        if dims[i]:
            ident = tuple(int(a == b) for a in range(dims[i]) for b in range(dims[i]))
            vec[index[(i, i)][ident]] = 1
        unit[i] = vec
    return GMA(r, sizes, tables, m, unit)


# -- endomorphism algebras through the category layer ---------------------

def end_gma(X, m, cap=None):
    """End_{k[E]^(+)}(X_1 + ... + X_n) as a GMA, built with lin_compose.

    Component (i, j) is k[Hom_E(X_j, X_i)], basis in hom_enumerate order.
    """
    X = as_add(X)
    n = len(X)
    homs = {(i, j): list(X.summands[j].homs(X.summands[i], cap)) for i in range(n) for j in range(n)}
    index = {key: {f: t for t, f in enumerate(fs)} for key, fs in homs.items()}
    dims = [[len(homs[(i, j)]) for j in range(n)] for i in range(n)]
    one = CycloScalar.one(m)
    tables = {}
    for i, j, l in product(range(n), repeat=3):
        tab = {}
        target = index[(i, l)]
        for a, f in enumerate(homs[(i, j)]):
            lf = LinMorphism.basis(f, m)
            for b, g in enumerate(homs[(j, l)]):
                h = lf @ LinMorphism.basis(g, m)
                tab[(a, b)] = tuple((target[base], c) for base, c in h.terms.items())
        tables[(i, j, l)] = tab
    unit = {i: [int(f == X.summands[i].identity()) for f in homs[(i, i)]] for i in range(n)}
    return GMA(n, dims, tables, m, unit)


def compress(A, e, labels=None):
    """The corner algebra e A e for an idempotent e of A (as a coordinate vector).

    Basis: a maximal independent subset of {e b_i e}; structure constants by
    exact solves against a fixed invertible set of coordinates.
    """
    e = [as_scalar(A.m, x) for x in e]
    if A.mul(e, e) != e:
        raise ValueError("compression vector is not idempotent")
    images = [A.mul(A.mul(e, A.basis_vector(i)), e) for i in range(A.dim)]
    M = ExactMatrix.from_columns(images, A.dim, A.m)
    keep = mat_column_basis(M)
    basis = [images[c] for c in keep]
    r = len(basis)
    V = ExactMatrix.from_columns(basis, A.dim, A.m)
    rows = mat_column_basis(V.transpose())
    square = ExactMatrix([[V[i, c] for c in range(r)] for i in rows], A.m, r)
    zero = CycloScalar.zero(A.m)
    # columns of the inverse of the square minor, by one exact solve per unit vector
    inverse = [mat_solve(square, [as_scalar(A.m, int(i == j)) for i in range(r)]) for j in range(r)]
    sparse_basis = [{i: x for i, x in enumerate(v) if x} for v in basis]

    def coords(w):
        sol = [zero] * r
        for j, i in enumerate(rows):
            if w[i]:
                col = inverse[j]
                for c in range(r):
                    if col[c]:
                        sol[c] = sol[c] + col[c] * w[i]
        check = {}
        for c, x in enumerate(sol):
            if x:
                for i, y in sparse_basis[c].items():
                    check[i] = check.get(i, zero) + x * y
        if any(check.get(i, zero) != w[i] for i in range(A.dim)):
            raise ArithmeticError("product left the compressed subspace")
        return sol

    table = {}
    for a in range(r):
        for b in range(r):
            prod = A.mul(basis[a], basis[b])
            if any(prod):
                table[(a, b)] = tuple((k, c) for k, c in enumerate(coords(prod)) if c)
    unit = coords(e)
    out = SCAlgebra(r, table, A.m, unit=unit, check=r <= FULL_ASSOCIATIVITY_DIM)
    out.embedding = basis
    return out


def end_algebra(X, m=None, cap=None):
    """End of an object of k[E]^(+) or k[E]^# as an SCAlgebra.

    Karoubi objects give the compressed algebra e End(carrier) e.
    """
    if isinstance(X, KarObject):
        m = X.m
        full = end_algebra(X.carrier, m, cap)
        vec = _endo_vector(X.idem, X.carrier, cap)
        return compress(full, vec)
    if m is None:
        m = 1
    return end_gma(X, m, cap).flatten()


def _endo_vector(f, X, cap=None):
    """Coordinates of an endomorphism of X in the flattened end_gma basis."""
    X = as_add(X)
    n = len(X)
    vec = []
    for i in range(n):
        for j in range(n):
            homs = list(X.summands[j].homs(X.summands[i], cap))
            terms = f.entries[i][j].terms
            vec.extend(terms.get(h, CycloScalar.zero(f.m)) for h in homs)
    return vec


# -- small named algebras --------------------------------------------------

def upper_triangular_algebra(m=1):
    """Upper-triangular 2x2 matrices, basis (E11, E12, E22); its radical is span(E12)."""
    table = {(0, 0): ((0, 1),), (0, 1): ((1, 1),), (1, 2): ((1, 1),), (2, 2): ((2, 1),)}
    return SCAlgebra(3, table, m, unit=[1, 0, 1])


def monoid_algebra(field, m=None):
    """k[F] under multiplication: R_1(F)."""
    return kuhn_algebra(field, [1], m).flatten()


def _random_invertible(rng, n):
    while True:
        P = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if n == 0:
            return P, P
        inv = _fraction_inverse(P)
        if inv is not None:
            return P, inv


def _fraction_inverse(P):
    n = len(P)
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(P)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def random_semisimple_gma(rng, order, max_component_dim=2, m=1, max_blocks=3):
    """Random semisimple GMA of the given order.

    A product of matrix algebras M_r(Q) whose matrix units are distributed
    over the grid slots by a random slot map on row indices, followed by a
    random change of basis inside each component.
    """
    while True:
        blocks = []
        for _ in range(rng.randint(1, max_blocks)):
            size = rng.randint(1, 2)
            blocks.append([rng.randrange(order) for _ in range(size)])
        dims = [[sum(s.count(i) * s.count(j) for s in blocks) for j in range(order)] for i in range(order)]
        if all(d <= max_component_dim for row in dims for d in row):
            break
    # old basis of component (i, j): matrix units (block, u, v) with slot(u) = i, slot(v) = j
    units = {(i, j): [(b, u, v) for b, s in enumerate(blocks) for u in range(len(s)) for v in range(len(s))
                      if s[u] == i and s[v] == j] for i in range(order) for j in range(order)}
    change = {key: _random_invertible(rng, len(us)) for key, us in units.items()}

    def old_coords(key, a):
        P, _ = change[key]
        return {units[key][t]: P[a][t] for t in range(len(units[key])) if P[a][t]}

    def new_coords(key, vec):
        _, Pinv = change[key]
        us = units[key]
        # new_a = sum_t P[a][t] old_t, so old_t = sum_a Pinv[t][a] new_a
        out = [Fraction(0)] * len(us)
        for t, u in enumerate(us):
            c = vec.get(u)
            if c:
                for a in range(len(us)):
                    out[a] += c * Pinv[t][a]
        return out

    tables = {}
    for i, j, l in product(range(order), repeat=3):
        tab = {}
        for a in range(dims[i][j]):
            x = old_coords((i, j), a)
            for b in range(dims[j][l]):
                y = old_coords((j, l), b)
                prod = {}
                for (b1, u1, v1), c1 in x.items():
                    for (b2, u2, v2), c2 in y.items():
                        if b1 == b2 and v1 == u2:
                            key = (b1, u1, v2)
                            prod[key] = prod.get(key, 0) + c1 * c2
                coords = new_coords((i, l), prod)
                tab[(a, b)] = tuple((c, v) for c, v in enumerate(coords) if v)
        tables[(i, j, l)] = tab
    unit = {}
    for i in range(order):
        ident = {(b, u, u): Fraction(1) for b, s in enumerate(blocks) for u in range(len(s)) if s[u] == i}
        unit[i] = new_coords((i, i), ident)
    gma = GMA(order, dims, tables, m, unit)
    gma.blocks = blocks
    return gma


__all__ = [
    "SCAlgebra", "GMA", "NotAssociative", "find_unit", "segre", "unit_pattern",
    "kuhn_algebra", "echi_kuhn_algebra", "end_gma", "end_algebra", "compress",
    "upper_triangular_algebra", "monoid_algebra", "random_semisimple_gma",
]
