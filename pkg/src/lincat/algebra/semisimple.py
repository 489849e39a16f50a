"""Semisimplicity certificates and Wedderburn block decomposition.

The Gram (trace) form of the regular representation is computed exactly;
its radical has the dimension of the Jacobson radical in characteristic 0.
Blocks are found modulo two primes p = 1 (mod m): the Frobenius-fixed part
of the center splits into primitive central idempotents over F_p, and each
block reports its dimension and the dimension of its center.
"""

from dataclasses import dataclass, field as dc_field
from math import isqrt

import numpy as np

from ..scalars import CycloScalar, ExactMatrix, ModEchelon, det_mod_p, guide_prime, mat_nullspace, mat_rank
from ..scalars.modular import DenominatorError, primes_one_mod, residues, root_of_unity
from .structure import SCAlgebra, end_algebra, find_unit


class NoUnit(ValueError):
    """The algebra has no two-sided identity."""


class NotSemisimpleError(ValueError):
    def __init__(self, radical_dim):
        super().__init__("trace-form radical has dimension %d" % radical_dim)
        self.radical_dim = radical_dim


class CertificateError(RuntimeError):
    """The two modular certificates disagree with each other or with the exact center."""


class DecompositionError(RuntimeError):
    """Internal inconsistency while splitting central idempotents."""


class NonSplitError(ValueError):
    """A Wedderburn block is not a full matrix algebra over the ground field."""


@dataclass
class GramRadical:
    gram: ExactMatrix
    rank: int
    radical_dim: int


def regular_traces(A):
    """t_k = trace of left multiplication by b_k."""
    t = [CycloScalar.zero(A.m)] * A.dim
    for (k, l), terms in A.table.items():
        for c_idx, c in terms:
            if c_idx == l:
                t[k] = t[k] + c
    return t


def gram_matrix(A):
    """G[i][j] = tr(L_{b_i b_j}) = sum_k c_ij^k t_k."""
    t = regular_traces(A)
    zero = CycloScalar.zero(A.m)
    G = [[zero] * A.dim for _ in range(A.dim)]
    for (i, j), terms in A.table.items():
        acc = zero
        for k, c in terms:
            if t[k]:
                acc = acc + c * t[k]
        G[i][j] = acc
    return ExactMatrix(G, A.m, A.dim)


def gram_radical(A):
    if find_unit(A) is None:
        raise NoUnit("algebra of dimension %d has no unit" % A.dim)
    G = gram_matrix(A)
    r = mat_rank(G)
    return GramRadical(G, r, A.dim - r)


def is_semisimple(A):
    return gram_radical(A).radical_dim == 0


# -- modular helpers ---------------------------------------------------------

class _ModAlgebra:
    """Structure constants reduced mod p, with vectorized products."""

    def __init__(self, A, p, w):
        self.n = A.dim
        self.p = p
        I, J, K, C = A.coo()
        self.I, self.J, self.K = I, J, K
        self.C = residues(C, p, w) if C else np.zeros(0, dtype=np.int64)
        self.unit = None if A.unit is None else residues(A.unit, p, w)

    def mul(self, x, y):
        p = self.p
        z = np.zeros(self.n, dtype=np.int64)
        np.add.at(z, self.K, x[self.I] * y[self.J] % p * self.C % p)
        return z % p

    def power(self, x, e):
        result, base = self.unit.copy(), x.copy()
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def left_matrix(self, x):
        L = np.zeros((self.n, self.n), dtype=np.int64)
        np.add.at(L, (self.K, self.J), x[self.I] * self.C % self.p)
        return L % self.p

    def commutator_blocks(self):
        """For each j, the n x n matrix of z -> z b_j - b_j z."""
        p, n = self.p, self.n
        by_j = np.argsort(self.J, kind="stable")
        by_i = np.argsort(self.I, kind="stable")
        j_starts = np.searchsorted(self.J[by_j], np.arange(n + 1))
        i_starts = np.searchsorted(self.I[by_i], np.arange(n + 1))
        for j in range(n):
            block = np.zeros((n, n), dtype=np.int64)
            sel = by_j[j_starts[j]:j_starts[j + 1]]
            np.add.at(block, (self.K[sel], self.I[sel]), self.C[sel])
            sel = by_i[i_starts[j]:i_starts[j + 1]]
            np.add.at(block, (self.K[sel], self.J[sel]), -self.C[sel])
            yield block % p


def _min_poly(alg, y, e, coords):
    """Monic minimal polynomial (low to high) of y inside the unital algebra eZ."""
    p = alg.p
    powers = [coords(e)]
    cur = e
    while True:
        cur = alg.mul(cur, y)
        powers.append(coords(cur))
        V = np.array(powers, dtype=np.int64).T
        ech = ModEchelon(V.shape[1], p)
        ech.add(V)
        K = ech.nullspace()
        if len(K):
            v = K[0]
            return v * pow(int(v[-1]), -1, p) % p


def _roots(poly, p):
    xs = np.arange(p, dtype=np.int64)
    val = np.zeros(p, dtype=np.int64)
    for c in poly[::-1]:
        val = (val * xs + int(c)) % p
    return [int(x) for x in xs[val == 0]]


def _split_idempotents(alg, center, coords):
    """Primitive idempotents of the Frobenius-fixed subalgebra of the center."""
    p = alg.p
    c = len(center)
    frob = np.array([coords(alg.power(z, p)) for z in center], dtype=np.int64)
    # rows: F(z_a) - z_a in center coordinates; kernel of the transposed map
    diff = (frob - np.eye(c, dtype=np.int64)) % p
    ech = ModEchelon(c, p)
    ech.add(diff.T)
    fixed = [(v @ center) % p for v in ech.nullspace()]
    idems = [alg.unit.copy()]
    for y in fixed:
        refined = []
        for e in idems:
            ye = alg.mul(y, e)
            poly = _min_poly(alg, ye, e, coords)
            roots = _roots(poly, p)
            if len(roots) != len(poly) - 1:
                raise DecompositionError("Frobenius-fixed central element does not split mod %d" % p)
            if len(roots) == 1:
                refined.append(e)
                continue
            for lam in roots:
                f = e.copy()
                for mu in roots:
                    if mu != lam:
                        factor = (ye - mu * e) % p * pow(lam - mu, -1, p) % p
                        f = alg.mul(f, factor)
                refined.append(f)
        idems = refined
    if len(idems) != len(fixed):
        raise DecompositionError("found %d idempotents for a %d-dimensional split center" % (len(idems), len(fixed)))
    return idems


def modular_blocks(A, p, w=None):
    """Sorted (block dim, block center dim) pairs of A computed over F_p."""
    if w is None:
        w = root_of_unity(A.m, p)
    alg = _ModAlgebra(A, p, w)
    n = alg.n
    ech = ModEchelon(n, p)
    for block in alg.commutator_blocks():
        ech.add(block)
    center = ech.nullspace()
    free = [f for f in range(n) if f not in set(ech.pivots)]

    def coords(v):
        return v[free] % p

    idems = _split_idempotents(alg, center, coords)
    out = []
    for e in idems:
        bdim = ModEchelon(n, p)
        bdim.add(alg.left_matrix(e))
        zc = ModEchelon(n, p)
        zc.add(np.array([alg.mul(e, z) for z in center]))
        out.append((bdim.rank, zc.rank))
    return sorted(out)


# -- exact center ------------------------------------------------------------

def exact_center(A):
    """Basis of Z(A) over Q(zeta_m), certified by exact multiplication.

    The commutator rows are chosen modulo the guide prime; the exact kernel
    of those rows is then checked to commute with every basis vector.
    """
    n = A.dim
    lookup = {}
    for (i, j), terms in A.table.items():
        lookup[(i, j)] = dict(terms)
    zero = CycloScalar.zero(A.m)

    def row(j, k):
        return [lookup.get((i, j), {}).get(k, zero) - lookup.get((j, i), {}).get(k, zero) for i in range(n)]

    labels = None
    try:
        P, W = guide_prime(A.m)
        alg = _ModAlgebra(A, P, W)
    except DenominatorError:
        alg = None
    if alg is not None:
        ech = ModEchelon(n, P)
        for j, block in enumerate(alg.commutator_blocks()):
            ech.add(block, labels=[(j, k) for k in range(n)])
        labels = sorted(ech.labels)
    if labels is not None:
        basis = _kernel_columns(ExactMatrix([row(j, k) for j, k in labels], A.m, n) if labels else None, n, A.m)
        if all(_commutes(A, z) for z in basis):
            return basis
    rows = [row(j, k) for j in range(n) for k in range(n)]
    return _kernel_columns(ExactMatrix(rows, A.m, n), n, A.m)


def _kernel_columns(M, n, m):
    if M is None:
        return [ExactMatrix.identity(n, m).column(i) for i in range(n)]
    return mat_nullspace(M).columns()


def _commutes(A, z):
    zs = {i: c for i, c in enumerate(z) if c}
    one = CycloScalar.one(A.m)
    for j in range(A.dim):
        b = {j: one}
        if A._mul_sparse(zs, b) != A._mul_sparse(b, zs):
            return False
    return True


# -- block report ------------------------------------------------------------

@dataclass
class Block:
    dim: int
    center_dim: int
    m: int = None
    split: bool = False

    def to_json(self):
        return {"dim": self.dim, "center_dim": self.center_dim, "m": self.m, "split": self.split}


@dataclass
class BlockReport:
    dim: int
    semisimple: bool
    primes: list
    blocks: list = dc_field(default_factory=list)
    gram_det_mod: dict = dc_field(default_factory=dict)
    center_dim: int = 0
    probed: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "dim": self.dim,
            "semisimple": self.semisimple,
            "primes": list(self.primes),
            "blocks": [b.to_json() for b in self.blocks],
            "gram_det_mod": [self.gram_det_mod[p] for p in self.primes],
            "center_dim": self.center_dim,
            "probed_primes": list(self.probed),
        }

    @property
    def block_dims(self):
        return sorted(b.dim for b in self.blocks)

    def length(self):
        """Sum of the matrix sizes of the blocks (requires every block split)."""
        if not all(b.split for b in self.blocks):
            raise NonSplitError("a block is not split over the ground field")
        return sum(b.m for b in self.blocks)


def _to_block(dim, cdim):
    if cdim == 1:
        m = isqrt(dim)
        if m * m != dim:
            raise DecompositionError("block of dimension %d with 1-dimensional center is not a matrix algebra" % dim)
        return Block(dim, 1, m, True)
    if dim % cdim or isqrt(dim // cdim) ** 2 != dim // cdim:
        raise DecompositionError("block of dimension %d over a degree-%d center" % (dim, cdim))
    return Block(dim, cdim, None, False)


def refines(fine, coarse):
    """True when the (dim, center_dim) multiset ``fine`` is obtained from
    ``coarse`` by splitting blocks: each coarse block (d, c) is the union of
    fine blocks of the same matrix size whose center dimensions sum to c."""
    fine = sorted(fine, reverse=True)
    coarse = sorted(coarse, reverse=True)

    def assign(i, remaining):
        if i == len(fine):
            return all(c == 0 for _, c in remaining)
        d, c = fine[i]
        seen = set()
        for k, (dk, ck) in enumerate(remaining):
            if (dk, ck) in seen or ck < c or dk * c != d * ck:
                continue
            seen.add((dk, ck))
            rest = list(remaining)
            rest[k] = (dk - d, ck - c)
            if assign(i + 1, rest):
                return True
        return False
    return assign(0, coarse)


def block_decompose(A, n_primes=2, probe=6, max_primes=24):
    """Certified Wedderburn decomposition of a semisimple SCAlgebra.

    Good primes (p = 1 mod m beyond the denominators and the dimension,
    Gram determinant nonzero mod p) are scanned in increasing order. A
    prime can only split the blocks over Q(zeta_m) further, never merge
    them, so the coarsest structure seen among the first ``probe`` good
    primes is reported once ``n_primes`` primes agree on it, and every
    other probed structure must refine it.

    Raises NoUnit, NotSemisimpleError, or CertificateError.
    """
    gr = gram_radical(A)
    if gr.radical_dim:
        raise NotSemisimpleError(gr.radical_dim)
    zdim = len(exact_center(A))
    lower = max(2 * A.max_denominator(), A.dim)
    observed, dets = [], {}
    for p in primes_one_mod(A.m, lower):
        w = root_of_unity(A.m, p)
        try:
            d = det_mod_p(gr.gram.mod_image(p, w), p)
        except DenominatorError:
            continue
        if d == 0:
            continue
        try:
            blocks = modular_blocks(A, p, w)
        except DenominatorError:
            continue
        if sum(c for _, c in blocks) != zdim:
            raise CertificateError("center dimension %d mod %d != exact %d" % (sum(c for _, c in blocks), p, zdim))
        if sum(b for b, _ in blocks) != A.dim:
            raise CertificateError("block dimensions mod %d do not add up to %d" % (p, A.dim))
        observed.append((p, blocks))
        dets[p] = d
        if len(observed) >= max(probe, n_primes):
            fewest = min(len(b) for _, b in observed)
            if sum(len(b) == fewest for _, b in observed) >= n_primes:
                break
        if len(observed) >= max_primes:
            break
    fewest = min(len(b) for _, b in observed)
    coarse = [(p, b) for p, b in observed if len(b) == fewest]
    target = coarse[0][1]
    primes = [p for p, b in coarse if b == target][:n_primes]
    if len(primes) < n_primes:
        raise CertificateError("no %d primes agree on the coarsest block structure: %s" % (n_primes, observed))
    for p, b in observed:
        if not refines(b, target):
            raise CertificateError("block data mod %d does not refine the data mod %s" % (p, primes))
    blocks = [_to_block(d, c) for d, c in target]
    return BlockReport(A.dim, True, primes, blocks, {p: dets[p] for p in primes}, zdim,
                       probed=[p for p, _ in observed])


@dataclass
class LengthReport:
    phi: int
    psi: int
    blocks: list

    def to_json(self):
        return {"phi": self.phi, "psi": self.psi, "blocks": [b.to_json() for b in self.blocks]}


def object_length(X, cap=None):
    """(phi, psi) for an object of k[E]^# (or directly for its End algebra).

    phi is the length of the object (sum of block sizes) and psi the
    dimension of End(X); phi <= psi <= phi^2 always holds for split blocks.
    """
    A = X if isinstance(X, SCAlgebra) else end_algebra(X, cap=cap)
    report = block_decompose(A)
    phi = report.length()
    psi = A.dim
    if not phi <= psi <= phi * phi:
        raise DecompositionError("phi=%d, psi=%d violates phi <= psi <= phi^2" % (phi, psi))
    return LengthReport(phi, psi, report.blocks)


__all__ = [
    "NoUnit", "NotSemisimpleError", "CertificateError", "DecompositionError", "NonSplitError",
    "GramRadical", "regular_traces", "gram_matrix", "gram_radical", "is_semisimple",
    "modular_blocks", "exact_center", "Block", "BlockReport", "block_decompose",
    "LengthReport", "object_length",
]
