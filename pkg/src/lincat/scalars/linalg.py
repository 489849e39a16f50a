"""Exact dense linear algebra over Q(zeta_m).

Rank and kernel are computed by a modular-guided scheme: an elimination
modulo a large prime p = 1 (mod m) picks a maximal set of independent rows
(independence mod p implies independence over Q(zeta_m)); the kernel of
those rows is then computed exactly by fraction-free (Bareiss) elimination
and checked exactly against every remaining row. A failed check means the
prime was unlucky and triggers a full exact elimination, so the result is
exact either way.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .cyclo import CycloScalar, as_scalar, euler_phi
from .modular import DenominatorError, ModEchelon, largest_prime_one_mod, residues, root_of_unity

GUIDE_PRIME_BOUND = 1 << 25


@lru_cache(maxsize=None)
def guide_prime(m):
    p = largest_prime_one_mod(m, GUIDE_PRIME_BOUND)
    return p, root_of_unity(m, p)


class ExactMatrix:
    """Immutable rows x cols grid of CycloScalar entries."""

    __slots__ = ("rows", "cols", "m", "entries")

    def __init__(self, entries, m, cols=None):
        self.m = m
        self.entries = tuple(tuple(as_scalar(m, x) for x in row) for row in entries)
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        if any(len(row) != cols for row in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, rows, cols, m):
        z = CycloScalar.zero(m)
        return cls([[z] * cols for _ in range(rows)], m, cols)

    @classmethod
    def identity(cls, n, m):
        z, o = CycloScalar.zero(m), CycloScalar.one(m)
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], m, n)

    @classmethod
    def from_columns(cls, columns, nrows, m):
        return cls([[col[i] for col in columns] for i in range(nrows)], m, len(columns))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return ExactMatrix([self.column(j) for j in range(self.cols)], self.m, self.rows)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        zero = CycloScalar.zero(self.m)
        cols = other.columns()
        out = []
        for row in self.entries:
            new = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return ExactMatrix(out, self.m, other.cols)

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "ExactMatrix(%d x %d, m=%d)" % (self.rows, self.cols, self.m)

    def rank(self):
        return mat_rank(self)

    def nullspace(self):
        return mat_nullspace(self)

    def mod_image(self, p, w):
        flat = [x for row in self.entries for x in row]
        return residues(flat, p, w).reshape(self.rows, self.cols)

    def to_json(self):
        return [[str(x) for x in row] for row in self.entries]


# -- exact elimination ----------------------------------------------------

def _is_rational(entries):
    return all(x.is_rational() for row in entries for x in row)


def _integer_rows(entries):
    """Rational rows scaled to primitive integer rows (same row space)."""
    out = []
    for row in entries:
        fr = [x.coeffs[0] for x in row]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        out.append([int(f * den) for f in fr])
    return out


def _cyclo_rows(entries):
    """Cyclotomic rows with denominators cleared so every entry lies in Z[zeta]."""
    out = []
    for row in entries:
        den = 1
        for x in row:
            d = x.denominator()
            den = den * d // gcd(den, d)
        out.append([x * den for x in row])
    return out


def bareiss_echelon(rows, ncols):
    """Fraction-free row echelon form over an integral domain.

    Works for Python ints and for CycloScalar entries in Z[zeta]; every
    division performed is exact. Returns (echelon rows, pivot columns).
    """
    A = [list(r) for r in rows]
    nrows = len(A)
    pivots = []
    prev = 1
    r = 0
    integral = bool(A) and isinstance(A[0][0], int) if ncols else True
    for c in range(ncols):
        if r >= nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pr = A[r]
        a = pr[c]
        for i in range(r + 1, nrows):
            row = A[i]
            b = row[c]
            if integral:
                if b:
                    A[i] = [(a * x - b * y) // prev for x, y in zip(row, pr)]
                elif prev != 1 or a != 1:
                    A[i] = [(a * x) // prev for x in row]
            else:
                if b:
                    A[i] = [(a * x - b * y) / prev for x, y in zip(row, pr)]
                else:
                    A[i] = [(a * x) / prev for x in row]
        prev = a
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _kernel_from_echelon(echelon, pivots, ncols, one):
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [0 * one] * ncols
        x[f] = one
        for row, pc in zip(reversed(echelon), reversed(pivots)):
            s = 0 * one
            for c in range(pc + 1, ncols):
                if row[c] and x[c]:
                    s = s + row[c] * x[c]
            x[pc] = -s / row[pc] if s else 0 * one
        basis.append(x)
    return basis


def _primitive_int(vec):
    den = 1
    for f in vec:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


class _Solver:
    """Shared elimination state for rank / kernel / column-basis queries."""

    def __init__(self, M):
        self.M = M
        self.m = M.m
        self.rational = euler_phi(M.m) == 1 or _is_rational(M.entries)
        self._mod = None

    def modular(self):
        if self._mod is None:
            M = self.M
            p, w = guide_prime(self.m)
            ech = ModEchelon(M.cols, p)
            try:
                ech.add(M.mod_image(p, w))
            except DenominatorError:
                ech = None
            self._mod = ech
        return self._mod

    def exact_rows(self, indices):
        sub = [self.M.entries[i] for i in indices]
        if self.rational:
            return _integer_rows(sub)
        return _cyclo_rows(sub)

    def kernel(self):
        """Exact kernel basis and the certified row-space pivot data."""
        M = self.M
        ech = self.modular()
        if ech is not None:
            S = sorted(ech.labels)
            ker = self._kernel_of(S)
            if self._verify(ker, [i for i in range(M.rows) if i not in set(S)]):
                return ker, ech.rank, list(ech.pivots)
        ker = self._kernel_of(range(M.rows))
        rank = M.cols - len(ker)
        return ker, rank, None

    def _kernel_of(self, indices):
        rows = self.exact_rows(indices)
        ech, piv = bareiss_echelon(rows, self.M.cols)
        if self.rational:
            ech = [[Fraction(x) for x in row] for row in ech]
            ker = _kernel_from_echelon(ech, piv, self.M.cols, Fraction(1))
            return [_primitive_int(v) for v in ker]
        return _kernel_from_echelon(ech, piv, self.M.cols, CycloScalar.one(self.m))

    def _verify(self, ker, row_indices):
        if not ker or not row_indices:
            return True
        rows = self.exact_rows(row_indices)
        for v in ker:
            support = [j for j, x in enumerate(v) if x]
            for row in rows:
                s = 0
                for j in support:
                    if row[j]:
                        s = s + row[j] * v[j]
                if s:
                    return False
        return True


def mat_rank(M):
    """Exact rank over Q(zeta_m)."""
    if M.rows == 0 or M.cols == 0:
        return 0
    solver = _Solver(M)
    ech = solver.modular()
    if ech is not None and ech.rank == min(M.rows, M.cols):
        return ech.rank
    _, rank, _ = solver.kernel()
    return rank


def mat_nullspace(M):
    """Exact kernel basis, returned as a cols x nullity ExactMatrix."""
    if M.cols == 0:
        return ExactMatrix([], M.m, 0)
    if M.rows == 0:
        return ExactMatrix.identity(M.cols, M.m)
    ker, _, _ = _Solver(M).kernel()
    return ExactMatrix.from_columns(ker, M.cols, M.m)


def mat_column_basis(M):
    """Indices of columns forming a basis of the column space (leftmost choice)."""
    if M.rows == 0 or M.cols == 0:
        return []
    solver = _Solver(M)
    ech = solver.modular()
    if ech is not None and ech.rank == M.rows:
        return list(ech.pivots)
    ker, rank, pivots = solver.kernel()
    if pivots is not None:
        return pivots
    rows = solver.exact_rows(range(M.rows))
    _, piv = bareiss_echelon(rows, M.cols)
    return piv


def mat_solve(M, b):
    """Some exact x with M x = b, or None when the system is inconsistent."""
    aug = ExactMatrix([list(row) + [bi] for row, bi in zip(M.entries, b)], M.m, M.cols + 1)
    ker = mat_nullspace(aug)
    for col in ker.columns():
        t = col[-1]
        if t:
            return [-(x / t) for x in col[:-1]]
    return None


def same_span(A, B):
    """True when the column spaces of A and B coincide."""
    if A.rows != B.rows:
        raise ValueError("ambient dimensions differ")
    joint = ExactMatrix([list(ra) + list(rb) for ra, rb in zip(A.entries, B.entries)], A.m, A.cols + B.cols)
    r = mat_rank(joint)
    return r == mat_rank(A) == mat_rank(B)
