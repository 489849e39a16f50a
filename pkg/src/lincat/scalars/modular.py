"""Reduction of cyclotomic scalars modulo primes p = 1 (mod m), plus
linear algebra over the prime field F_p on int64 numpy arrays."""

from dataclasses import dataclass

import numpy as np

from .cyclo import CycloScalar


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primes_one_mod(m, above=1):
    """Primes p = 1 (mod m) with p > above, in increasing order."""
    p = above + 1
    p += (1 - p) % m
    while True:
        if is_prime(p):
            yield p
        p += m


def largest_prime_one_mod(m, below):
    p = below - 1
    p -= (p - 1) % m
    while p > 2:
        if is_prime(p):
            return p
        p -= m
    raise ValueError("no prime = 1 mod %d below %d" % (m, below))


def has_exact_order(w, m, p):
    if pow(w, m, p) != 1:
        return False
    return all(pow(w, m // r, p) != 1 for r in prime_factors(m))


def root_of_unity(m, p):
    """The primitive m-th root of unity g^((p-1)/m) for the smallest primitive root g mod p."""
    if (p - 1) % m:
        raise ValueError("p = %d is not 1 mod %d" % (p, m))
    factors = prime_factors(p - 1)
    for g in range(1, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return pow(g, (p - 1) // m, p)
    raise ValueError("no primitive root mod %d" % p)


@dataclass(frozen=True)
class ModScalar:
    p: int
    residue: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.p)

    def _other(self, other):
        if isinstance(other, ModScalar):
            if other.p != self.p:
                raise ValueError("mismatched primes %d and %d" % (self.p, other.p))
            return other.residue
        return int(other)

    def __add__(self, other):
        return ModScalar(self.p, self.residue + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ModScalar(self.p, self.residue - self._other(other))

    def __neg__(self):
        return ModScalar(self.p, -self.residue)

    def __mul__(self, other):
        return ModScalar(self.p, self.residue * self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other) % self.p
        if o == 0:
            raise ZeroDivisionError("division by zero mod %d" % self.p)
        return ModScalar(self.p, self.residue * pow(o, -1, self.p))

    def __pow__(self, k):
        return ModScalar(self.p, pow(self.residue, k, self.p))

    def __int__(self):
        return self.residue


class DenominatorError(ArithmeticError):
    """A coefficient denominator is not invertible modulo the chosen prime."""


def reduce_mod(a, p, zeta_image):
    """Ring-homomorphic image of ``a`` in F_p sending zeta_m to ``zeta_image``."""
    m = a.m
    w = int(zeta_image.residue if isinstance(zeta_image, ModScalar) else zeta_image)
    if (p - 1) % m:
        raise ValueError("p = %d is not 1 mod %d" % (p, m))
    if not has_exact_order(w % p, m, p):
        raise ValueError("%d is not a primitive %d-th root of unity mod %d" % (w, m, p))
    return ModScalar(p, _residue(a, p, w))


def _residue(a, p, w):
    total = 0
    wk = 1
    for c in a.coeffs:
        if c:
            if c.denominator % p == 0:
                raise DenominatorError("denominator %d not invertible mod %d" % (c.denominator, p))
            total += c.numerator * pow(c.denominator, -1, p) * wk
        wk = wk * w % p
    return total % p


def residues(entries, p, w):
    """Vectorised ``reduce_mod`` over a flat sequence of scalars (no order check)."""
    cache = {}
    out = np.empty(len(entries), dtype=np.int64)
    for i, a in enumerate(entries):
        key = a.coeffs
        r = cache.get(key)
        if r is None:
            r = cache[key] = _residue(a, p, w)
        out[i] = r
    return out


class ModEchelon:
    """Incremental reduced row echelon form over F_p.

    Rows are fed in blocks; ``add`` returns the labels of the rows that
    enlarged the row space. Those rows are linearly independent and span
    everything added so far.
    """

    def __init__(self, ncols, p):
        if p >= 1 << 26:
            raise ValueError("prime too large for int64 elimination")
        self.ncols = ncols
        self.p = p
        if ncols * (p - 1) ** 2 >= 1 << 63:
            raise ValueError("matrix too wide for int64 elimination mod %d" % p)
        self.E = np.zeros((0, ncols), dtype=np.int64)
        self.pivots = []
        self.labels = []
        self._seen = 0

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, rows, labels=None):
        p = self.p
        B = np.array(rows, dtype=np.int64).reshape(-1, self.ncols) % p
        if labels is None:
            labels = list(range(self._seen, self._seen + len(B)))
        self._seen += len(B)
        if self.pivots and len(B):
            B = (B - (B[:, self.pivots] @ self.E) % p) % p
        new = []
        alive = np.any(B != 0, axis=1)
        while alive.any():
            idx = np.nonzero(alive)[0]
            sub = B[idx]
            col = int(np.argmax(np.any(sub != 0, axis=0)))
            r = int(idx[np.nonzero(sub[:, col])[0][0]])
            row = B[r] * pow(int(B[r, col]), -1, p) % p
            B[r] = 0
            alive[r] = False
            others = np.nonzero(B[:, col])[0]
            if len(others):
                B[others] = (B[others] - np.outer(B[others, col], row) % p) % p
            if len(self.E):
                hit = np.nonzero(self.E[:, col])[0]
                if len(hit):
                    self.E[hit] = (self.E[hit] - np.outer(self.E[hit, col], row) % p) % p
            pos = int(np.searchsorted(self.pivots, col))
            self.E = np.insert(self.E, pos, row, axis=0)
            self.pivots.insert(pos, col)
            self.labels.insert(pos, labels[r])
            new.append(labels[r])
            alive &= np.any(B != 0, axis=1)
        return new

    def nullspace(self):
        """Kernel basis (rows) of the accumulated matrix, one vector per free column."""
        p = self.p
        free = [c for c in range(self.ncols) if c not in set(self.pivots)]
        K = np.zeros((len(free), self.ncols), dtype=np.int64)
        for t, f in enumerate(free):
            K[t, f] = 1
            if self.pivots:
                K[t, self.pivots] = (-self.E[:, f]) % p
        return K

    def reduce(self, v):
        """Remainder of ``v`` after elimination against the current rows."""
        v = np.asarray(v, dtype=np.int64) % self.p
        if self.pivots:
            v = (v - (v[self.pivots] @ self.E) % self.p) % self.p
        return v


def rank_mod_p(A, p):
    ech = ModEchelon(A.shape[1], p)
    ech.add(A)
    return ech.rank


def det_mod_p(A, p):
    """Determinant of a square int64 matrix over F_p."""
    A = np.array(A, dtype=np.int64) % p
    n = A.shape[0]
    det = 1
    for col in range(n):
        nz = np.nonzero(A[col:, col])[0]
        if not len(nz):
            return 0
        r = col + int(nz[0])
        if r != col:
            A[[col, r]] = A[[r, col]]
            det = -det
        piv = int(A[col, col])
        det = det * piv % p
        inv = pow(piv, -1, p)
        below = A[col + 1:, col] * inv % p
        A[col + 1:] = (A[col + 1:] - np.outer(below, A[col]) % p) % p
    return det % p


def matmul_mod(A, B, p):
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64)) % p


def modular_image(values, p, w, shape):
    """Residues of a flat list of CycloScalars reshaped to ``shape``."""
    return residues(values, p, w).reshape(shape)


def reduce_scalar(a, p, w):
    """Residue of a single scalar as a plain int; raises DenominatorError."""
    if not isinstance(a, CycloScalar):
        raise TypeError("expected CycloScalar")
    return _residue(a, p, w)
