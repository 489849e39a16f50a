"""Source categories E with finite hom-sets and strict symmetric monoidal
structure: Vec^f_q (matrices over F_q) and binary products of such.

Both instances are strict: X (x) (Y (x) Z) and (X (x) Y) (x) Z are the same
object, the unit is neutral on the nose, and tensoring morphisms is the
Kronecker product, so composites can be compared entry by entry.
"""

import os
from abc import ABC, abstractmethod
from itertools import product

DEFAULT_CAP = 1 << 20


def default_cap():
    """Hom enumeration cap; the ``LINCAT_CAP`` environment variable overrides."""
    env = os.environ.get("LINCAT_CAP")
    return int(env) if env else DEFAULT_CAP


class CapExceeded(RuntimeError):
    """A hom-set is too large to enumerate; use a counting path instead."""


class SourceObject(ABC):
    """Interface shared by objects of the shipped source categories."""

    @abstractmethod
    def hom_size(self, other): ...

    @abstractmethod
    def homs(self, other): ...

    @abstractmethod
    def identity(self): ...

    @abstractmethod
    def zero_map(self, other): ...

    @abstractmethod
    def tensor(self, other): ...

    @abstractmethod
    def unit(self): ...

    @abstractmethod
    def dual(self): ...

    @abstractmethod
    def coevaluation(self): ...

    @abstractmethod
    def evaluation(self): ...

    @abstractmethod
    def braiding(self, other): ...


# -- Vec^f_q --------------------------------------------------------------

class VecSpace(SourceObject):
    """F_q^d."""

    __slots__ = ("field", "dim", "_hash")

    def __init__(self, field, dim):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        self.field = field
        self.dim = dim
        self._hash = hash((field.q, field.modulus, dim))

    def __eq__(self, other):
        return isinstance(other, VecSpace) and self.dim == other.dim and self.field == other.field

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "V%d^%d" % (self.field.q, self.dim)

    __repr__ = __str__

    def _same(self, other):
        if not isinstance(other, VecSpace) or other.field != self.field:
            raise ValueError("objects of different categories: %s, %s" % (self, other))

    def hom_size(self, other):
        self._same(other)
        return self.field.q ** (self.dim * other.dim)

    def homs(self, other, cap=None):
        """All of Hom(self, other) in row-major lexicographic order of entry codes."""
        self._same(other)
        cap = default_cap() if cap is None else cap
        size = self.hom_size(other)
        if size > cap:
            raise CapExceeded("|Hom(%s, %s)| = %d exceeds cap %d" % (self, other, size, cap))
        for entries in product(range(self.field.q), repeat=self.dim * other.dim):
            yield VecMorphism(self, other, entries)

    def identity(self):
        d = self.dim
        return VecMorphism(self, self, tuple(int(i == j) for i in range(d) for j in range(d)))

    def scalar(self, a):
        """a * id for a field element code a."""
        d = self.dim
        return VecMorphism(self, self, tuple(a if i == j else 0 for i in range(d) for j in range(d)))

    def zero_map(self, other):
        return VecMorphism(self, other, (0,) * (self.dim * other.dim))

    def tensor(self, other):
        self._same(other)
        return VecSpace(self.field, self.dim * other.dim)

    def unit(self):
        return VecSpace(self.field, 1)

    def dual(self):
        return self

    def coevaluation(self):
        """alpha: 1 -> X (x) X^v, the vector sum_i e_i (x) e_i^*."""
        d = self.dim
        col = tuple(int(i // d == i % d) for i in range(d * d))
        return VecMorphism(self.unit(), self.tensor(self.dual()), col)

    def evaluation(self):
        """beta: X^v (x) X -> 1, the pairing sum_i e_i^* (x) e_i."""
        d = self.dim
        row = tuple(int(i // d == i % d) for i in range(d * d))
        return VecMorphism(self.dual().tensor(self), self.unit(), row)

    def braiding(self, other):
        """Swap X (x) Y -> Y (x) X: the perfect-shuffle permutation matrix."""
        a, b = self.dim, other.dim
        n = a * b
        entries = [0] * (n * n)
        for i in range(a):
            for j in range(b):
                entries[(j * a + i) * n + (i * b + j)] = 1
        return VecMorphism(self.tensor(other), other.tensor(self), tuple(entries))


class VecMorphism:
    """A (dim cod) x (dim dom) matrix over F_q, entries stored row-major as codes."""

    __slots__ = ("dom", "cod", "entries", "_hash")

    def __init__(self, dom, cod, entries):
        entries = tuple(entries)
        if len(entries) != dom.dim * cod.dim:
            raise ValueError("expected %d entries" % (dom.dim * cod.dim))
        self.dom = dom
        self.cod = cod
        self.entries = entries
        self._hash = None

    @classmethod
    def from_rows(cls, dom, cod, rows):
        return cls(dom, cod, tuple(x for row in rows for x in row))

    @property
    def field(self):
        return self.dom.field

    def rows(self):
        c = self.dom.dim
        return [self.entries[i * c:(i + 1) * c] for i in range(self.cod.dim)]

    def __eq__(self, other):
        return (isinstance(other, VecMorphism) and self.entries == other.entries
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dom.dim, self.cod.dim, self.entries))
        return self._hash

    def __str__(self):
        return "%s->%s%s" % (self.dom, self.cod, list(self.rows()))

    __repr__ = __str__

    def __matmul__(self, other):
        """self o other."""
        if other.cod != self.dom:
            raise ValueError("cannot compose %s after %s" % (self.dom, other.cod))
        F = self.dom.field
        add, mul = F.add_table, F.mul_table
        n, k, l = self.cod.dim, self.dom.dim, other.dom.dim
        A, B = self.entries, other.entries
        out = []
        for i in range(n):
            arow = A[i * k:(i + 1) * k]
            for j in range(l):
                acc = 0
                for t in range(k):
                    a = arow[t]
                    if a:
                        b = B[t * l + j]
                        if b:
                            acc = add[acc][mul[a][b]]
                out.append(acc)
        return VecMorphism(other.dom, self.cod, out)

    def tensor(self, other):
        """Kronecker product."""
        F = self.dom.field
        mul = F.mul_table
        r1, c1 = self.cod.dim, self.dom.dim
        r2, c2 = other.cod.dim, other.dom.dim
        A, B = self.entries, other.entries
        out = [0] * (r1 * r2 * c1 * c2)
        width = c1 * c2
        for i1 in range(r1):
            for j1 in range(c1):
                a = A[i1 * c1 + j1]
                if not a:
                    continue
                row_a = mul[a]
                for i2 in range(r2):
                    base = (i1 * r2 + i2) * width + j1 * c2
                    for j2 in range(c2):
                        b = B[i2 * c2 + j2]
                        if b:
                            out[base + j2] = row_a[b]
        return VecMorphism(self.dom.tensor(other.dom), self.cod.tensor(other.cod), out)

    def scaled(self, a):
        mul = self.dom.field.mul_table[a]
        return VecMorphism(self.dom, self.cod, tuple(mul[x] for x in self.entries))

    def trace(self):
        if self.dom != self.cod:
            raise ValueError("trace of a non-endomorphism")
        add = self.dom.field.add_table
        d = self.dom.dim
        acc = 0
        for i in range(d):
            acc = add[acc][self.entries[i * d + i]]
        return acc

    def is_zero(self):
        return not any(self.entries)


# -- products of source categories ----------------------------------------

class ProductObject(SourceObject):
    """(X_1, X_2) in E_1 x E_2; every operation is componentwise."""

    __slots__ = ("parts", "_hash")

    def __init__(self, *parts):
        self.parts = tuple(parts)
        self._hash = hash(self.parts)

    def __eq__(self, other):
        return isinstance(other, ProductObject) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "(%s)" % ", ".join(str(p) for p in self.parts)

    __repr__ = __str__

    def hom_size(self, other):
        size = 1
        for a, b in zip(self.parts, other.parts):
            size *= a.hom_size(b)
        return size

    def homs(self, other, cap=None):
        cap = default_cap() if cap is None else cap
        size = self.hom_size(other)
        if size > cap:
            raise CapExceeded("|Hom(%s, %s)| = %d exceeds cap %d" % (self, other, size, cap))
        pools = [list(a.homs(b, cap)) for a, b in zip(self.parts, other.parts)]
        for combo in product(*pools):
            yield ProductMorphism(combo)

    def identity(self):
        return ProductMorphism(tuple(p.identity() for p in self.parts))

    def zero_map(self, other):
        return ProductMorphism(tuple(a.zero_map(b) for a, b in zip(self.parts, other.parts)))

    def tensor(self, other):
        return ProductObject(*(a.tensor(b) for a, b in zip(self.parts, other.parts)))

    def unit(self):
        return ProductObject(*(p.unit() for p in self.parts))

    def dual(self):
        return ProductObject(*(p.dual() for p in self.parts))

    def coevaluation(self):
        return ProductMorphism(tuple(p.coevaluation() for p in self.parts))

    def evaluation(self):
        return ProductMorphism(tuple(p.evaluation() for p in self.parts))

    def braiding(self, other):
        return ProductMorphism(tuple(a.braiding(b) for a, b in zip(self.parts, other.parts)))


class ProductMorphism:
    __slots__ = ("parts", "dom", "cod", "_hash")

    def __init__(self, parts):
        self.parts = tuple(parts)
        self.dom = ProductObject(*(f.dom for f in self.parts))
        self.cod = ProductObject(*(f.cod for f in self.parts))
        self._hash = hash(self.parts)

    def __eq__(self, other):
        return isinstance(other, ProductMorphism) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "(%s)" % ", ".join(str(p) for p in self.parts)

    __repr__ = __str__

    def __matmul__(self, other):
        return ProductMorphism(tuple(f @ g for f, g in zip(self.parts, other.parts)))

    def tensor(self, other):
        return ProductMorphism(tuple(f.tensor(g) for f, g in zip(self.parts, other.parts)))

    def is_zero(self):
        return all(f.is_zero() for f in self.parts)


# -- module-level operations ---------------------------------------------

def hom_enumerate(X, Y, cap=None):
    """Hom_E(X, Y) as a list in canonical order."""
    return list(X.homs(Y, cap))


def monoidal_data(X):
    """(X^v, alpha: 1 -> X (x) X^v, beta: X^v (x) X -> 1)."""
    return X.dual(), X.coevaluation(), X.evaluation()


def tensor(a, b):
    """Tensor product of two objects or two morphisms."""
    return a.tensor(b)


def snake_identities(X):
    """Both zig-zag composites for X, returned as a pair of booleans."""
    Xd, alpha, beta = monoidal_data(X)
    first = X.identity().tensor(beta) @ alpha.tensor(X.identity())
    second = beta.tensor(Xd.identity()) @ Xd.identity().tensor(alpha)
    return first == X.identity(), second == Xd.identity()


def object_label(X):
    """Canonical report notation: ``Vq^d`` or a tuple of those."""
    return str(X)
