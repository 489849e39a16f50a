"""Finite fields F_q, their multiplicative characters, and the monoid
algebra k[F] of (F, *) with its primitive idempotents."""

from fractions import Fraction
from itertools import product

from .scalars import CycloScalar, is_prime
from .scalars.modular import prime_factors

# Irreducible moduli, coefficients low to high (monic).
DEFAULT_MODULI = {
    (2, 1): (0, 1),
    (3, 1): (0, 1),
    (5, 1): (0, 1),
    (7, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
}


def _poly_mod(a, mod, p):
    a = [x % p for x in a]
    k = len(mod) - 1
    for deg in range(len(a) - 1, k - 1, -1):
        c = a[deg]
        if c:
            for i in range(k + 1):
                a[deg - k + i] = (a[deg - k + i] - c * mod[i]) % p
    return a[:k] + [0] * (k - len(a[:k]))


def _is_irreducible(mod, p):
    k = len(mod) - 1
    if mod[-1] % p != 1:
        return False
    for deg in range(1, k // 2 + 1):
        for tail in product(range(p), repeat=deg):
            divisor = list(tail) + [1]
            if not any(_poly_mod(list(mod), divisor, p)):
                return False
    return True


def field_params(q):
    """(p, k) with p**k == q, or ValueError when q is not a prime power."""
    if q < 2:
        raise ValueError("q must be a prime power >= 2, got %d" % q)
    p = prime_factors(q)[0]
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValueError("q = %d is not a prime power" % q)
    return p, k


class FieldDescriptor:
    """F_q = F_p[x]/(modulus). Elements are encoded as integers 0..q-1 via
    their coordinate vectors in base p (constant coefficient least
    significant); code 0 is zero and code 1 is one."""

    def __init__(self, p, k=1, modulus=None):
        if not is_prime(p):
            raise ValueError("characteristic %d is not prime" % p)
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, k))
            if modulus is None:
                raise ValueError("no default modulus for q = %d^%d; supply one" % (p, k))
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1:
            raise ValueError("modulus must have degree %d" % k)
        if not _is_irreducible(modulus, p):
            raise ValueError("modulus %r is reducible over F_%d" % (modulus, p))
        self.p, self.k, self.modulus = p, k, modulus
        self.q = q = p ** k
        self._hash = hash((p, k, modulus))
        coords = [self.coordinates(a) for a in range(q)]
        encode = {tuple(c): a for a, c in enumerate(coords)}
        self.add_table = [[encode[tuple((x + y) % p for x, y in zip(coords[a], coords[b]))]
                           for b in range(q)] for a in range(q)]
        self.neg_table = [encode[tuple((-x) % p for x in coords[a])] for a in range(q)]
        self.mul_table = [[encode[tuple(self._mul_coords(coords[a], coords[b]))]
                           for b in range(q)] for a in range(q)]
        self.inv_table = [None] + [next(b for b in range(1, q) if self.mul_table[a][b] == 1)
                                   for a in range(1, q)]
        if len(encode) != q:
            raise ValueError("element count mismatch")
        self.generator = self._find_generator()
        self.log_table = {}
        x = 1
        for t in range(q - 1):
            self.log_table[x] = t
            x = self.mul_table[x][self.generator]

    def _mul_coords(self, a, b):
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return _poly_mod(prod, self.modulus, self.p)

    def coordinates(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _find_generator(self):
        q = self.q
        if q == 2:
            return 1
        factors = prime_factors(q - 1)
        for g in range(2, q):
            if all(self.power(g, (q - 1) // r) != 1 for r in factors):
                return g
        raise AssertionError("F_%d has no primitive element" % q)

    def power(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self.mul_table[r][a]
            a = self.mul_table[a][a]
            e >>= 1
        return r

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def elements(self):
        return [FqElem(self, a) for a in range(self.q)]

    def __call__(self, code):
        return FqElem(self, code)

    def __eq__(self, other):
        return isinstance(other, FieldDescriptor) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "FieldDescriptor(p=%d, k=%d, modulus=%r)" % (self.p, self.k, self.modulus)

    def to_json(self):
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus), "generator": self.generator}


_FIELDS = {}


def finite_field(q, modulus=None):
    """Cached FieldDescriptor for F_q with the default (or given) modulus."""
    p, k = field_params(q)
    key = (p, k, tuple(modulus) if modulus is not None else None)
    if key not in _FIELDS:
        _FIELDS[key] = FieldDescriptor(p, k, modulus)
    return _FIELDS[key]


class FqElem:
    __slots__ = ("field", "code")

    def __init__(self, field, code):
        if not 0 <= code < field.q:
            raise ValueError("element code %d out of range for F_%d" % (code, field.q))
        self.field = field
        self.code = code

    @property
    def coordinates(self):
        return self.field.coordinates(self.code)

    def _c(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.code
        return other

    def __add__(self, other):
        return FqElem(self.field, self.field.add_table[self.code][self._c(other)])

    def __neg__(self):
        return FqElem(self.field, self.field.neg_table[self.code])

    def __sub__(self, other):
        return self + (-FqElem(self.field, self._c(other)))

    def __mul__(self, other):
        return FqElem(self.field, self.field.mul_table[self.code][self._c(other)])

    def __truediv__(self, other):
        b = self._c(other)
        if b == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.field.q)
        return FqElem(self.field, self.field.mul_table[self.code][self.field.inv_table[b]])

    def __pow__(self, e):
        if e < 0:
            return (FqElem(self.field, 1) / self) ** (-e)
        return FqElem(self.field, self.field.power(self.code, e))

    def __eq__(self, other):
        return isinstance(other, FqElem) and self.field == other.field and self.code == other.code

    def __hash__(self):
        return hash((self.field, self.code))

    def __repr__(self):
        return "F%d(%d)" % (self.field.q, self.code)


class CharacterOrderError(ValueError):
    """The cyclotomic order m does not contain the values of the characters."""


class Character:
    """chi_j: F^x -> Q(zeta_m)^x with chi_j(g) = zeta_(q-1)^j for the
    field's fixed generator g, extended by chi(0) = 0."""

    def __init__(self, field, exponent, m=None):
        q = field.q
        if m is None:
            m = q - 1
        if m % (q - 1):
            raise CharacterOrderError("cyclotomic order %d is not divisible by q - 1 = %d" % (m, q - 1))
        self.field = field
        self.exponent = exponent % (q - 1)
        self.m = m
        step = m // (q - 1)
        values = [CycloScalar.zero(m)] * q
        for a, t in field.log_table.items():
            values[a] = CycloScalar.zeta(m, step * self.exponent * t)
        self.values = tuple(values)

    @property
    def is_trivial(self):
        return self.exponent == 0

    def __call__(self, a):
        return self.values[a.code if isinstance(a, FqElem) else a]

    def inverse(self):
        return Character(self.field, -self.exponent, self.m)

    def __eq__(self, other):
        return isinstance(other, Character) and (self.field, self.exponent, self.m) == (other.field, other.exponent, other.m)

    def __hash__(self):
        return hash((self.field, self.exponent, self.m))

    def __repr__(self):
        return "Character(q=%d, j=%d%s)" % (self.field.q, self.exponent, ", trivial" if self.is_trivial else "")

    def to_json(self):
        return {"q": self.field.q, "exponent": self.exponent, "generator": self.field.generator,
                "trivial": self.is_trivial}


def characters(field, m=None):
    """All q - 1 characters of F^x, ordered by exponent; index 0 is trivial."""
    return [Character(field, j, m) for j in range(field.q - 1)]


class MonAlgElem:
    """Element of k[F]: coefficient vector indexed by element code."""

    __slots__ = ("field", "m", "coeffs")

    def __init__(self, field, coeffs, m):
        if len(coeffs) != field.q:
            raise ValueError("need one coefficient per field element")
        self.field = field
        self.m = m
        self.coeffs = tuple(c if isinstance(c, CycloScalar) else CycloScalar.from_rational(m, c) for c in coeffs)

    @classmethod
    def basis(cls, field, a, m):
        """The basis element [a]."""
        code = a.code if isinstance(a, FqElem) else a
        return cls(field, [int(i == code) for i in range(field.q)], m)

    @classmethod
    def one(cls, field, m):
        return cls.basis(field, 1, m)

    def _check(self, other):
        if other.field != self.field or other.m != self.m:
            raise ValueError("monoid algebra elements over different fields")

    def __add__(self, other):
        self._check(other)
        return MonAlgElem(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.m)

    def __sub__(self, other):
        self._check(other)
        return MonAlgElem(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)], self.m)

    def scale(self, c):
        return MonAlgElem(self.field, [a * c for a in self.coeffs], self.m)

    def __mul__(self, other):
        if not isinstance(other, MonAlgElem):
            return self.scale(other)
        return monalg_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, MonAlgElem) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def support(self):
        return [a for a, c in enumerate(self.coeffs) if c]

    def __repr__(self):
        terms = ["%s*[%d]" % (c, a) for a, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        """Array of {element, scalar} pairs in element-code order, zeros omitted."""
        return [{"element": a, "scalar": str(c)} for a, c in enumerate(self.coeffs) if c]


def monalg_mul(x, y):
    x._check(y)
    field = x.field
    zero = CycloScalar.zero(x.m)
    out = [zero] * field.q
    for a, ca in enumerate(x.coeffs):
        if ca:
            row = field.mul_table[a]
            for b, cb in enumerate(y.coeffs):
                if cb:
                    out[row[b]] = out[row[b]] + ca * cb
    return MonAlgElem(field, out, x.m)


def idempotent(field, which, m=None):
    """e_0 = [0] for ``which == 'zero'``; otherwise, for a Character chi,
    e_chi = -delta_chi [0] + 1/(q-1) sum_{a != 0} chi^{-1}(a) [a]."""
    if not isinstance(which, Character):
        if which != "zero":
            raise ValueError("expected 'zero' or a Character, got %r" % (which,))
        if m is None:
            m = max(field.q - 1, 1)
        return MonAlgElem.basis(field, 0, m)
    chi = which
    if m is None:
        m = chi.m
    q = field.q
    inv = chi.inverse()
    coeffs = [CycloScalar.zero(m)] * q
    coeffs[0] = CycloScalar.from_rational(m, -1 if chi.is_trivial else 0)
    w = Fraction(1, q - 1)
    for a in range(1, q):
        coeffs[a] = inv(a) * w
    return MonAlgElem(field, coeffs, m)


def character_inner(chi, psi):
    """sum over a in F^x of chi(a) psi^{-1}(a)."""
    inv = psi.inverse()
    total = CycloScalar.zero(chi.m)
    for a in range(1, chi.field.q):
        total = total + chi(a) * inv(a)
    return total
