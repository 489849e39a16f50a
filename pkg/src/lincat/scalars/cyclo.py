"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are stored in the power basis 1, z, ..., z^(phi(m)-1) with
rational coefficients, always reduced modulo the m-th cyclotomic
polynomial, so equality is coefficient-wise.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
import re


def _lcm(a, b):
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Integer coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive, got %r" % (m,))
    # x^m - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_exact_div(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // lead
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num), "inexact polynomial division"
    return out


def euler_phi(m):
    return len(cyclotomic_poly(m)) - 1


class CycloScalar:
    """An element of Q(zeta_m).

    >>> z = CycloScalar.zeta(4)
    >>> z * z == -1
    True
    """

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m, coeffs=(), _reduced=False):
        self.m = m
        if _reduced:
            self.coeffs = coeffs
        else:
            self.coeffs = _reduce(m, coeffs)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rational(cls, m, value):
        n = euler_phi(m)
        return cls(m, (Fraction(value),) + (Fraction(0),) * (n - 1), _reduced=True)

    @classmethod
    def zero(cls, m):
        return cls.from_rational(m, 0)

    @classmethod
    def one(cls, m):
        return cls.from_rational(m, 1)

    @classmethod
    def zeta(cls, m, power=1):
        """zeta_m ** power."""
        coeffs = [0] * m
        coeffs[power % m] = 1
        return cls(m, coeffs)

    # -- predicates ---------------------------------------------------
    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return self.coeffs[0]

    def denominator(self):
        """Least common denominator of the coefficients."""
        d = 1
        for c in self.coeffs:
            d = _lcm(d, c.denominator)
        return d

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycloScalar):
            if other.m != self.m:
                raise ValueError("mismatched cyclotomic orders %d and %d" % (self.m, other.m))
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.from_rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloScalar(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.m, tuple(-a for a in self.coeffs), _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloScalar(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), _reduced=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.m, tuple(a * other for a in self.coeffs), _reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return CycloScalar(self.m, (a[0] * b[0],), _reduced=True)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloScalar(self.m, prod)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.m)
        if len(self.coeffs) == 1:
            return CycloScalar(self.m, (1 / self.coeffs[0],), _reduced=True)
        # solve (multiplication-by-self) c = 1 over Q
        n = len(self.coeffs)
        cols = []
        basis_elem = CycloScalar.one(self.m)
        z = CycloScalar.zeta(self.m)
        for _ in range(n):
            cols.append((self * basis_elem).coeffs)
            basis_elem = basis_elem * z
        rows = [[cols[j][i] for j in range(n)] + [Fraction(int(i == 0))] for i in range(n)]
        sol = _solve_square(rows)
        return CycloScalar(self.m, tuple(sol), _reduced=True)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.m)
            return CycloScalar(self.m, tuple(a / other for a in self.coeffs), _reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloScalar.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_power(self, k):
        """Image under the automorphism zeta -> zeta^k (gcd(k, m) = 1)."""
        if gcd(k, self.m) != 1:
            raise ValueError("%d is not a unit mod %d" % (k, self.m))
        coeffs = [Fraction(0)] * self.m
        for i, c in enumerate(self.coeffs):
            coeffs[(i * k) % self.m] += c
        return CycloScalar(self.m, coeffs)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycloScalar):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.m, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- wire form ----------------------------------------------------
    def __str__(self):
        den = self.denominator()
        nums = [int(c * den) for c in self.coeffs]
        body = _format_poly(nums)
        if den == 1:
            return body
        return "(1/%d)*(%s)" % (den, body)

    def __repr__(self):
        return "CycloScalar(%d, %s)" % (self.m, self)

    @classmethod
    def parse(cls, m, text):
        """Inverse of ``str``: reads ``(1/D)*(poly)`` or a bare polynomial in ``z``."""
        text = text.replace(" ", "")
        den = 1
        match = re.fullmatch(r"\(1/(\d+)\)\*\((.*)\)", text)
        if match:
            den = int(match.group(1))
            text = match.group(2)
        coeffs = {}
        for sign, coef, var, power in _TERM.findall(text):
            if not (coef or var):
                continue
            c = int(coef) if coef else 1
            if sign == "-":
                c = -c
            k = 0
            if var:
                k = int(power) if power else 1
            coeffs[k] = coeffs.get(k, 0) + c
        if not coeffs and text not in ("0", ""):
            raise ValueError("cannot parse cyclotomic scalar %r" % (text,))
        size = max(list(coeffs) + [0]) + 1
        poly = [Fraction(coeffs.get(i, 0), den) for i in range(size)]
        return cls(m, poly)


_TERM = re.compile(r"([+-]?)(\d*)\*?(z)?(?:\^(\d+))?")


def _format_poly(nums):
    parts = []
    for k, c in enumerate(nums):
        if c == 0:
            continue
        if k == 0:
            mono = str(abs(c))
        else:
            var = "z" if k == 1 else "z^%d" % k
            mono = var if abs(c) == 1 else "%d*%s" % (abs(c), var)
        if not parts:
            parts.append(("-" if c < 0 else "") + mono)
        else:
            parts.append((" - " if c < 0 else " + ") + mono)
    return "".join(parts) if parts else "0"


def _reduce(m, coeffs):
    phi = cyclotomic_poly(m)
    n = len(phi) - 1
    # fold exponents mod m first (z^m = 1), then reduce by the monic Phi_m
    work = [Fraction(0)] * max(m, n)
    for i, c in enumerate(coeffs):
        if c:
            work[i % m] += c
    for deg in range(len(work) - 1, n - 1, -1):
        c = work[deg]
        if c:
            shift = deg - n
            for i in range(n + 1):
                work[shift + i] -= c * phi[i]
    out = work[:n]
    if len(out) < n:
        out += [Fraction(0)] * (n - len(out))
    return tuple(out)


def _solve_square(rows):
    """Gauss-Jordan on an augmented n x (n+1) Fraction system."""
    n = len(rows)
    rows = [list(r) for r in rows]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


def as_scalar(m, value):
    """Coerce an int, Fraction or CycloScalar into Q(zeta_m)."""
    if isinstance(value, CycloScalar):
        if value.m != m:
            raise ValueError("mismatched cyclotomic orders %d and %d" % (value.m, m))
        return value
    return CycloScalar.from_rational(m, value)


def cyclo_arith(a, b, op):
    """Dispatch ``op`` in {'add', 'sub', 'mul', 'div'} on two scalars of the same order."""
    if a.m != b.m:
        raise ValueError("mismatched cyclotomic orders %d and %d" % (a.m, b.m))
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % (op,))
