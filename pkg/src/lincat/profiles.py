"""Growth-profile arithmetic: q-integers, psi/phi profiles of linearized
objects, ordered Bell numbers, and the growth tables for Vec and for the
Delannoy-type example whose orbit counts are ordered Bell numbers."""

import csv
import io
import json
from dataclasses import dataclass
from itertools import product
from math import comb, isqrt

import mpmath

# [n]_q is expanded to an integer only up to this many bits; beyond it the
# value is carried symbolically as "[n]_q".
EXPANSION_BITS = 10_000
LOG_PRECISION_BITS = 128
GUARD_BAND = mpmath.mpf(2) ** -64


def q_int(n, q):
    """[n]_q = (q^n - 1)/(q - 1) = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if q < 2:
        raise ValueError("q must be at least 2")
    return (q ** n - 1) // (q - 1)


def psi_vec(d, n):
    """dim End((F^d)^{(x) n}) = d^(2n)."""
    return d ** (2 * n)


def psi_lin(psi_source, q):
    return q_int(psi_source, q)


def ordered_bell(n):
    """Ordered Bell (Fubini) numbers: a(0) = 1, a(n) = sum_k C(n, k) a(n - k)."""
    a = [1]
    for t in range(1, n + 1):
        a.append(sum(comb(t, k) * a[t - k] for k in range(1, t + 1)))
    return a[n]


def ordered_bell_bruteforce(n):
    """Count ordered set partitions of {0..n-1} by listing block labels.

    A labeling {0..n-1} -> {0..k-1} that hits every label is exactly an
    ordered partition into k blocks.
    """
    if n == 0:
        return 1
    total = 0
    for k in range(1, n + 1):
        total += sum(1 for lab in product(range(k), repeat=n) if len(set(lab)) == k)
    return total


class QInteger:
    """[n]_q held exactly but symbolically, for n too large to expand."""

    __slots__ = ("n", "q")

    def __init__(self, n, q):
        self.n = n
        self.q = q

    def __str__(self):
        return "[%d]_%d" % (self.n, self.q)

    def __eq__(self, other):
        if isinstance(other, QInteger):
            return (self.n, self.q) == (other.n, other.q)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.q))

    def __repr__(self):
        return "QInteger(%d, %d)" % (self.n, self.q)


class CeilSqrt:
    """ceil(sqrt(x)) for a symbolic QInteger x."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __str__(self):
        return "ceil(sqrt(%s))" % self.value

    __repr__ = __str__


def q_int_value(n, q):
    """[n]_q as an int when it fits the expansion budget, else a QInteger."""
    if n * q.bit_length() > EXPANSION_BITS:
        return QInteger(n, q)
    return q_int(n, q)


def ceil_sqrt(x):
    if isinstance(x, QInteger):
        return CeilSqrt(x)
    r = isqrt(x)
    return r if r * r == x else r + 1


@dataclass
class ProfileRow:
    n: int
    psi_source: int
    psi_lin: object
    phi_lower: object
    phi_upper: object
    phi_exact: int = None

    def to_json(self):
        def enc(v):
            return v if v is None or isinstance(v, int) else str(v)
        return {"n": self.n, "psi_source": self.psi_source, "psi_lin": enc(self.psi_lin),
                "phi_lower": enc(self.phi_lower), "phi_exact": enc(self.phi_exact),
                "phi_upper": enc(self.phi_upper)}


CSV_COLUMNS = ["n", "psi_source", "psi_lin", "phi_lower", "phi_exact", "phi_upper"]


def _row(n, psi_source, q, phi_exact=None):
    lin = q_int_value(psi_source, q)
    row = ProfileRow(n, psi_source, lin, ceil_sqrt(lin), lin, phi_exact)
    if phi_exact is not None and not row.phi_lower <= phi_exact <= row.phi_upper:
        raise ArithmeticError("phi=%d outside [%d, %d] at n=%d" % (phi_exact, row.phi_lower, row.phi_upper, n))
    return row


def vec_phi_exact(d, q, chi_exponent, n):
    """phi of e_chi[(F_q^d)^{(x) n}] from the block decomposition of its End algebra."""
    from .algebra import echi_kuhn_algebra, object_length
    from .ffield import Character, finite_field
    F = finite_field(q)
    chi = Character(F, chi_exponent)
    A = echi_kuhn_algebra(F, [d ** n], chi).flatten()
    return object_length(A).phi


def growth_table(example, n_max, d=None, q=2, chi=0, decompose=False, decompose_cap=64):
    """Rows n = 1..n_max for ``example`` in {"vec", "delannoy"}.

    vec: psi_source = d^(2n); delannoy: psi_source = a(2n). With
    ``decompose`` the vec rows whose End algebra has at most
    ``decompose_cap`` dimensions also carry phi_exact.
    """
    rows = []
    for n in range(1, n_max + 1):
        if example == "vec":
            if d is None:
                raise ValueError("vec profile needs d")
            src = psi_vec(d, n)
            phi = None
            if decompose and q_int(src, q) <= decompose_cap:
                phi = vec_phi_exact(d, q, chi, n)
            rows.append(_row(n, src, q, phi))
        elif example == "delannoy":
            rows.append(_row(n, ordered_bell(2 * n), q))
        else:
            raise ValueError("unknown example %r" % example)
    return rows


def rows_to_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        js = r.to_json()
        w.writerow(["" if js[c] is None else js[c] for c in CSV_COLUMNS])
    return buf.getvalue()


def rows_to_json(rows):
    return json.dumps([r.to_json() for r in rows], indent=2)


def _log_margin(n):
    """log a(2n) - n log n at LOG_PRECISION_BITS of precision."""
    with mpmath.workprec(LOG_PRECISION_BITS):
        a = mpmath.mpf(ordered_bell(2 * n))
        return mpmath.log(a) - n * mpmath.log(n)


@dataclass
class AsymptoticReport:
    n_min: int
    n_max: int
    threshold: int
    exact_ok: list
    margins: list
    indeterminate: list
    psi_monotone: bool

    def to_json(self):
        return {"n_min": self.n_min, "n_max": self.n_max, "threshold": self.threshold,
                "indeterminate": self.indeterminate, "psi_monotone": self.psi_monotone,
                "margins": [mpmath.nstr(x, 20) for x in self.margins]}


def asymptotic_check(n_min=1, n_max=64):
    """Smallest N in [n_min, n_max] with log a(2n) >= n log n for every n in [N, n_max].

    Each comparison is decided exactly as a(2n) >= n^n; the 128-bit
    logarithmic margin is reported alongside and flagged indeterminate when
    it falls inside the guard band. ``threshold`` is None when the
    inequality fails at n_max.
    """
    exact_ok, margins, indet = [], [], []
    for n in range(n_min, n_max + 1):
        ok = ordered_bell(2 * n) >= n ** n
        margin = _log_margin(n)
        if abs(margin) < GUARD_BAND:
            indet.append(n)
        elif (margin > 0) != ok:
            raise ArithmeticError("log margin disagrees with exact comparison at n=%d" % n)
        exact_ok.append(ok)
        margins.append(margin)
    threshold = None
    for idx in range(len(exact_ok) - 1, -1, -1):
        if not exact_ok[idx]:
            break
        threshold = n_min + idx
    # psi_Y(n) = [a(2n)]_q is increasing iff a(2n) is, since [.]_q is increasing
    seq = [ordered_bell(2 * n) for n in range(n_min, n_max + 1)]
    monotone = all(x < y for x, y in zip(seq, seq[1:]))
    return AsymptoticReport(n_min, n_max, threshold, exact_ok, margins, indet, monotone)


__all__ = [
    "q_int", "psi_vec", "psi_lin", "ordered_bell", "ordered_bell_bruteforce", "QInteger",
    "q_int_value", "ceil_sqrt", "ProfileRow", "growth_table", "rows_to_csv", "rows_to_json",
    "asymptotic_check", "AsymptoticReport", "vec_phi_exact",
]
