"""The linearization k[E], its additive and Karoubi envelopes, the
e_chi projections, and categorical traces in k[E]^#_chi.

Morphisms of k[E] are sparse formal combinations of base morphisms. A
morphism of the additive envelope is a matrix of those, with entry [j][i]
going from summand i of the domain to summand j of the codomain.
"""

from .category import ProductMorphism, ProductObject, SourceObject, VecSpace, monoidal_data
from .ffield import Character, MonAlgElem, idempotent
from .scalars import CycloScalar, ExactMatrix, mat_column_basis, mat_rank, as_scalar


class LinMorphism:
    """Formal k-linear combination of morphisms dom -> cod of E."""

    __slots__ = ("dom", "cod", "m", "terms")

    def __init__(self, dom, cod, terms, m):
        self.dom = dom
        self.cod = cod
        self.m = m
        self.terms = {f: c for f, c in terms.items() if c}

    @classmethod
    def basis(cls, phi, m):
        return cls(phi.dom, phi.cod, {phi: CycloScalar.one(m)}, m)

    @classmethod
    def zero(cls, dom, cod, m):
        return cls(dom, cod, {}, m)

    @classmethod
    def identity(cls, X, m):
        return cls.basis(X.identity(), m)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if other.dom != self.dom or other.cod != self.cod:
            raise ValueError("morphisms %s->%s and %s->%s are not parallel" % (self.dom, self.cod, other.dom, other.cod))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for f, c in other.terms.items():
            terms[f] = terms[f] + c if f in terms else c
        return LinMorphism(self.dom, self.cod, terms, self.m)

    def __neg__(self):
        return LinMorphism(self.dom, self.cod, {f: -c for f, c in self.terms.items()}, self.m)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(self.m, c)
        return LinMorphism(self.dom, self.cod, {f: c * a for f, a in self.terms.items()}, self.m)

    def __matmul__(self, other):
        """self o other, extended bilinearly from [g] o [f] = [g o f]."""
        if other.cod != self.dom:
            raise ValueError("domain mismatch: %s after %s" % (self.dom, other.cod))
        terms = {}
        for g, a in self.terms.items():
            for f, b in other.terms.items():
                h = g @ f
                c = a * b
                terms[h] = terms[h] + c if h in terms else c
        return LinMorphism(other.dom, self.cod, terms, self.m)

    def tensor(self, other):
        terms = {}
        for g, a in self.terms.items():
            for f, b in other.terms.items():
                h = g.tensor(f)
                c = a * b
                terms[h] = terms[h] + c if h in terms else c
        return LinMorphism(self.dom.tensor(other.dom), self.cod.tensor(other.cod), terms, self.m)

    def __eq__(self, other):
        return (isinstance(other, LinMorphism) and self.dom == other.dom and self.cod == other.cod
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.dom, self.cod, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("(%s)[%s]" % (c, f) for f, c in self.terms.items())

    def to_json(self):
        return [{"base_morphism": str(f), "scalar": str(c)} for f, c in self.terms.items()]


def lin_compose(g, f):
    return g @ f


class AddObject:
    """X_1 (+) ... (+) X_n in k[E]^(+)."""

    __slots__ = ("summands",)

    def __init__(self, summands):
        self.summands = tuple(summands)

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __eq__(self, other):
        return isinstance(other, AddObject) and self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def __str__(self):
        return " + ".join("[%s]" % x for x in self.summands) if self.summands else "0"

    __repr__ = __str__

    def tensor(self, other):
        return AddObject([x.tensor(y) for x in self.summands for y in other.summands])


class AddMorphism:
    """Matrix of LinMorphisms; entries[j][i]: dom summand i -> cod summand j."""

    __slots__ = ("dom", "cod", "m", "entries")

    def __init__(self, dom, cod, entries, m):
        self.dom = dom
        self.cod = cod
        self.m = m
        self.entries = tuple(tuple(row) for row in entries)
        if len(self.entries) != len(cod) or any(len(row) != len(dom) for row in self.entries):
            raise ValueError("entry grid does not match %s -> %s" % (dom, cod))

    @classmethod
    def identity(cls, X, m):
        return cls(X, X, [[LinMorphism.identity(x, m) if i == j else LinMorphism.zero(x, y, m)
                           for i, x in enumerate(X)] for j, y in enumerate(X)], m)

    @classmethod
    def zero(cls, X, Y, m):
        return cls(X, Y, [[LinMorphism.zero(x, y, m) for x in X] for y in Y], m)

    @classmethod
    def single(cls, f):
        """1 x 1 matrix around a LinMorphism."""
        return cls(AddObject([f.dom]), AddObject([f.cod]), [[f]], f.m)

    def entry(self, j=0, i=0):
        return self.entries[j][i]

    def __matmul__(self, other):
        if other.cod != self.dom:
            raise ValueError("domain mismatch: %s after %s" % (self.dom, other.cod))
        out = []
        for j, y in enumerate(self.cod):
            row = []
            for i, x in enumerate(other.dom):
                acc = LinMorphism.zero(x, y, self.m)
                for t in range(len(self.dom)):
                    a, b = self.entries[j][t], other.entries[t][i]
                    if a.terms and b.terms:
                        acc = acc + (a @ b)
                row.append(acc)
            out.append(row)
        return AddMorphism(other.dom, self.cod, out, self.m)

    def __add__(self, other):
        return AddMorphism(self.dom, self.cod, [[a + b for a, b in zip(r, s)]
                                                for r, s in zip(self.entries, other.entries)], self.m)

    def __sub__(self, other):
        return AddMorphism(self.dom, self.cod, [[a - b for a, b in zip(r, s)]
                                                for r, s in zip(self.entries, other.entries)], self.m)

    def scale(self, c):
        return AddMorphism(self.dom, self.cod, [[a.scale(c) for a in r] for r in self.entries], self.m)

    def tensor(self, other):
        """Entry ((j, l), (i, k)) is self[j][i] (x) other[l][k], summands ordered lexicographically."""
        out = []
        for row_a in self.entries:
            for row_b in other.entries:
                out.append([a.tensor(b) for a in row_a for b in row_b])
        return AddMorphism(self.dom.tensor(other.dom), self.cod.tensor(other.cod), out, self.m)

    def is_zero(self):
        return all(a.is_zero() for row in self.entries for a in row)

    def __eq__(self, other):
        return (isinstance(other, AddMorphism) and self.dom == other.dom and self.cod == other.cod
                and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "AddMorphism(%s -> %s)" % (self.dom, self.cod)

    def to_json(self):
        return [[a.to_json() for a in row] for row in self.entries]


class NotIdempotent(ValueError):
    pass


class KarObject:
    """(X, e) in k[E]^#: an object of the additive envelope with an idempotent."""

    __slots__ = ("carrier", "idem")

    def __init__(self, carrier, idem, check=True):
        if idem.dom != carrier or idem.cod != carrier:
            raise ValueError("idempotent must be an endomorphism of the carrier")
        if check and idem @ idem != idem:
            raise NotIdempotent("e o e != e on %s" % carrier)
        self.carrier = carrier
        self.idem = idem

    @property
    def m(self):
        return self.idem.m

    def identity(self):
        return self.idem

    def tensor(self, other):
        return KarObject(self.carrier.tensor(other.carrier), self.idem.tensor(other.idem), check=False)

    def __eq__(self, other):
        return isinstance(other, KarObject) and self.carrier == other.carrier and self.idem == other.idem

    def __hash__(self):
        return hash((self.carrier, self.idem))

    def __repr__(self):
        return "KarObject(%s)" % self.carrier


def as_add(X):
    if isinstance(X, AddObject):
        return X
    if isinstance(X, KarObject):
        return X.carrier
    return AddObject([X])


def as_kar(X, m):
    if isinstance(X, KarObject):
        return X
    X = as_add(X)
    return KarObject(X, AddMorphism.identity(X, m), check=False)


def lin_tensor(x, y):
    """Tensor product of two objects or two morphisms of k[E]^#."""
    return x.tensor(y)


def is_kar_morphism(phi, A, B):
    """Karoubi hom condition: f o phi = phi = phi o e for A = (X, e), B = (Y, f)."""
    return B.idem @ phi == phi and phi @ A.idem == phi


# -- the k[F]-action and e_chi ---------------------------------------------

def _scalar_endo(x, a):
    if isinstance(x, VecSpace):
        return x.scalar(a)
    if isinstance(x, ProductObject):
        fields = {part.field for part in x.parts}
        if len(fields) != 1:
            raise ValueError("scalar action needs a single field; %s mixes fields" % x)
        return ProductMorphism(tuple(part.scalar(a) for part in x.parts))
    raise TypeError("no F-linear structure on %r" % (x,))


def _field_of(x):
    if isinstance(x, VecSpace):
        return x.field
    return x.parts[0].field


def scalar_action(X, elem):
    """Diagonal endomorphism of X by which an element of k[F] acts."""
    X = as_add(X)
    m = elem.m
    rows = []
    for j, y in enumerate(X):
        row = []
        for i, x in enumerate(X):
            if i != j:
                row.append(LinMorphism.zero(x, y, m))
                continue
            terms = {}
            for a, c in enumerate(elem.coeffs):
                if c:
                    f = _scalar_endo(x, a)
                    terms[f] = terms[f] + c if f in terms else c
            row.append(LinMorphism(x, x, terms, m))
        rows.append(row)
    return AddMorphism(X, X, rows, m)


def echi_action(X, chi):
    """e_chi (or e_0 for ``chi == 'zero'``) acting on X."""
    X = as_add(X)
    if isinstance(chi, Character):
        field, m = chi.field, chi.m
    else:
        field = _field_of(X.summands[0])
        m = max(field.q - 1, 1)
    return scalar_action(X, idempotent(field, chi, m))


def apply_echi(X, chi):
    """e_chi X as an object of k[E]^#_chi."""
    if isinstance(X, KarObject):
        E = echi_action(X.carrier, chi)
        return KarObject(X.carrier, E @ X.idem)
    X = as_add(X)
    E = echi_action(X, chi)
    return KarObject(X, E)


def project_morphism(phi, chi):
    """e_chi phi, with k[F] acting through the codomain."""
    return echi_action(phi.cod, chi) @ phi


# -- hom spaces -------------------------------------------------------------

def ambient_basis(X, Y, cap=None):
    """Basis (j, i, f) of Hom_{k[E]^(+)}(X, Y), f running over Hom_E(X_i, Y_j)."""
    X, Y = as_add(X), as_add(Y)
    return [(j, i, f) for j, y in enumerate(Y) for i, x in enumerate(X) for f in x.homs(y, cap)]


def basis_morphism(X, Y, j, i, f, m):
    X, Y = as_add(X), as_add(Y)
    rows = [[LinMorphism.basis(f, m) if (jj, ii) == (j, i) else LinMorphism.zero(x, y, m)
             for ii, x in enumerate(X)] for jj, y in enumerate(Y)]
    return AddMorphism(X, Y, rows, m)


def coordinates(phi, index):
    """Coordinate vector of an AddMorphism against an ``ambient_basis`` index map."""
    zero = CycloScalar.zero(phi.m)
    vec = [zero] * len(index)
    for j, row in enumerate(phi.entries):
        for i, a in enumerate(row):
            for f, c in a.terms.items():
                vec[index[(j, i, f)]] = c
    return vec


def _image_matrix(A, B, left, right, cap=None):
    """Columns: coordinates of left o b o right for b in the ambient basis."""
    X, Y = A.carrier, B.carrier
    m = A.m
    basis = ambient_basis(X, Y, cap)
    index = {key: n for n, key in enumerate(basis)}
    cols = []
    for (j, i, f) in basis:
        b = basis_morphism(X, Y, j, i, f, m)
        img = b
        if left is not None:
            img = left @ img
        if right is not None:
            img = img @ right
        cols.append(coordinates(img, index))
    return ExactMatrix.from_columns(cols, len(basis), m), basis


def hom_space(A, B, cap=None):
    """Exact basis (as columns in ambient coordinates) of
    {phi : f o phi = phi = phi o e} for A = (X, e), B = (Y, f)."""
    m = A.m if isinstance(A, KarObject) else B.m
    A, B = as_kar(A, m), as_kar(B, m)
    M, _ = _image_matrix(A, B, B.idem, A.idem, cap)
    keep = mat_column_basis(M)
    cols = M.columns()
    return ExactMatrix.from_columns([cols[c] for c in keep], M.rows, m)


def hom_dim(A, B, cap=None):
    m = A.m if isinstance(A, KarObject) else B.m
    A, B = as_kar(A, m), as_kar(B, m)
    M, _ = _image_matrix(A, B, B.idem, A.idem, cap)
    return mat_rank(M)


def projected_hom_space(X, Y, chi, cap=None):
    """e_chi Hom(X, Y): image of the left e_chi-action on the ambient hom."""
    m = chi.m
    A, B = as_kar(X, m), as_kar(Y, m)
    E = echi_action(B.carrier, chi)
    M, _ = _image_matrix(A, B, E @ B.idem, A.idem, cap)
    keep = mat_column_basis(M)
    cols = M.columns()
    return ExactMatrix.from_columns([cols[c] for c in keep], M.rows, m)


def dim_echi_fast(size, q):
    """dim e_chi k[S] = (|S| - 1)/(q - 1) for an F_q-vector space S, independent of chi."""
    if (size - 1) % (q - 1):
        raise ValueError("|S| - 1 = %d is not divisible by q - 1 = %d; S is not an F_%d-space"
                         % (size - 1, q - 1, q))
    return (size - 1) // (q - 1)


# -- rigidity, traces, dimensions -------------------------------------------

def _lift(f, m):
    return AddMorphism.single(LinMorphism.basis(f, m))


def _unit_idem(X, chi, m):
    if chi is None:
        return AddMorphism.identity(as_add(X), m)
    return echi_action(X, chi)


def lin_snake_identities(X, chi=None, m=1):
    """Zig-zag identities for [X] in k[E] (chi None) or for e_chi[X] in
    k[E]^#_chi, computed as explicit composites."""
    if chi is not None:
        m = chi.m
    Xd, alpha, beta = monoidal_data(X)
    one = X.unit()
    EX, EXd, E1 = _unit_idem(X, chi, m), _unit_idem(Xd, chi, m), _unit_idem(one, chi, m)
    a = EX.tensor(EXd) @ _lift(alpha, m) @ E1
    b = E1 @ _lift(beta, m) @ EXd.tensor(EX)
    first = EX.tensor(b) @ a.tensor(EX)
    second = b.tensor(EXd) @ EXd.tensor(a)
    return first == EX, second == EXd


def scalar_multiple(f, e):
    """c with f == c * e, or ValueError when f is not a multiple of e."""
    if e.is_zero():
        raise ValueError("reference morphism is zero")
    for j, row in enumerate(e.entries):
        for i, a in enumerate(row):
            for g, c in a.terms.items():
                ratio = f.entries[j][i].terms.get(g, CycloScalar.zero(f.m)) / c
                if e.scale(ratio) != f:
                    raise ValueError("morphism is not a scalar multiple of the identity")
                return ratio
    raise AssertionError("unreachable")


def trace_composite(phi, chi=None, m=1):
    """The composite 1 -> X^v (x) X -> X^v (x) X -> 1 built from [phi]
    (compressed by e_chi when given), as an endomorphism of the unit."""
    if chi is not None:
        m = chi.m
    X = phi.dom
    Xd, alpha, beta = monoidal_data(X)
    one = X.unit()
    coev = X.braiding(Xd) @ alpha
    middle = Xd.identity().tensor(phi)
    EX, EXd, E1 = _unit_idem(X, chi, m), _unit_idem(Xd, chi, m), _unit_idem(one, chi, m)
    pair = EXd.tensor(EX)
    coev_c = pair @ _lift(coev, m) @ E1
    mid_c = pair @ _lift(middle, m) @ pair
    ev_c = E1 @ _lift(beta, m) @ pair
    return ev_c @ mid_c @ coev_c, E1


def categorical_trace(phi, chi):
    """Categorical trace of e_chi[phi] in k[E]^#_chi, read off the composite."""
    comp, unit_id = trace_composite(phi, chi)
    return scalar_multiple(comp, unit_id)


def trace_formula(phi, chi):
    """chi(tr_F(phi)) with chi(0) = 0."""
    return chi(phi.trace())


def categorical_dimension(X, chi):
    return categorical_trace(X.identity(), chi)


def object_report(X, chi, trace_samples=()):
    """JSON report {object, chi, end_dim, trace_samples} for e_chi[X]."""
    Y = apply_echi(X, chi)
    return {
        "object": str(X),
        "chi": chi.to_json(),
        "end_dim": hom_dim(Y, Y),
        "trace_samples": [{"morphism": str(f), "trace": str(categorical_trace(f, chi))}
                          for f in trace_samples],
    }


def monalg_of_unit_endo(f, field, m):
    """Read an endomorphism of [1] (1x1 matrices over F) as an element of k[F]."""
    lin = f.entry() if isinstance(f, AddMorphism) else f
    coeffs = [CycloScalar.zero(m)] * field.q
    for g, c in lin.terms.items():
        coeffs[g.entries[0]] = c
    return MonAlgElem(field, coeffs, m)


__all__ = [
    "LinMorphism", "AddObject", "AddMorphism", "KarObject", "NotIdempotent",
    "lin_compose", "lin_tensor", "as_add", "as_kar", "is_kar_morphism",
    "scalar_action", "echi_action", "apply_echi", "project_morphism",
    "ambient_basis", "coordinates", "hom_space", "hom_dim", "projected_hom_space",
    "dim_echi_fast", "lin_snake_identities", "scalar_multiple", "trace_composite",
    "categorical_trace", "trace_formula", "categorical_dimension", "object_report",
    "monalg_of_unit_endo", "SourceObject",
]
