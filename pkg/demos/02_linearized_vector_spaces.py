"""The linearization k[Vec_F]: hom dimensions after cutting by e_chi,
rigidity, and categorical traces."""

from lincat.category import VecSpace
from lincat.ffield import characters, finite_field
from lincat.linearize import (apply_echi, categorical_dimension, categorical_trace, dim_echi_fast, hom_dim,
                              lin_snake_identities, trace_formula)
from lincat.profiles import q_int

for q in (2, 3):
    F = finite_field(q)
    for d in (1, 2):
        for chi in characters(F):
            Y = apply_echi(VecSpace(F, d), chi)
            print("q=%d d=%d chi_%d: dim End(e_chi[F^d]) = %d, [d^2]_q = %d"
                  % (q, d, chi.exponent, hom_dim(Y, Y), q_int(d * d, q)))

# counting path for larger hom-sets, no enumeration needed
print("dim e_chi k[End(F_2^4)] =", dim_echi_fast(2 ** 16, 2))

# rigidity: the zig-zag identities hold for e_chi[F_3^2]
F3 = finite_field(3)
for chi in characters(F3):
    print("snakes for e_chi%d[F_3^2]:" % chi.exponent, lin_snake_identities(VecSpace(F3, 2), chi))

# categorical trace equals chi of the ordinary trace, including chi(0) = 0
X = VecSpace(F3, 2)
sign = characters(F3)[1]
bad = sum(categorical_trace(phi, sign) != trace_formula(phi, sign) for phi in X.homs(X))
print("trace mismatches over all 81 endomorphisms of F_3^2:", bad)
print("dim e_sign[F_3^2] =", categorical_dimension(X, sign))
