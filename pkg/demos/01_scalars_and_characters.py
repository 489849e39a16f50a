"""Exact scalars in Q(zeta_m), characters of F_q^x, and the idempotents of k[F_q]."""

from lincat.ffield import MonAlgElem, characters, finite_field, idempotent
from lincat.scalars import CycloScalar, ExactMatrix, mat_nullspace, reduce_mod, root_of_unity

# Q(zeta_3): zeta + zeta^2 = -1, printed in the (1/D)*(poly) wire form
z = CycloScalar.zeta(3)
print("zeta_3 + zeta_3^2 =", z + z * z)
print("1/(1 + zeta_3) =", (1 + z).inverse())

# reduction mod p sends zeta_3 to a cube root of unity in F_7
w = root_of_unity(3, 7)
print("zeta_3 mod 7 ->", reduce_mod(z, 7, w).residue, "(w =", w, ")")

# exact kernel over Q(zeta_3)
M = ExactMatrix([[1, z, z * z], [z * z, 1, z]], 3)
print("kernel dimension of a 2x3 cyclotomic matrix:", mat_nullspace(M).cols)

# characters of F_5^x take values in the 4th roots of unity; chi(0) = 0
F = finite_field(5)
for chi in characters(F):
    print("chi_%d:" % chi.exponent, [str(chi(a)) for a in range(5)])

# e_0 + sum of e_chi = [1], pairwise orthogonal
idems = [idempotent(F, "zero")] + [idempotent(F, chi) for chi in characters(F)]
total = MonAlgElem(F, [0] * 5, 4)
for e in idems:
    total = total + e
print("sum of the idempotents is [1]:", total == MonAlgElem.one(F, 4))
print("e_chi1 =", [(t["element"], t["scalar"]) for t in idems[2].to_json()])
