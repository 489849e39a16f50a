"""Semisimplicity and Wedderburn blocks of R_n(F_q) = k[M_n(F_q)].

The trace form certifies semisimplicity exactly; block data come from two
agreeing primes. Over Q(zeta_{q-1}) some blocks need not split, and the
report says so."""

from lincat.algebra import (block_decompose, echi_kuhn_algebra, gram_radical, kuhn_algebra, object_length,
                            upper_triangular_algebra)
from lincat.ffield import characters, finite_field

F2 = finite_field(2)
A = kuhn_algebra(F2, [2]).flatten()
print("k[M_2(F_2)]: dim", A.dim, "trace radical", gram_radical(A).radical_dim)
report = block_decompose(A)
print("  blocks", [b.dim for b in report.blocks], "matrix sizes", [b.m for b in report.blocks],
      "primes", report.primes)

corner = echi_kuhn_algebra(F2, [2], characters(F2)[0]).flatten()
length = object_length(corner)
print("e_chi corner: dim", corner.dim, "phi", length.phi, "psi", length.psi,
      "phi <= psi <= phi^2:", length.phi <= length.psi <= length.phi ** 2)

# GL_2(F_3) has characters with values in Q(sqrt(-2)); over Q they fuse into one block
F3 = finite_field(3)
A3 = kuhn_algebra(F3, [2]).flatten()
r = block_decompose(A3)
print("k[M_2(F_3)] over Q:", [(b.dim, b.center_dim, b.split) for b in r.blocks if not b.split],
      "is not split; probed primes", r.probed)
A3_8 = kuhn_algebra(F3, [2], m=8).flatten()
print("over Q(zeta_8) every block splits:", all(b.split for b in block_decompose(A3_8).blocks))

# negative control: upper triangular 2x2 matrices have a 1-dimensional radical
print("upper triangular radical:", gram_radical(upper_triangular_algebra()).radical_dim)
