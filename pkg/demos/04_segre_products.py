"""Segre products of generalized matrix algebras: semisimplicity is preserved,
and End of an object of a product category is the Segre product of the
End algebras of its parts."""

import random

from lincat.algebra import gram_radical, random_semisimple_gma, segre, unit_pattern
from lincat.suites import segre_product_instance

rng = random.Random(0)
for t in range(5):
    order = rng.randint(1, 3)
    A, B = random_semisimple_gma(rng, order), random_semisimple_gma(rng, order)
    S = segre(A, B).flatten()
    print("order %d: dims %d x %d -> Segre dim %d, trace radical %d"
          % (order, A.dim, B.dim, S.dim, gram_radical(S).radical_dim))

A = random_semisimple_gma(rng, 2)
print("A [x] unit pattern == A:", segre(A, unit_pattern(2, A.m)).flatten().same_structure(A.flatten()))

direct, via = segre_product_instance()
print("End([X] + [X]) for X = (F_2, F_3): dim", direct.dim, "equals the Segre product:",
      direct.same_structure(via))
