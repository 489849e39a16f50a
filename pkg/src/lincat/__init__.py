"""Linearizations of finite-hom categories over finite fields: character
idempotent splitting, semisimplicity certificates, Wedderburn blocks, and
growth profiles of tensor powers."""

from .scalars import CycloScalar, ExactMatrix
from .ffield import Character, characters, finite_field, idempotent
from .category import VecSpace, ProductObject, hom_enumerate
from .linearize import AddObject, KarObject, LinMorphism, apply_echi, categorical_trace, hom_dim
from .algebra import SCAlgebra, block_decompose, end_algebra, gram_radical, kuhn_algebra, object_length, segre
from .profiles import growth_table, ordered_bell, q_int

__version__ = "0.1.0"
