from .structure import (GMA, NotAssociative, SCAlgebra, compress, echi_kuhn_algebra, end_algebra, end_gma,
                        find_unit, kuhn_algebra, monoid_algebra, random_semisimple_gma, segre, unit_pattern,
                        upper_triangular_algebra)
from .semisimple import (Block, BlockReport, CertificateError, DecompositionError, GramRadical, LengthReport,
                         NoUnit, NonSplitError, NotSemisimpleError, block_decompose, exact_center, gram_matrix,
                         gram_radical, is_semisimple, modular_blocks, object_length, refines, regular_traces)
