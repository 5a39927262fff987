"""Abelian complexity of fixed points of uniform morphisms.

Three independent routes to the abelian complexity of the generalized
Thue-Morse words (factor enumeration, boundary-set reduction, closed form),
plus finite-prefix evidence for periodicity and automaticity.
"""
from .abelian import abelian_complexity_of_prefix, abelian_complexity_oracle
from .automaticity import (
    SymbolSequence,
    check_conjecture1,
    check_theorem2,
    encode_boundary_sequence,
    kernel_explore,
    ultimate_periodicity,
)
from .boundary import (
    BoundarySet,
    Projection,
    ProjectionError,
    abelian_complexity_reduced,
    boundary_set,
    boundary_word,
    g_set,
    parse_projection,
    s_set,
)
from .closed_form import lemma3_sum, lemma4_sum, tm_abelian_closed
from .morphisms import (
    MorphismError,
    UniformMorphism,
    apply,
    cantor_morphism,
    factor_set,
    fixed_point_prefix,
    parse_morphism,
    resolve_sequence,
    tm_morphism,
)
from .words import Alphabet, WordError, abelian_classes, factors, parikh, slice_word

__version__ = "0.1.0"
