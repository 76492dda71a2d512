"""Support tau-tilting posets of bound quiver algebras via two-term silting mutation."""
from .algebra import (
    BoundQuiverAlgebra,
    CartanData,
    RelationSpec,
    build,
    central_element,
    check_tree_characterization,
    gls_build,
    idempotent_quotient,
    quotient_by_elements,
    reduce_to_core,
)
from .complexes import (
    TwoTermComplex,
    decompose,
    direct_sum,
    g_matrix,
    hom_k1_dimension,
    is_presilting,
    is_silting,
    minimize,
    module_data,
    order_geq,
    projective_complex,
)
from .mutation import SiltingNode, SiltingPoset, enumerate_sttilt, left_mutate, order_pairs
from .poset import FinitePoset, is_isomorphic, is_lattice, join, meet
from .quiver import Arrow, Quiver, core, is_tree_quiver

__version__ = "0.1.0"
