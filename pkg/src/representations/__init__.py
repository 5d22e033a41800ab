"""
Representaciones explícitas sobre Q: Hom/Ext, indecomponibles, reflexiones S_i y Krull–Schmidt.
"""

from .representation import (
    Representation,
    build_rep,
    rep_from_lists,
    zero_rep,
    simple_rep,
    direct_sum,
    rep_to_json,
)
from .homology import MorphismSystem, morphism_system, hom_dim, ext_dim
from .reflection import classical_reflect
from .indecomposables import (
    indecomposable_rep,
    all_indecomposables,
    hom_order,
    hom_matrix,
    decompose,
)

__all__ = [
    'Representation',
    'build_rep',
    'rep_from_lists',
    'zero_rep',
    'simple_rep',
    'direct_sum',
    'rep_to_json',
    'MorphismSystem',
    'morphism_system',
    'hom_dim',
    'ext_dim',
    'classical_reflect',
    'indecomposable_rep',
    'all_indecomposables',
    'hom_order',
    'hom_matrix',
    'decompose',
]
