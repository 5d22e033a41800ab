"""
Representaciones decoradas, el bifuntor E_Γ, Σ_i, la dualidad D y las reflexiones σ_i, τ_±.
"""

from .decorated_rep import (
    DecoratedRep,
    decorate,
    negative_simple,
    decorated_sum,
    sdim,
    decorated_of_root,
    dualize,
    e_dim,
    compatibility_degree,
    extended_reflect,
    isoclass,
    is_rigid,
    rigid_by_supports,
    sdim_reflection_applies,
    coincides_with_classical,
    all_decorated_indecomposables,
    summand_roots,
)
from .piecewise import sigma, tau

__all__ = [
    'DecoratedRep',
    'decorate',
    'negative_simple',
    'decorated_sum',
    'sdim',
    'decorated_of_root',
    'dualize',
    'e_dim',
    'compatibility_degree',
    'extended_reflect',
    'isoclass',
    'is_rigid',
    'rigid_by_supports',
    'sdim_reflection_applies',
    'coincides_with_classical',
    'all_decorated_indecomposables',
    'summand_roots',
    'sigma',
    'tau',
]
