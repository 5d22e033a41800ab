"""
Substrato común: bosques, clasificación ADE, sistemas de raíces, forma de Euler y orientaciones.
"""

from .graphs import TreeGraph, path_graph
from .roots import (
    RootVector,
    positive_roots,
    almost_positive_roots,
    roots_supported_in,
    euler_form,
    weyl_reflection,
)
from .dynkin import DynkinGraph, dynkin_graph, classify_tree, parse_dynkin_name
from .orientation import (
    Quiver,
    reflect_orientation,
    alternating_orientation,
    enumerate_orientations,
    reachable_orientations,
    reflection_path,
)

__all__ = [
    'TreeGraph',
    'path_graph',
    'RootVector',
    'positive_roots',
    'almost_positive_roots',
    'roots_supported_in',
    'euler_form',
    'weyl_reflection',
    'DynkinGraph',
    'dynkin_graph',
    'classify_tree',
    'parse_dynkin_name',
    'Quiver',
    'reflect_orientation',
    'alternating_orientation',
    'enumerate_orientations',
    'reachable_orientations',
    'reflection_path',
]
