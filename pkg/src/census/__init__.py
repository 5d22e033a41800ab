"""
Complejos de conjuntos Ext-libres: f-vectores, inversión de Möbius, independencia de la
orientación y número de clusters positivos.
"""

from .fvectors import FVector, f_plus_vector, full_f_vector, f_plus_restricted, positive_complex
from .moebius import MoebiusReport, mobius_function, moebius_consistency, kj_poset, poset_graph
from .invariance import InvarianceReport, orientation_invariance, positive_cluster_count
from .complexes import SimplicialComplexDesc, FigureReport, complex_isomorphic, a3_figure_check

__all__ = [
    'FVector',
    'f_plus_vector',
    'full_f_vector',
    'f_plus_restricted',
    'positive_complex',
    'MoebiusReport',
    'mobius_function',
    'moebius_consistency',
    'kj_poset',
    'poset_graph',
    'InvarianceReport',
    'orientation_invariance',
    'positive_cluster_count',
    'SimplicialComplexDesc',
    'FigureReport',
    'complex_isomorphic',
    'a3_figure_check',
]
