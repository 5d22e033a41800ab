"""
Conjuntos Γ-compatibles, Γ-clusters, el abanico Δ_Γ y la expansión en clusters.
"""

from .compatibility import (
    CompatibleSet,
    Cluster,
    compatible_set,
    compatibility_matrix,
    compatibility_graph,
    maximal_compatible_sets,
    enumerate_clusters,
    positive_clusters,
    ext_free_maximal_sets,
    require_rank_cap,
)
from .fan import (
    ClusterExpansion,
    ClusterFan,
    FanReport,
    build_fan,
    cluster_expansion,
    verify_fan,
    relabel_clusters,
    reduction_counts,
    check_negative_part,
    sample_vectors,
)

__all__ = [
    'CompatibleSet',
    'Cluster',
    'compatible_set',
    'compatibility_matrix',
    'compatibility_graph',
    'maximal_compatible_sets',
    'enumerate_clusters',
    'positive_clusters',
    'ext_free_maximal_sets',
    'require_rank_cap',
    'ClusterExpansion',
    'ClusterFan',
    'FanReport',
    'build_fan',
    'cluster_expansion',
    'verify_fan',
    'relabel_clusters',
    'reduction_counts',
    'check_negative_part',
    'sample_vectors',
]
