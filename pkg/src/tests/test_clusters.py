import numpy as np
import pytest

from clusters import (
    Cluster,
    build_fan,
    check_negative_part,
    cluster_expansion,
    compatibility_matrix,
    compatible_set,
    enumerate_clusters,
    ext_free_maximal_sets,
    positive_clusters,
    reduction_counts,
    relabel_clusters,
    sample_vectors,
    verify_fan,
)
from exceptions.quiver_exceptions import DomainError, ResourceCapError
from quiver import (
    RootVector,
    alternating_orientation,
    dynkin_graph,
    enumerate_orientations,
    parse_dynkin_name,
)


def gamma(*coords):
    return RootVector(tuple(range(1, len(coords) + 1)), coords)


def test_a2_has_five_clusters(a2_linear):
    clusters = enumerate_clusters(a2_linear)
    assert len(clusters) == 5
    assert all(c.size == 2 for c in clusters)
    assert [c.indices() for c in clusters] == sorted(c.indices() for c in clusters)


def test_every_a3_orientation_has_fourteen_unimodular_clusters():
    for q in enumerate_orientations(dynkin_graph("A", 3)):
        clusters = enumerate_clusters(q)
        assert len(clusters) == 14
        assert all(abs(c.determinant) == 1 for c in clusters)


def test_cluster_determinant_is_an_exact_integer(a2_linear):
    det = Cluster(a2_linear, (gamma(-1, 0), gamma(0, 1))).determinant
    assert det == -1 and type(det) is int
    assert Cluster(a2_linear, (gamma(1, 1), gamma(0, 1))).determinant == 1
    assert Cluster(a2_linear, (gamma(1, 1),)).determinant == 0


@pytest.mark.parametrize("name,count", [("A2", 2), ("A3", 5), ("A4", 14)])
def test_positive_cluster_counts(name, count):
    q = alternating_orientation(parse_dynkin_name(name))[0]
    assert len(positive_clusters(q)) == count


@pytest.mark.slow
def test_positive_clusters_of_d4():
    for q in enumerate_orientations(dynkin_graph("D", 4))[:2]:
        assert len(positive_clusters(q)) == 20


def test_positive_clusters_agree_with_ext_free_sets(a3_linear):
    expected = {frozenset(s) for s in ext_free_maximal_sets(a3_linear, size=3)}
    assert {frozenset(c.roots) for c in positive_clusters(a3_linear)} == expected


def test_compatibility_matrix_is_symmetric_with_zero_diagonal(a3_alternating):
    degrees = compatibility_matrix(a3_alternating)
    assert degrees.shape == (9, 9)
    assert (degrees == degrees.T).all()
    assert not np.diag(degrees).any()


def test_compatible_set_rejects_incompatible_roots(a2_linear):
    e1 = RootVector.simple((1, 2), 1)
    with pytest.raises(DomainError):
        compatible_set(a2_linear, [e1, -e1])
    assert compatible_set(a2_linear, [e1]).is_positive()


def test_expansion_on_a2(a2_linear):
    expansion = cluster_expansion(a2_linear, gamma(1, 2))
    assert {a.label(): m for a, m in expansion.terms} == {"12": 1, "2": 1}
    mixed = cluster_expansion(a2_linear, gamma(-1, 1))
    assert {a.label(): m for a, m in mixed.terms} == {"-1": 1, "2": 1}
    assert check_negative_part(mixed)
    assert cluster_expansion(a2_linear, gamma(0, 0)).terms == ()


def test_expansion_rejects_foreign_vectors(a2_linear):
    with pytest.raises(DomainError):
        cluster_expansion(a2_linear, gamma(1, 0, 0))


def test_expansion_support_is_a_cluster_face(a3_alternating):
    fan = build_fan(a3_alternating)
    clusters = [frozenset(c) for c in fan.clusters]
    for s in range(20):
        g = gamma(*(int(x) for x in sample_vectors(3, 20, 11)[:, s]))
        expansion = cluster_expansion(a3_alternating, g, fan)
        indices = frozenset(fan.roots.index(a) for a in expansion.support)
        assert any(indices <= c for c in clusters)
        total = RootVector.zero(g.vertices)
        for alpha, m in expansion.terms:
            total = total + m * alpha
        assert total == g


def test_fan_to_frame_has_one_row_per_cluster(a3_linear):
    fan = build_fan(a3_linear)
    frame = fan.to_frame()
    assert len(frame) == 14
    assert list(frame.columns) == ["root_0", "root_1", "root_2"]
    assert fan.to_json()["rank"] == 3


def test_verify_fan_passes_with_few_samples(a3_alternating):
    report = verify_fan(a3_alternating, samples=50, seed=3)
    assert report.passed
    assert report.clusters == 14
    assert report.to_json()["samples"] == 50


def test_sigma_relabels_clusters(a3_linear):
    assert relabel_clusters(a3_linear, 1)
    assert relabel_clusters(a3_linear, 3)


def test_reduction_counts_match(a3_alternating):
    counts = reduction_counts(a3_alternating)
    assert counts[()] == (5, 5)
    assert counts[(1, 2, 3)] == (1, 1)
    assert all(exact == expected for exact, expected in counts.values())
    assert sum(exact for exact, _ in counts.values()) == 14


def test_rank_cap_blocks_large_graphs():
    q = alternating_orientation(dynkin_graph("E", 7))[0]
    with pytest.raises(ResourceCapError):
        enumerate_clusters(q)
    with pytest.raises(ResourceCapError):
        build_fan(q)
