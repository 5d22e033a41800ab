import networkx as nx
import pytest

from census import (
    FVector,
    SimplicialComplexDesc,
    a3_figure_check,
    complex_isomorphic,
    f_plus_restricted,
    f_plus_vector,
    full_f_vector,
    kj_poset,
    mobius_function,
    moebius_consistency,
    orientation_invariance,
    positive_cluster_count,
    positive_complex,
)
from clusters import enumerate_clusters, positive_clusters
from exceptions.quiver_exceptions import DomainError, InvariantViolation, ResourceCapError
from quiver import RootVector, alternating_orientation, dynkin_graph, enumerate_orientations, parse_dynkin_name


def test_fvector_validation():
    fv = FVector((1, 3, 2))
    assert fv[1] == 3 and fv[5] == 0 and fv.top == 2
    with pytest.raises(DomainError):
        FVector((2, 1))
    with pytest.raises(DomainError):
        FVector((1, -1))


def test_f_plus_vectors(a2_linear, a3_alternating, a3_linear):
    assert f_plus_vector(a3_alternating).as_list() == [1, 6, 10, 5]
    assert f_plus_vector(a3_linear).as_list() == [1, 6, 10, 5]
    assert f_plus_vector(a2_linear).as_list() == [1, 3, 2]
    a1 = alternating_orientation(dynkin_graph("A", 1))[0]
    assert f_plus_vector(a1).as_list() == [1, 1]


def test_full_f_vectors(a2_linear, a3_alternating):
    assert full_f_vector(a2_linear, (1, 2)).as_list() == [1, 5, 5]
    assert full_f_vector(a3_alternating, {1, 3}).as_list() == [1, 4, 4]
    assert full_f_vector(a3_alternating, ()).as_list() == [1]
    assert full_f_vector(a3_alternating, (1, 2, 3)).as_list() == [1, 9, 21, 14]
    with pytest.raises(DomainError):
        full_f_vector(a3_alternating, {4})


def test_f_plus_restricted_to_a_subset(a3_alternating):
    assert f_plus_restricted(a3_alternating, {1, 2}).as_list() == [1, 3, 2]
    assert f_plus_restricted(a3_alternating, set()).as_list() == [1]


def test_kj_poset_mobius_is_a_sign():
    poset = kj_poset((1, 2))
    mu = mobius_function(poset)
    top = (2, frozenset({1, 2}))
    assert mu[((0, frozenset()), top)] == 1
    assert mu[((1, frozenset({1})), top)] == -1
    assert mu[(top, top)] == 1


def test_moebius_consistency(a2_linear, a3_alternating):
    assert moebius_consistency(a2_linear).passed
    report = moebius_consistency(a3_alternating)
    assert report.passed
    assert report.to_json()["checked"] == report.checked > 0


@pytest.mark.parametrize("name,count", [("A1", 1), ("A3", 5), ("A4", 14), ("D4", 20), ("D5", 77), ("E6", 418)])
def test_positive_cluster_formula(name, count):
    assert positive_cluster_count(parse_dynkin_name(name)) == count


@pytest.mark.parametrize("name,positive,total", [
    ("A5", 42, 429),
    ("D5", 77, 182),
    pytest.param("E6", 418, 833, marks=pytest.mark.slow),
])
def test_enumeration_matches_the_product_formula(name, positive, total):
    graph = parse_dynkin_name(name)
    q0 = alternating_orientation(graph)[0]
    assert len(positive_clusters(q0)) == positive_cluster_count(graph) == positive
    assert len(enumerate_clusters(q0)) == total


def test_positive_cluster_formula_rejects_reducible_graphs():
    with pytest.raises(DomainError):
        positive_cluster_count(parse_dynkin_name("A2+A1"))


def test_positive_cluster_formula_with_wrong_exponents_is_not_integral():
    with pytest.raises(InvariantViolation):
        positive_cluster_count(parse_dynkin_name("A3"), exponents=(1, 2, 4))


def test_orientation_invariance_on_a3():
    report = orientation_invariance(dynkin_graph("A", 3))
    assert len(report.orientations) == 4
    assert report.invariant
    assert report.common.as_list() == [1, 6, 10, 5]
    assert report.formula_value == 5
    assert report.passed
    frame = report.to_frame()
    assert len(frame) == 4


def test_orientation_invariance_on_a_forest_skips_formula():
    report = orientation_invariance(parse_dynkin_name("A2+A1"))
    assert report.formula_value is None
    assert report.passed


def test_complex_isomorphism(a3_alternating, a3_linear):
    assert not complex_isomorphic(a3_alternating, a3_linear)
    assert complex_isomorphic(a3_linear, a3_linear)
    assert complex_isomorphic(a3_alternating, a3_alternating.opposite())


def test_positive_complex_is_determined_by_its_one_skeleton():
    quivers = enumerate_orientations(dynkin_graph("A", 3))
    for q in quivers:
        facets = set(SimplicialComplexDesc.of(q).facets)
        assert facets == {frozenset(c) for c in nx.find_cliques(positive_complex(q))}
    linear = [q for q in quivers if SimplicialComplexDesc.of(q).degree(RootVector((1, 2, 3), (1, 1, 1))) == 5]
    assert len(linear) == 2
    assert complex_isomorphic(*linear)


def test_complex_isomorphism_guards(a2_linear, a3_linear):
    with pytest.raises(DomainError):
        complex_isomorphic(a2_linear, a3_linear)
    a5 = alternating_orientation(dynkin_graph("A", 5))[0]
    with pytest.raises(ResourceCapError):
        complex_isomorphic(a5, a5.opposite())


def test_simplicial_complex_description(a3_linear):
    desc = SimplicialComplexDesc.of(a3_linear)
    assert len(desc.vertices) == 6
    assert len(desc.facets) == 5
    top = RootVector((1, 2, 3), (1, 1, 1))
    assert desc.degree(top) == 5


def test_a3_figure():
    report = a3_figure_check()
    assert report.passed
    assert report.to_json()["degree_123"] == {"alternating": 4, "linear": 5}


@pytest.mark.slow
@pytest.mark.parametrize("name,positive", [("D5", 77), ("E6", 418)])
def test_positive_cluster_count_on_every_orientation(name, positive):
    report = orientation_invariance(parse_dynkin_name(name))
    assert report.passed
    assert report.formula_value == positive
    assert report.common.as_list()[-1] == positive
