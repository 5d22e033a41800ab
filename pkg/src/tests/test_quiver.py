import pytest

from contracts.quiver_contract import ValidatedQuiver
from exceptions.quiver_exceptions import (
    AdmissibilityError,
    ClassificationError,
    DomainError,
    UnsupportedGraphError,
)
from quiver import (
    Quiver,
    RootVector,
    TreeGraph,
    almost_positive_roots,
    alternating_orientation,
    classify_tree,
    dynkin_graph,
    enumerate_orientations,
    euler_form,
    parse_dynkin_name,
    positive_roots,
    reachable_orientations,
    reflect_orientation,
    reflection_path,
)


@pytest.mark.parametrize("kind,rank,count", [
    ("A", 1, 1), ("A", 3, 6), ("A", 4, 10), ("D", 4, 12), ("D", 5, 20), ("E", 6, 36),
])
def test_positive_root_counts(kind, rank, count):
    graph = dynkin_graph(kind, rank)
    assert len(positive_roots(graph.underlying)) == count
    assert len(almost_positive_roots(graph.underlying)) == count + rank


def test_almost_positive_roots_put_negative_simples_last():
    graph = dynkin_graph("A", 2).underlying
    roots = almost_positive_roots(graph)
    assert [r.label() for r in roots[-2:]] == ["-1", "-2"]
    assert all(r.is_nonnegative() for r in roots[:-2])


def test_d4_exponents_and_coxeter_number():
    d4 = dynkin_graph("D", 4)
    assert d4.exponents == ((1, 3, 3, 5),)
    assert d4.coxeter_numbers == (6,)


@pytest.mark.parametrize("kind,rank", [("D", 3), ("E", 9), ("B", 2), ("A", 0)])
def test_invalid_dynkin_types_rejected(kind, rank):
    with pytest.raises(ClassificationError):
        dynkin_graph(kind, rank)


def test_classify_tree_recognizes_star_as_d4():
    star = TreeGraph((1, 2, 3, 4), ((1, 2), (2, 3), (2, 4)))
    assert classify_tree(star).name == "D4"


def test_classify_tree_rejects_affine_star():
    star = TreeGraph((1, 2, 3, 4, 5), ((1, 2), (1, 3), (1, 4), (1, 5)))
    with pytest.raises(UnsupportedGraphError):
        classify_tree(star)


def test_parse_dynkin_sum_uses_consecutive_labels():
    graph = parse_dynkin_name("A2+A1")
    assert graph.vertices == (1, 2, 3)
    assert graph.components == (("A", 2), ("A", 1))
    assert not graph.is_irreducible


def test_tree_graph_rejects_cycles():
    with pytest.raises(DomainError):
        TreeGraph((1, 2, 3), ((1, 2), (2, 3), (1, 3)))


def test_alternating_orientation_of_a3():
    q0, plus, minus = alternating_orientation(dynkin_graph("A", 3))
    assert plus == {1, 3} and minus == {2}
    assert q0.label() == "1>2,3>2"
    assert all(q0.is_source(i) for i in plus)
    assert all(q0.is_sink(i) for i in minus)


def test_reflect_orientation_requires_source_or_sink(a3_linear):
    with pytest.raises(AdmissibilityError):
        reflect_orientation(a3_linear, 2)
    assert reflect_orientation(a3_linear, 1).label() == "2>1,2>3"


def test_every_orientation_is_reachable():
    graph = dynkin_graph("D", 4)
    orientations = enumerate_orientations(graph)
    assert len(orientations) == 8
    q0 = orientations[0]
    assert set(reachable_orientations(q0)) == set(orientations)
    for q in orientations:
        path = reflection_path(q0, q)
        current = q0
        for i in path:
            current = reflect_orientation(current, i)
        assert current == q


def test_restrict_keeps_induced_arrows(a3_alternating):
    sub = a3_alternating.restrict({1, 2})
    assert sub.vertices == (1, 2)
    assert sub.arrows == ((1, 2),)


def test_euler_form_on_a2(a2_linear):
    e1 = RootVector.simple((1, 2), 1)
    e2 = RootVector.simple((1, 2), 2)
    assert euler_form(a2_linear, e1, e2) == -1
    assert euler_form(a2_linear, e2, e1) == 0
    assert euler_form(a2_linear, e1, e1) == 1


def test_quiver_contract_round_trip(a3_alternating):
    data = a3_alternating.to_contract()
    assert data["dynkin"] == "A3"
    assert ValidatedQuiver.validate(data) == a3_alternating


def test_quiver_contract_rejects_wrong_declared_type():
    data = {"vertices": [1, 2, 3], "edges": [{"from": 1, "to": 2}, {"from": 2, "to": 3}], "dynkin": "D4"}
    with pytest.raises(DomainError):
        ValidatedQuiver.validate(data)
    assert ValidatedQuiver.create_safe_quiver(data) is None


def test_quiver_contract_rejects_dangling_edge():
    data = {"vertices": [1, 2], "edges": [{"from": 1, "to": 5}]}
    with pytest.raises(DomainError):
        ValidatedQuiver.validate(data)


def test_quiver_from_arrows_requires_tree_edges():
    with pytest.raises(DomainError):
        Quiver.from_arrows((1, 2), [(1, 2), (2, 1)])
