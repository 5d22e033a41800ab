from collections import Counter

import pytest

from decorated import (
    all_decorated_indecomposables,
    compatibility_degree,
    coincides_with_classical,
    decorated_of_root,
    decorated_sum,
    dualize,
    e_dim,
    extended_reflect,
    is_rigid,
    isoclass,
    negative_simple,
    rigid_by_supports,
    sdim,
    sdim_reflection_applies,
    sigma,
    summand_roots,
    tau,
)
from exceptions.quiver_exceptions import AdmissibilityError, DomainError
from quiver import RootVector, almost_positive_roots, dynkin_graph, enumerate_orientations, reflect_orientation

V3 = (1, 2, 3)


def root(*support, vertices=V3):
    return RootVector.from_mapping(vertices, {v: 1 for v in support})


def test_sdim_subtracts_decoration(a3_alternating):
    m = decorated_sum(decorated_of_root(a3_alternating, root(1, 2)), negative_simple(a3_alternating, 3))
    assert sdim(m).coords == (1, 1, -1)
    assert sdim(decorated_of_root(a3_alternating, -root(2))).coords == (0, -1, 0)


def test_decorated_of_root_rejects_non_roots(a3_alternating):
    with pytest.raises(DomainError):
        decorated_of_root(a3_alternating, RootVector(V3, (1, 0, -1)))


def test_sigma_sends_negative_simple_to_simple():
    graph = dynkin_graph("A", 3)
    for i in V3:
        assert sigma(graph, i, -root(i)) == root(i)
        assert sigma(graph, i, root(i)) == -root(i)


def test_sigma_on_a_non_simple_root():
    graph = dynkin_graph("A", 3)
    assert sigma(graph, 2, root(1)) == root(1, 2)
    assert sigma(graph, 1, root(2, 3)) == root(1, 2, 3)
    assert sigma(graph, 3, root(1)) == root(1)


def test_tau_minus_on_a3():
    graph = dynkin_graph("A", 3)
    assert tau(graph, "-", root(2)) == -root(2)
    assert tau(graph, "-", root(1)) == root(1, 2)
    assert tau(graph, "+", root(1, 2, 3)) == root(2)


def test_tau_are_involutions_on_almost_positive_roots():
    graph = dynkin_graph("D", 4)
    for alpha in almost_positive_roots(graph.underlying):
        assert tau(graph, "+", tau(graph, "+", alpha)) == alpha
        assert tau(graph, "-", tau(graph, "-", alpha)) == alpha


def test_tau_rejects_unknown_sign():
    with pytest.raises(DomainError):
        tau(dynkin_graph("A", 2), "*", root(1, vertices=(1, 2)))


def test_compatibility_degree_depends_on_orientation(a3_alternating, a3_linear):
    assert compatibility_degree(a3_alternating, root(2), root(1, 2, 3)) == 1
    assert compatibility_degree(a3_linear, root(2), root(1, 2, 3)) == 0
    assert compatibility_degree(a3_alternating, root(1, 2), root(2, 3)) == 0


def test_compatibility_with_negative_simple_is_the_coefficient(a3_linear):
    for beta in almost_positive_roots(a3_linear.graph):
        expected = max(beta[2], 0)
        assert compatibility_degree(a3_linear, -root(2), beta) == expected
        assert compatibility_degree(a3_linear, beta, -root(2)) == expected


def test_e_dim_is_symmetric(a3_alternating):
    reps = all_decorated_indecomposables(a3_alternating)
    assert len(reps) == 9
    for m in reps:
        for n in reps:
            assert e_dim(a3_alternating, m, n) == e_dim(a3_alternating, n, m)


def test_extended_reflection_acts_by_sigma_on_sdim(a3_alternating):
    for m in all_decorated_indecomposables(a3_alternating):
        for i in V3:
            reflected = extended_reflect(a3_alternating, i, m)
            assert reflected.quiver == reflect_orientation(a3_alternating, i)
            assert sdim(reflected) == sigma(a3_alternating.graph, i, sdim(m))


def test_sdim_reflection_needs_disjoint_decoration_at_neighbours(a2_linear):
    e2 = decorated_of_root(a2_linear, RootVector((1, 2), (0, 1)))
    m = decorated_sum(e2, negative_simple(a2_linear, 2))
    assert not sdim_reflection_applies(a2_linear, 1, m)
    assert sdim(extended_reflect(a2_linear, 1, m)).coords == (1, 0)
    assert sigma(a2_linear.graph, 1, sdim(m)).coords == (0, 0)


def test_sdim_reflection_holds_under_its_hypothesis(a2_linear):
    m = decorated_sum(decorated_of_root(a2_linear, RootVector((1, 2), (1, 0))), negative_simple(a2_linear, 2))
    assert sdim_reflection_applies(a2_linear, 1, m)
    assert sdim(extended_reflect(a2_linear, 1, m)) == sigma(a2_linear.graph, 1, sdim(m))
    assert sdim(m).coords == (1, -1)


def test_extended_reflection_squared_is_identity_on_classes(a3_linear):
    q1 = reflect_orientation(a3_linear, 1)
    for m in all_decorated_indecomposables(a3_linear):
        back = extended_reflect(q1, 1, extended_reflect(a3_linear, 1, m))
        assert back.quiver == a3_linear
        assert isoclass(back) == isoclass(m)


def test_extended_reflection_preserves_e_dim(a3_linear):
    q1 = reflect_orientation(a3_linear, 1)
    reps = all_decorated_indecomposables(a3_linear)
    for m in reps:
        for n in reps:
            assert e_dim(a3_linear, m, n) == e_dim(
                q1, extended_reflect(a3_linear, 1, m), extended_reflect(a3_linear, 1, n)
            )


def test_extended_reflection_requires_source_or_sink(a3_linear):
    with pytest.raises(AdmissibilityError):
        extended_reflect(a3_linear, 2, decorated_of_root(a3_linear, root(2)))


def test_simple_at_source_becomes_negative_simple(a3_linear):
    reflected = extended_reflect(a3_linear, 1, decorated_of_root(a3_linear, root(1)))
    assert reflected.plus.is_zero()
    assert reflected.minus_dims == root(1)


def test_dualize_is_an_involution(a3_alternating):
    for m in all_decorated_indecomposables(a3_alternating):
        d = dualize(m)
        assert d.quiver == a3_alternating.opposite()
        assert sdim(d) == sdim(m)
        assert dualize(d) == m


def test_e_dim_is_preserved_by_duality_on_every_a3_orientation():
    for q in enumerate_orientations(dynkin_graph("A", 3)):
        op = q.opposite()
        reps = all_decorated_indecomposables(q)
        dual = {m: dualize(m) for m in reps}
        for m in reps:
            for n in reps:
                assert e_dim(q, m, n) == e_dim(op, dual[n], dual[m])


def test_rigidity_matches_support_characterization(a3_alternating):
    u = lambda *s: decorated_of_root(a3_alternating, root(*s))
    candidates = [
        decorated_sum(u(2), negative_simple(a3_alternating, 1)),
        decorated_sum(u(1), negative_simple(a3_alternating, 1)),
        decorated_sum(u(1, 2), u(2, 3)),
        decorated_sum(u(2), u(1, 2, 3)),
        decorated_sum(u(1), u(1)),
    ]
    expected = [True, False, True, False, True]
    assert [is_rigid(a3_alternating, m) for m in candidates] == expected
    assert [rigid_by_supports(a3_alternating, m) for m in candidates] == expected


def test_extended_reflection_agrees_with_classical_away_from_simples(a3_linear):
    m = decorated_of_root(a3_linear, root(1, 2))
    assert coincides_with_classical(a3_linear, 1, m)
    with pytest.raises(DomainError):
        coincides_with_classical(a3_linear, 1, decorated_of_root(a3_linear, root(1)))


def test_summand_roots_counts_decoration(a3_alternating):
    m = decorated_sum(
        decorated_of_root(a3_alternating, root(1)),
        decorated_of_root(a3_alternating, root(1)),
        negative_simple(a3_alternating, 2),
    )
    assert summand_roots(m) == Counter({root(1): 2, -root(2): 1})
