from collections import Counter

import pytest

from exceptions.quiver_exceptions import DomainError
from quiver import RootVector, dynkin_graph, enumerate_orientations, euler_form, weyl_reflection
from representations import (
    all_indecomposables,
    classical_reflect,
    decompose,
    direct_sum,
    ext_dim,
    hom_dim,
    hom_matrix,
    indecomposable_rep,
    morphism_system,
    rep_from_lists,
    rep_to_json,
    simple_rep,
    zero_rep,
)


def root(vertices, *support):
    return RootVector.from_mapping(vertices, {v: 1 for v in support})


def test_hom_and_ext_between_simples_of_a2(a2_linear):
    e1, e2 = simple_rep(a2_linear, 1), simple_rep(a2_linear, 2)
    p1 = indecomposable_rep(a2_linear, root((1, 2), 1, 2))
    assert hom_dim(e1, e2) == 0
    assert ext_dim(e1, e2) == 1
    assert ext_dim(e2, e1) == 0
    assert hom_dim(e2, p1) == 1
    assert hom_dim(p1, e1) == 1
    assert hom_dim(p1, e2) == 0


def test_hom_minus_ext_is_euler_form(a3_alternating):
    reps = all_indecomposables(a3_alternating)
    for m in reps:
        for n in reps:
            assert hom_dim(m, n) - ext_dim(m, n) == euler_form(a3_alternating, m.dims, n.dims)
            assert ext_dim(m, n) >= 0


def test_morphism_system_basis_has_hom_dimension(a2_linear):
    p1 = indecomposable_rep(a2_linear, root((1, 2), 1, 2))
    system = morphism_system(p1, p1)
    assert system.dimension == 1
    assert len(system.solution_basis()) == 1


def test_indecomposables_have_trivial_endomorphisms_and_no_self_extensions():
    for q in enumerate_orientations(dynkin_graph("D", 4)):
        for m in all_indecomposables(q):
            assert hom_dim(m, m) == 1
            assert ext_dim(m, m) == 0


def test_indecomposable_rejects_non_roots(a3_linear):
    with pytest.raises(DomainError):
        indecomposable_rep(a3_linear, root((1, 2, 3), 1, 3))


def test_hom_matrix_is_unitriangular(a3_linear):
    roots, matrix = hom_matrix(a3_linear)
    assert len(roots) == 6
    for k, row in enumerate(matrix):
        assert row[k] == 1
        assert not any(row[:k])


def test_decompose_recovers_summands(a3_alternating):
    a = indecomposable_rep(a3_alternating, root((1, 2, 3), 1, 2))
    b = indecomposable_rep(a3_alternating, root((1, 2, 3), 2))
    total = direct_sum(a, a, b)
    assert decompose(total) == Counter({a.dims: 2, b.dims: 1})
    assert decompose(zero_rep(a3_alternating)) == Counter()


def test_decompose_splits_a_split_rep_given_by_matrices(a2_linear):
    split = rep_from_lists(a2_linear, {1: 1, 2: 1}, {(1, 2): [[0]]})
    assert decompose(split) == Counter({root((1, 2), 1): 1, root((1, 2), 2): 1})


def test_classical_reflection_acts_as_weyl_reflection(a3_linear):
    for m in all_indecomposables(a3_linear):
        if m.dims == root((1, 2, 3), 1):
            continue
        reflected = classical_reflect(a3_linear, 1, m)
        assert reflected.dims == weyl_reflection(a3_linear.graph, 1, m.dims)
        back = classical_reflect(reflected.quiver, 1, reflected)
        assert decompose(back) == decompose(m)


def test_reflection_at_source_computes_ext_from_simple(a3_linear):
    e1 = simple_rep(a3_linear, 1)
    for a in all_indecomposables(a3_linear):
        assert classical_reflect(a3_linear, 1, a).dim(1) == ext_dim(e1, a)


def test_hom_and_ext_are_additive(a3_linear):
    reps = all_indecomposables(a3_linear)
    a, b, c = reps[0], reps[3], reps[5]
    s = direct_sum(a, b)
    assert hom_dim(s, c) == hom_dim(a, c) + hom_dim(b, c)
    assert ext_dim(c, s) == ext_dim(c, a) + ext_dim(c, b)


def test_rep_to_json_writes_rational_strings(a2_linear):
    p1 = indecomposable_rep(a2_linear, root((1, 2), 1, 2))
    data = rep_to_json(p1)
    assert data["dims"] == {"1": 1, "2": 1}
    assert data["matrices"][0]["from"] == 1
    assert data["matrices"][0]["to"] == 2
    assert all(isinstance(x, str) for row in data["matrices"][0]["rows"] for x in row)


def test_rep_from_lists_validates_shapes(a2_linear):
    with pytest.raises(DomainError):
        rep_from_lists(a2_linear, {1: 1, 2: 2}, {(1, 2): [[1]]})


def test_reps_over_different_quivers_cannot_be_compared(a2_linear, a3_linear):
    with pytest.raises(DomainError):
        hom_dim(simple_rep(a2_linear, 1), simple_rep(a3_linear, 1))
