import pytest

from decorated import tau
from exceptions.quiver_exceptions import AdmissibilityError, DomainError
from groupoid import (
    DUAL,
    Sigma,
    Word,
    action_compatibility,
    apply_word,
    check_inbetween,
    check_lemmas,
    classify_loops,
    conjugation_check,
    default_max_len,
    inverse,
    is_reduced,
    loop_counts,
    normal_form,
    parse_letters,
    reduced_words,
    relation_soundness,
    word_action_on_roots,
)
from groupoid.words import NormalForm
from quiver import alternating_orientation, dynkin_graph


@pytest.fixture
def a2_alternating():
    return alternating_orientation(dynkin_graph("A", 2))[0]


def test_parse_letters_accepts_several_spellings():
    assert parse_letters("S1, 2 D") == (Sigma(1), Sigma(2), DUAL)
    assert parse_letters("Σ3") == (Sigma(3),)
    with pytest.raises(DomainError):
        parse_letters("S1,X")


def test_apply_word_follows_reflections(a3_alternating):
    w = Word.of(a3_alternating, "S1 S3")
    assert apply_word(w).label() == "2>1,2>3"
    assert apply_word(Word.of(a3_alternating, "D")) == a3_alternating.opposite()
    assert apply_word(Word.of(a3_alternating, [])) == a3_alternating


def test_apply_word_reports_first_inadmissible_position(a3_alternating):
    with pytest.raises(AdmissibilityError) as exc:
        apply_word(Word.of(a3_alternating, [1, 2]))
    assert exc.value.position == 1
    assert exc.value.vertex == 2


def test_normal_forms(a3_alternating):
    assert normal_form(Word.of(a3_alternating, [1, 1])) == NormalForm(0, ())
    assert normal_form(Word.of(a3_alternating, [1, 3])) == normal_form(Word.of(a3_alternating, [3, 1]))
    assert normal_form(Word.of(a3_alternating, [1, 3])).layers == ((1, 3),)
    assert normal_form(Word.of(a3_alternating, "D S1 D")) == normal_form(Word.of(a3_alternating, "S1"))
    assert str(normal_form(Word.of(a3_alternating, "D"))) == "D"


def test_is_reduced(a2_alternating, a3_alternating):
    assert is_reduced(Word.of(a2_alternating, [1, 2, 1]))
    assert not is_reduced(Word.of(a2_alternating, [1, 1]))
    assert not is_reduced(Word.of(a3_alternating, [1, 3, 1]))


def test_is_reduced_rejects_dual_letters(a2_alternating):
    with pytest.raises(DomainError):
        is_reduced(Word.of(a2_alternating, "S1 D"))


def test_check_inbetween_from_opposite(a3_alternating):
    w = Word.of(a3_alternating.opposite(), [2, 1, 3, 2])
    assert is_reduced(w)
    assert check_inbetween(w)
    with pytest.raises(DomainError):
        check_inbetween(Word.of(a3_alternating, [1, 1]))


def test_inverse_returns_to_start(a3_alternating):
    w = Word.of(a3_alternating, [1, 3, 2, 1])
    back = inverse(w)
    assert back.start == apply_word(w)
    assert apply_word(back) == a3_alternating
    assert normal_form(Word(a3_alternating, w.letters + back.letters)) == NormalForm(0, ())


def test_reduced_words_are_reduced(a3_alternating):
    words = list(reduced_words(a3_alternating, 4))
    assert words[0][0].letters == ()
    for w, end in words:
        assert is_reduced(w)
        assert apply_word(w) == end


def test_loop_counts_on_a2():
    tree = dynkin_graph("A", 2).underlying
    counts = loop_counts(tree, 2)
    assert sum(counts.values()) == 5
    assert counts[NormalForm(0, ())] == 3
    assert counts[NormalForm(0, ((1,), (2,)))] == 1
    assert counts[NormalForm(0, ((2,), (1,)))] == 1


def test_classify_loops_on_a2_and_a3():
    report = classify_loops(dynkin_graph("A", 2), 8)
    assert report.passed
    data = report.to_json()
    assert data["loops_by_k"]["0"] >= 1
    assert "1" in data["loops_by_k"] and "-1" in data["loops_by_k"]
    assert classify_loops(dynkin_graph("A", 3), 8).passed


def test_classify_loops_on_a_forest_checks_each_component():
    from quiver import parse_dynkin_name

    report = classify_loops(parse_dynkin_name("A2+A1"), 6)
    assert report.passed
    assert len(report.components) == 2
    assert "components" in report.to_json()


def test_default_max_len():
    assert default_max_len(dynkin_graph("A", 3)) == 24


def test_lemmas_hold_on_a3():
    report = check_lemmas(dynkin_graph("A", 3), 6)
    assert report.passed
    assert set(report.checked) == {"inbetween", "extremal", "allappear", "reduced"}


def test_relations_are_sound():
    assert relation_soundness(dynkin_graph("A", 3)) == []
    assert relation_soundness(dynkin_graph("D", 4)) == []


def test_t_plus_acts_as_tau_plus(a3_alternating):
    graph = dynkin_graph("A", 3)
    t_plus = Word.of(a3_alternating, "D S1 S3")
    assert apply_word(t_plus) == a3_alternating
    action = word_action_on_roots(t_plus)
    assert all(image == tau(graph, "+", alpha) for alpha, image in action.items())

    squared = t_plus.then(t_plus.letters)
    assert all(alpha == image for alpha, image in word_action_on_roots(squared).items())
    assert normal_form(squared) == NormalForm(0, ())


def test_action_preserves_compatibility():
    assert action_compatibility(dynkin_graph("A", 2), max_len=3) == []


def test_conjugated_loops_are_alternating():
    assert conjugation_check(dynkin_graph("A", 2), 4) == []
