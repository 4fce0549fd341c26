"""Affine matrix models: presentation checks, element orders, classes."""

import pytest
from hypothesis import given, settings, strategies as st

from crysref.affine import (
    MATRIX_FAMILIES,
    build_generator_matrices,
    classify_element,
    enumerate_reflection_classes,
    evaluate_word,
    verify_presentation,
)
from crysref.presentations import build_group_presentation
from crysref.words import Word

ALL_CASES = (
    [("C_alpha", n) for n in (1, 2, 3, 4)]
    + [("A_alpha", n) for n in (2, 3, 4, 5)]
    + [(f, n) for f in ("G311", "G411", "G611") for n in (1, 2, 3)]
)


@pytest.mark.parametrize("family,n", ALL_CASES, ids=str)
def test_presentation_verifies_exactly(family, n):
    pres = build_group_presentation(family, n)
    _, gens = build_generator_matrices(family, n)
    report = verify_presentation(pres, gens)
    assert report["pass"], [r for r in report["relators"] if not r["pass"]]
    assert report["extra_order"]["pass"]


@pytest.mark.parametrize("family,n", ALL_CASES, ids=str)
def test_generator_orders_match_labels(family, n):
    pres = build_group_presentation(family, n)
    _, gens = build_generator_matrices(family, n)
    for g, label in zip(gens, pres.generator_orders):
        assert g.order() == label


def test_affine_composition_law():
    _, gens = build_generator_matrices("C_alpha", 2)
    a, b = gens[0], gens[1]
    v = tuple(a.spec.el(i + 1) for i in range(a.dim))
    assert (a * b).apply(v) == a.apply(b.apply(v))


@pytest.mark.parametrize("family,n", [("C_alpha", 2), ("A_alpha", 3), ("G411", 2)])
def test_evaluate_word_is_homomorphism(family, n):
    _, gens = build_generator_matrices(family, n)
    k = len(gens)
    letters = st.lists(
        st.tuples(st.integers(min_value=0, max_value=k - 1),
                  st.sampled_from([-1, 1])),
        max_size=10,
    )

    @settings(max_examples=170, deadline=None)
    @given(letters, letters)
    def inner(ls1, ls2):
        u, v = Word(ls1), Word(ls2)
        assert evaluate_word(u * v, gens) == evaluate_word(u, gens) * evaluate_word(v, gens)
        assert evaluate_word(u.inverse(), gens) == evaluate_word(u, gens).inverse()

    inner()


def test_inverse_and_identity():
    _, gens = build_generator_matrices("G611", 2)
    for g in gens:
        assert (g * g.inverse()).is_identity()
        assert (g ** 0).is_identity()


def test_translation_elements_have_infinite_order():
    _, gens = build_generator_matrices("C_alpha", 2)
    # s3 * s4 is a pure translation by (alpha - 1) e_n: infinite order
    t = gens[2] * gens[3]
    assert t.order() is None


def test_classify_reflection():
    _, gens = build_generator_matrices("C_alpha", 2)
    info = classify_element(gens[0])
    assert info["kind"] == "reflection"
    assert info["order"] == 2
    info2 = classify_element(gens[0] * gens[0])
    assert info2["kind"] == "identity"
    info3 = classify_element(gens[2] * gens[3])
    assert info3["kind"] == "translation"


CLASS_GOLDENS = {
    ("C_alpha", 1): 4,
    ("C_alpha", 2): 5,
    ("C_alpha", 3): 5,
    ("A_alpha", 3): 1,
    ("A_alpha", 4): 1,
}


@pytest.mark.parametrize("family,n", sorted(CLASS_GOLDENS), ids=str)
def test_reflection_class_counts(family, n):
    classes = enumerate_reflection_classes(family, n, bound=2)
    assert len(classes) == CLASS_GOLDENS[(family, n)]


def test_matrix_families_constant():
    assert set(MATRIX_FAMILIES) == {"A_alpha", "C_alpha", "G311", "G411", "G611"}
    with pytest.raises(Exception):
        build_generator_matrices("G412", 2)
