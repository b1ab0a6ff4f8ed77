from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from nclr.combinatorics import content, from_word, identity, partitions, permute_sequence, subpartitions
from nclr.crystal import (
    LrTriple,
    crystal_apply,
    crystal_orbit,
    crystal_reflect,
    enumerate_lrt,
    lrt_sigma,
    reflect_word,
)
from nclr.frank import parse_frank, phi
from nclr.tableaux import (
    SkewTableau,
    column_reading_word,
    is_semistandard,
    jdt_rectify,
    normalized_skew_shapes,
    semistandard_tableaux,
    standardize_tableau,
    tableau_content,
)

from conftest import RUNNING_IMAGES, RUNNING_LAMBDA, RUNNING_LR, RUNNING_MU, RUNNING_NU
from oracles import lr_count_by_search

RUNNING = LrTriple(RUNNING_LAMBDA, RUNNING_MU, RUNNING_NU)


def small_tableaux(max_size, alphabet):
    for n in range(1, max_size + 1):
        for outer, inner in normalized_skew_shapes(n):
            yield from semistandard_tableaux(inner, outer, alphabet)


def test_reflect_word_examples():
    # unpaired letters i^a (i+1)^b become i^b (i+1)^a
    assert reflect_word(1, (1, 1, 1)) == (2, 2, 2)
    assert reflect_word(1, (2, 1)) == (2, 1)
    assert reflect_word(1, (1, 2)) == (1, 2)
    assert reflect_word(1, (1, 1, 2)) == (1, 2, 2)
    assert reflect_word(2, (1, 3, 1)) == (1, 2, 1)
    assert reflect_word(5, (1, 2, 3)) == (1, 2, 3)


def test_reflection_of_phi_example():
    lam, mu = (7, 6, 4, 2, 2), (5, 5, 2, 1)
    t = phi(parse_frank("621|76432"), lam, mu)
    assert column_reading_word(t) == (2, 2, 1, 1, 1, 2, 1, 1)
    image = crystal_reflect(1, t)
    changed = {cell for cell in t.cells if t.cells[cell] != image.cells[cell]}
    assert {c for _, c in changed} == {4, 7}
    assert all(t.cells[cell] == 1 and image.cells[cell] == 2 for cell in changed)


def test_demo_reflection():
    t = SkewTableau((2, 1), ((1, 1, 1), (1, 2), (2, 3)))
    image = crystal_reflect(1, t)
    assert image.rows[0] == (1, 2, 2)
    assert crystal_reflect(1, image) == t


def test_running_images():
    sigma = from_word((1, 2), 3)
    assert permute_sequence(sigma, RUNNING_NU) == (1, 4, 3)
    assert [crystal_apply(sigma, t) for t in RUNNING_LR] == list(RUNNING_IMAGES)
    assert all(tableau_content(t) == (1, 4, 3) for t in RUNNING_IMAGES)
    assert lrt_sigma(RUNNING, sigma) == sorted(RUNNING_IMAGES, key=column_reading_word)


def test_identity_and_reduced_word_choice():
    w0 = (3, 2, 1)
    for t in RUNNING_LR:
        assert crystal_apply(identity(3), t) == t
        assert crystal_apply(w0, t, (1, 2, 1)) == crystal_apply(w0, t, (2, 1, 2))


@given(st.lists(st.integers(1, 3), min_size=1, max_size=8))
def test_reduced_words_of_longest_element_agree(w):
    t = SkewTableau(tuple(range(len(w) - 1, 0, -1)), tuple((x,) for x in reversed(w)))
    assert column_reading_word(t) == tuple(w)
    assert crystal_apply((3, 2, 1), t, (1, 2, 1)) == crystal_apply((3, 2, 1), t, (2, 1, 2))


def test_reflection_preserves_tableaux_and_acts_on_content():
    for t in small_tableaux(5, 4):
        for i in (1, 2, 3):
            image = crystal_reflect(i, t)
            assert is_semistandard(image) and image.outer == t.outer and image.inner == t.inner
            want = list(padded(tableau_content(t)))
            want[i - 1], want[i] = want[i], want[i - 1]
            assert padded(content(column_reading_word(image))) == tuple(want)


def padded(cont, n=4):
    return tuple(cont) + (0,) * (n - len(cont))


def test_coxeter_relations_on_tableaux():
    for t in small_tableaux(5, 4):
        for i in (1, 2, 3):
            assert crystal_reflect(i, crystal_reflect(i, t)) == t
        a = crystal_reflect(1, crystal_reflect(3, t))
        assert a == crystal_reflect(3, crystal_reflect(1, t))
        for i in (1, 2):
            left = crystal_reflect(i, crystal_reflect(i + 1, crystal_reflect(i, t)))
            assert left == crystal_reflect(i + 1, crystal_reflect(i, crystal_reflect(i + 1, t)))


def test_reflection_keeps_rectified_shape():
    for t in small_tableaux(5, 3):
        before = jdt_rectify(standardize_tableau(t)).outer
        for i in (1, 2):
            assert jdt_rectify(standardize_tableau(crystal_reflect(i, t))).outer == before


# ---------------------------------------------------------------------------
# LR tableaux

def test_running_lr_tableaux():
    assert enumerate_lrt(RUNNING) == sorted(RUNNING_LR, key=column_reading_word)


def test_lr_small_examples():
    assert enumerate_lrt(LrTriple((2, 1), (2, 1), ())) == [SkewTableau((2, 1), ((), ()))]
    assert len(enumerate_lrt(LrTriple((3, 2, 1), (2, 1), (2, 1)))) == 2


def test_lr_triple_validation():
    with pytest.raises(ValueError):
        LrTriple((2, 1), (3,), ())
    with pytest.raises(ValueError):
        LrTriple((2, 1), (1,), (1,))
    with pytest.raises(ValueError):
        LrTriple((1, 2), (), (3,))


def test_lr_counts_against_search():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                for nu in partitions(n - sum(mu)):
                    if len(nu) > 3:
                        continue
                    assert len(enumerate_lrt(LrTriple(lam, mu, nu))) == lr_count_by_search(lam, mu, nu)


def test_lrt_sigma_degree_check():
    with pytest.raises(ValueError):
        lrt_sigma(RUNNING, (2, 1))


def test_orbit_matches_direct_application():
    for t in RUNNING_LR:
        orbit = crystal_orbit(t, 3)
        assert len(orbit) == 6
        for sigma in permutations(range(1, 4)):
            assert orbit[sigma] == crystal_apply(sigma, t)


def test_lrt_sigma_keeps_cardinality_and_content():
    for n in range(1, 8):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                for nu in partitions(n - sum(mu)):
                    triple = LrTriple(lam, mu, nu)
                    base = enumerate_lrt(triple)
                    for sigma in permutations(range(1, len(nu) + 1)):
                        if len(nu) > 4:
                            break
                        images = lrt_sigma(triple, sigma)
                        assert len(set(images)) == len(base)
                        target = permute_sequence(sigma, nu)
                        for t in images:
                            assert tableau_content(t) + (0,) * (len(nu) - len(tableau_content(t))) == target
