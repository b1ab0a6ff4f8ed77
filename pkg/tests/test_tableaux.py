from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from nclr.combinatorics import partitions, reverse, standardize_word
from nclr.tableaux import (
    SkewTableau,
    column_growth_word,
    column_insert_into,
    column_reading_word,
    descent_composition,
    descent_set,
    destandardize,
    evacuation,
    insertion_tableau,
    is_semistandard,
    is_standard,
    jdt_rectify,
    normalized_skew_shapes,
    rectify_by_slides,
    rs_insert,
    semistandard_tableaux,
    standard_tableaux,
    standardize_tableau,
    straight,
    superstandard_tableau,
    tableau_content,
    transpose_tableau,
    with_reading_word,
)

from conftest import RUNNING_IMAGES, RUNNING_LR, STAN_SOURCE, STAN_TARGET
from oracles import all_fillings, descent_composition_of, reading_word_of, skew_cells, standard_fillings


def all_small_tableaux(max_size, alphabet):
    for n in range(max_size + 1):
        for outer, inner in normalized_skew_shapes(n):
            yield from semistandard_tableaux(inner, outer, alphabet)


# ---------------------------------------------------------------------------
# insertion

def test_row_insertion_example():
    p, q = rs_insert((4, 3, 2, 3, 2, 6, 5, 3, 1))
    assert p.rows == ((1, 2, 3), (2, 3, 5), (3, 6), (4,))
    assert q.outer == p.outer and is_standard(q)


def test_insertion_small_cases():
    p, q = rs_insert(())
    assert p.rows == () and q.rows == ()
    p, q = rs_insert((2, 1))
    assert p.rows == ((1,), (2,)) and q.rows == ((1,), (2,))


def test_insertion_is_a_bijection_on_permutations():
    for n in range(1, 6):
        pairs = {rs_insert(p) for p in permutations(range(1, n + 1))}
        assert len(pairs) == len(list(permutations(range(n))))
        for p, q in pairs:
            assert is_standard(p) and is_standard(q) and p.outer == q.outer


def test_column_insertion_reads_the_word_backwards():
    # column inserting w left to right builds the row insertion tableau of w reversed
    for n in range(7):
        for w in product(range(1, 4), repeat=n):
            pc, qc = rs_insert(w, "column")
            assert pc == insertion_tableau(reverse(w))
            assert qc.outer == pc.outer and is_standard(qc)


def test_column_insert_into_example():
    # inserting 1, 2, 6 into the column 76432
    assert column_reading_word(column_insert_into((7, 6, 4, 3, 2), (1, 2, 6))) == (7, 6, 4, 2, 1, 6, 3, 2)


def _knuth_moves(w):
    """Elementary Knuth moves: yzx <-> yxz for x < y <= z, xzy <-> zxy for x <= y < z."""
    for i in range(len(w) - 2):
        a, b, c = w[i:i + 3]
        if c < a <= b or b < a <= c:
            yield w[:i + 1] + (c, b) + w[i + 3:]
        if a <= c < b or b <= c < a:
            yield w[:i] + (b, a) + w[i + 2:]


def test_knuth_moves_keep_p():
    for n in range(3, 7):
        for w in product(range(1, 4), repeat=n):
            p = insertion_tableau(w)
            for v in _knuth_moves(w):
                assert insertion_tableau(v) == p, (w, v)


# ---------------------------------------------------------------------------
# reading words, standardization, descents

def test_reading_word_examples():
    assert column_reading_word(straight([(1, 1, 2)])) == (1, 1, 2)
    assert column_reading_word(RUNNING_LR[0]) == (2, 1, 3, 2, 2, 1, 1, 1)
    jdt_left = SkewTableau((), ((1, 2), (2, 3), (4, 6), (6,), (7,)))
    assert column_reading_word(jdt_left) == (7, 6, 4, 2, 1, 6, 3, 2)


def test_reading_word_matches_definition():
    for t in all_small_tableaux(5, 3):
        assert column_reading_word(t) == reading_word_of(t.cells)
        assert with_reading_word(t, column_reading_word(t)) == t


def test_standardization_example():
    assert standardize_tableau(STAN_SOURCE) == STAN_TARGET
    assert destandardize(STAN_TARGET, tableau_content(STAN_SOURCE)) == STAN_SOURCE
    assert standardize_tableau(STAN_TARGET) == STAN_TARGET
    assert standardize_tableau(straight([(1, 1, 2)])).rows == ((1, 2, 3),)


def test_standardization_commutes_with_reading():
    for t in all_small_tableaux(5, 3):
        s = standardize_tableau(t)
        assert is_standard(s) and s.outer == t.outer and s.inner == t.inner
        assert column_reading_word(s) == standardize_word(column_reading_word(t))
        assert destandardize(s, tableau_content(t)) == t


def test_growth_word_examples():
    assert column_growth_word(STAN_SOURCE) == (7, 6, 5, 6, 4, 3, 2, 1, 5, 3, 1)
    assert column_growth_word(straight([(1,)])) == (1,)
    assert column_growth_word(RUNNING_IMAGES[0]) == (3, 2, 1, 7, 6, 2, 1, 5)


def test_descent_examples():
    assert descent_set(STAN_TARGET) == {3, 8}
    assert descent_set(straight([(1, 2, 3, 4)])) == set()
    assert descent_set(straight([(1,), (2,), (3,)])) == {1, 2}
    with pytest.raises(ValueError):
        descent_set(straight([(1, 1)]))


def test_descent_composition_matches_definition():
    for shape in [(3, 2), (2, 2, 1), (4, 1, 1)]:
        for filling in standard_fillings(shape):
            t = SkewTableau((), tuple(tuple(filling[(r, c)] for c in range(1, shape[r - 1] + 1)) for r in range(1, len(shape) + 1)))
            assert descent_composition(t) == descent_composition_of(filling, sum(shape))


# ---------------------------------------------------------------------------
# rectification

def test_jdt_two_column_rectification():
    # columns 621 and 76432 inside the 5 x 2 rectangle
    skew = SkewTableau((1, 1), ((2,), (3,), (1, 4), (2, 6), (6, 7)))
    assert column_reading_word(skew) == (6, 2, 1, 7, 6, 4, 3, 2)
    rect = jdt_rectify(skew)
    assert rect.rows == ((1, 2), (2, 3), (4, 6), (6,), (7,))
    assert column_reading_word(rect) == (7, 6, 4, 2, 1, 6, 3, 2)
    assert rectify_by_slides(skew) == rect


def test_rectification_of_crystal_image():
    rect = jdt_rectify(standardize_tableau(RUNNING_IMAGES[0]))
    assert rect.rows == ((1, 3, 4, 5), (2, 7, 8), (6,))


def test_jdt_matches_insertion():
    for t in all_small_tableaux(6, 3):
        rect = jdt_rectify(t)
        assert rect == insertion_tableau(column_reading_word(t))
        assert rectify_by_slides(t) == rect
        assert rect.is_straight() and is_semistandard(rect)


@pytest.mark.slow
def test_jdt_matches_insertion_size_eight():
    for n in (7, 8):
        for outer, inner in normalized_skew_shapes(n):
            if not inner:
                continue
            for t in semistandard_tableaux(inner, outer, 3):
                assert rectify_by_slides(t) == insertion_tableau(column_reading_word(t))


# ---------------------------------------------------------------------------
# evacuation

def test_evacuation_small():
    assert evacuation(straight([(1,)])) == straight([(1,)])
    assert evacuation(straight([(1,), (2,)])) == straight([(1,), (2,)])
    with pytest.raises(ValueError):
        evacuation(SkewTableau((1,), ((1,),)))
    with pytest.raises(ValueError):
        evacuation(straight([(1, 1)]))


def test_evacuation_of_growth_word_recording_tableau():
    _, q = rs_insert(column_growth_word(RUNNING_IMAGES[0]))
    assert q.rows == ((1, 4, 8), (2, 5), (3, 6), (7,))
    assert transpose_tableau(evacuation(q)).rows == ((1, 3, 4, 5), (2, 7, 8), (6,))


def test_evacuation_involution_and_descents():
    for n in range(1, 8):
        for lam in partitions(n):
            for t in standard_tableaux(lam):
                e = evacuation(t)
                assert is_standard(e) and e.outer == t.outer
                assert evacuation(e) == t
                assert descent_set(e) == {n - i for i in descent_set(t)}


def test_evacuation_against_reversal():
    # Q(reverse w) is the transposed evacuation of Q(w) for permutations
    for n in range(1, 7):
        for w in permutations(range(1, n + 1)):
            _, q = rs_insert(w)
            _, q_rev = rs_insert(reverse(w))
            assert q_rev == transpose_tableau(evacuation(q))


def test_rect_stan_equals_transposed_evacuation():
    for n in range(1, 8):
        for lam in partitions(n):
            for t in standard_tableaux(lam):
                _, q = rs_insert(column_growth_word(t))
                assert jdt_rectify(standardize_tableau(t)) == transpose_tableau(evacuation(q))


def test_rect_stan_equals_transposed_evacuation_for_skew():
    for t in all_small_tableaux(6, 3):
        if t.size == 0:
            continue
        _, q = rs_insert(column_growth_word(t))
        assert jdt_rectify(standardize_tableau(t)) == transpose_tableau(evacuation(q))


# ---------------------------------------------------------------------------
# superstandard tableaux

def test_superstandard_examples():
    assert superstandard_tableau((3,)).rows == ((1, 2, 3),)
    assert superstandard_tableau((1, 1)).rows == ((1,), (2,))
    t = superstandard_tableau((1, 4, 3))
    assert t.rows == ((1, 3, 4, 5), (2, 7, 8), (6,))
    assert [t.cells[(r, 1)] for r in (1, 2, 3)] == [1, 2, 6]
    with pytest.raises(ValueError):
        superstandard_tableau(())


def test_superstandard_is_unique_by_search():
    from nclr.combinatorics import compositions, sort_composition

    for n in range(1, 7):
        for alpha in compositions(n):
            shape = sort_composition(alpha)
            hits = [f for f in standard_fillings(shape) if descent_composition_of(f, n) == alpha]
            assert len(hits) == 1
            assert superstandard_tableau(alpha).cells == hits[0]


# ---------------------------------------------------------------------------
# enumeration helpers

def test_semistandard_enumeration_against_brute_force():
    for n in range(5):
        for outer, inner in normalized_skew_shapes(n):
            got = sorted(tuple(sorted(t.cells.items())) for t in semistandard_tableaux(inner, outer, 3))
            want = sorted(tuple(sorted(f.items())) for f in all_fillings(outer, inner, 3))
            assert got == want


def test_normalized_shape_counts():
    assert [len(normalized_skew_shapes(n)) for n in range(1, 7)] == [1, 3, 9, 28, 87, 272]
    for n in range(1, 6):
        for outer, inner in normalized_skew_shapes(n):
            cells = skew_cells(outer, inner)
            assert len(cells) == n
            assert {r for r, _ in cells} == set(range(1, len(outer) + 1))
            assert {c for _, c in cells} == set(range(1, outer[0] + 1))


@given(st.lists(st.integers(1, 5), max_size=10))
def test_insertion_tableau_is_semistandard(w):
    p, q = rs_insert(tuple(w))
    assert is_semistandard(p) and is_standard(q)
    assert sorted(column_reading_word(p)) == sorted(w)
