"""Frank words, the Lascoux-Schutzenberger action on them, and the phi map.

Words are tuples of positive integers; a word's columns are its maximal
strictly decreasing factors.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from nclr.combinatorics import (
    Composition,
    Partition,
    Word,
    contains,
    sort_composition,
    transpose,
)
from nclr.tableaux import (
    Cell,
    SkewTableau,
    column_reading_word,
    forward_slide,
    from_cells,
    insertion_shape,
    reverse_slide,
)


class FrankWordError(ValueError):
    pass


def column_factorization(w: Sequence[int]) -> list[Word]:
    factors: list[list[int]] = []
    for x in w:
        if factors and factors[-1][-1] > x:
            factors[-1].append(x)
        else:
            factors.append([x])
    return [tuple(f) for f in factors]


def column_form(w: Sequence[int]) -> Composition:
    return tuple(len(f) for f in column_factorization(w))


def is_frank(w: Sequence[int]) -> bool:
    """``P(w)`` has the transposed shape of the sorted column form."""
    return insertion_shape(w) == transpose(sort_composition(column_form(w)))


def format_frank(w: Sequence[int]) -> str:
    """Pipe-separated columns, e.g. ``321|7621|5`` (letters up to 9)."""
    if any(x > 9 for x in w):
        raise ValueError("pipe notation needs single-digit letters")
    return "|".join("".join(str(x) for x in f) for f in column_factorization(w))


def parse_frank(text: str) -> Word:
    return tuple(int(ch) for ch in text if ch.isdigit())


# ---------------------------------------------------------------------------
# the involution on two-column words

def _two_column_cells(left: Sequence[int], right: Sequence[int], left_base: int, right_base: int) -> dict[Cell, int]:
    """Columns given top to bottom, placed starting above the given base rows."""
    cells = {}
    for r, v in enumerate(reversed(left), start=left_base + 1):
        cells[(r, 1)] = v
    for r, v in enumerate(reversed(right), start=right_base + 1):
        cells[(r, 2)] = v
    return cells


def _read_two_columns(cells: dict[Cell, int]) -> Word:
    left = [v for (r, c), v in sorted(cells.items(), reverse=True) if c == 1]
    right = [v for (r, c), v in sorted(cells.items(), reverse=True) if c == 2]
    return tuple(left + right)


def iota(w: Sequence[int]) -> Word:
    """Swap the column lengths of a two-column frank word by jeu de taquin.

    With column lengths ``(p, q)``, ``w`` reads a two-column tableau that is
    straight when ``p >= q`` and justified to the top of the ``q x 2``
    rectangle otherwise.  Slides inside the rectangle move it to the other
    position.
    """
    factors = column_factorization(w)
    if len(factors) != 2 or not is_frank(w):
        raise FrankWordError(f"{tuple(w)} is not a two-column frank word")
    left, right = factors
    p, q = len(left), len(right)
    if p >= q:
        cells = _two_column_cells(left, right, 0, 0)
        for top in range(q + 1, p + 1):
            reverse_slide(cells, (top, 2))
    else:
        cells = _two_column_cells(left, right, q - p, 0)
        for r in range(q - p, 0, -1):
            forward_slide(cells, (r, 1))
    result = _read_two_columns(cells)
    if column_form(result) != (q, p):
        raise FrankWordError(f"slides on {tuple(w)} did not produce column form {(q, p)}")
    return result


def iota_by_column_insertion(w: Sequence[int]) -> Word:
    """Independent route to ``iota`` for ``p < q``.

    Column-insert ``a_p, ..., a_1`` (the first column, bottom letter first)
    into the single column read by the second factor.
    """
    from nclr.tableaux import column_insert_into

    left, right = column_factorization(w)
    if len(left) >= len(right):
        raise ValueError("column insertion route needs a shorter first column")
    return column_reading_word(column_insert_into(right, tuple(reversed(left))))


def iota_by_search(w: Sequence[int]) -> Word:
    """Brute-force ``iota``: the unique two-column word with swapped column
    lengths, in the target position, and with the same insertion tableau."""
    from itertools import combinations

    from nclr.tableaux import insertion_tableau

    left, right = column_factorization(w)
    p, q = len(left), len(right)
    target = insertion_tableau(w)
    letters = sorted(w)
    hits = set()
    for chosen in combinations(range(len(letters)), q):
        first = sorted((letters[k] for k in chosen), reverse=True)
        second = sorted((letters[k] for k in range(len(letters)) if k not in chosen), reverse=True)
        if len(set(first)) != q or len(set(second)) != p:
            continue
        candidate = tuple(first) + tuple(second)
        if column_form(candidate) != (q, p):
            continue
        if insertion_tableau(candidate) == target:
            hits.add(candidate)
    if len(hits) != 1:
        raise FrankWordError(f"expected a unique image for {tuple(w)}, found {sorted(hits)}")
    return hits.pop()


# ---------------------------------------------------------------------------
# the symmetric group action

def frank_si(i: int, w: Sequence[int]) -> Word:
    """Apply ``iota`` to columns ``i`` and ``i+1`` and leave the rest alone."""
    factors = column_factorization(w)
    m = len(factors)
    if not 1 <= i < m:
        raise FrankWordError(f"s_{i} does not act on a {m}-column word")
    swapped = iota(factors[i - 1] + factors[i])
    result = tuple(x for f in factors[: i - 1] for x in f) + swapped + tuple(x for f in factors[i + 1:] for x in f)
    if len(column_factorization(result)) != m:
        raise FrankWordError(f"s_{i} merged columns of {tuple(w)}")
    return result


def frank_apply(word: Sequence[int], w: Sequence[int]) -> Word:
    """``s_{i_1} ... s_{i_k}(w)`` for a generator word; the last letter acts first."""
    out = tuple(w)
    for i in reversed(word):
        out = frank_si(i, out)
    return out


# ---------------------------------------------------------------------------
# compatibility with a skew shape and the phi map

def _padded(seq: Sequence[int], n: int) -> list[int]:
    return list(seq) + [0] * (n - len(seq))


def is_compatible(w: Sequence[int], lam: Partition, mu: Partition) -> bool:
    """Every suffix content added to ``mu^t`` is a partition, ending at ``lam^t``."""
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    width = max([lam[0] if lam else 0, *w, 0])
    heights = _padded(transpose(mu), width + 1)
    for x in reversed(w):
        heights[x - 1] += 1
        if x > 1 and heights[x - 1] > heights[x - 2]:
            return False
    return heights == _padded(transpose(lam), width + 1)


def phi(w: Sequence[int], lam: Partition, mu: Partition) -> SkewTableau:
    """Peel horizontal strips off ``lam``: column ``i`` of ``w`` marks the
    boxes removed at step ``i``, which are filled with ``m + 1 - i``."""
    if not is_compatible(w, lam, mu):
        raise ValueError(f"{tuple(w)} is not {lam}/{mu}-compatible")
    factors = column_factorization(w)
    m = len(factors)
    heights = _padded(transpose(lam), (lam[0] if lam else 0) + 1)
    cells: dict[Cell, int] = {}
    for step, factor in enumerate(factors, start=1):
        for column in factor:
            cells[(heights[column - 1], column)] = m + 1 - step
            heights[column - 1] -= 1
    return from_cells(mu, lam, cells)


def enumerate_lr_frank(lam: Partition, mu: Partition, alpha: Composition) -> list[Word]:
    """Frank words of column form ``alpha`` that are ``lam/mu``-compatible.

    Words are grown from the right so that every suffix stays compatible;
    the last letter of each column must not exceed the first letter of the
    column after it, so the factorization keeps ``alpha``'s shape.
    """
    lam, mu, alpha = tuple(lam), tuple(mu), tuple(alpha)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if sum(alpha) != sum(lam) - sum(mu):
        raise ValueError("|alpha| must equal |lam| - |mu|")
    width = lam[0] if lam else 0
    target = _padded(transpose(lam), width + 1)
    heights = _padded(transpose(mu), width + 1)
    found: list[Word] = []
    suffix: list[int] = []

    def grow(column: int, filled: int) -> Iterator[None]:
        """Prepend letters to the current column (index ``column`` of ``alpha``)."""
        if column < 0:
            yield None
            return
        if filled == alpha[column]:
            yield from grow(column - 1, 0)
            return
        if filled == 0:
            # bottom letter of this column; must not exceed the next column's top
            low = 1
            high = suffix[0] if suffix else width
        else:
            low = suffix[0] + 1
            high = width
        for x in range(low, high + 1):
            if heights[x - 1] >= target[x - 1]:
                continue
            if x > 1 and heights[x - 1] + 1 > heights[x - 2]:
                continue
            heights[x - 1] += 1
            suffix.insert(0, x)
            yield from grow(column, filled + 1)
            suffix.pop(0)
            heights[x - 1] -= 1

    for _ in grow(len(alpha) - 1, 0):
        word = tuple(suffix)
        if column_form(word) == alpha and is_frank(word):
            found.append(word)
    return sorted(found)


def frank_words(alpha: Composition, alphabet: int) -> list[Word]:
    """All frank words with column form ``alpha`` over ``1..alphabet``."""
    from itertools import combinations, product

    columns = [list(combinations(range(alphabet, 0, -1), part)) for part in alpha]
    out = []
    for choice in product(*columns):
        w = tuple(x for col in choice for x in col)
        if column_form(w) == tuple(alpha) and is_frank(w):
            out.append(w)
    return sorted(out)
