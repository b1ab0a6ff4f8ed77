"""Skew Young tableaux in French convention.

Row 1 is the bottom row.  A :class:`SkewTableau` stores its inner partition
and, for each row of the outer shape, the entries of the skew part of that
row read left to right.  Cells are addressed ``(row, column)``, both 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import chain
from typing import Literal, Sequence

from nclr.combinatorics import (
    Composition,
    Partition,
    Word,
    composition_from_set,
    contains,
    is_partition,
    sort_composition,
)

Cell = tuple[int, int]


@dataclass(frozen=True)
class SkewTableau:
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    @cached_property
    def outer(self) -> Partition:
        return tuple(self.inner_part(r) + len(row) for r, row in enumerate(self.rows, start=1))

    def inner_part(self, r: int) -> int:
        return self.inner[r - 1] if r <= len(self.inner) else 0

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @cached_property
    def cells(self) -> dict[Cell, int]:
        out = {}
        for r, row in enumerate(self.rows, start=1):
            start = self.inner_part(r)
            for k, value in enumerate(row, start=1):
                out[(r, start + k)] = value
        return out

    def columns(self) -> dict[int, list[int]]:
        """Column index to its entries, bottom to top."""
        cols: dict[int, list[int]] = {}
        for (r, c), value in sorted(self.cells.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            cols.setdefault(c, []).append(value)
        return cols

    def is_straight(self) -> bool:
        return not self.inner

    def __str__(self) -> str:
        return to_text(self)


def from_cells(inner: Sequence[int], outer: Sequence[int], cells: dict[Cell, int]) -> SkewTableau:
    inner, outer = tuple(inner), tuple(outer)
    rows = []
    for r, length in enumerate(outer, start=1):
        start = inner[r - 1] if r <= len(inner) else 0
        rows.append(tuple(cells[(r, c)] for c in range(start + 1, length + 1)))
    return SkewTableau(inner, tuple(rows))


def straight(rows: Sequence[Sequence[int]]) -> SkewTableau:
    return SkewTableau((), tuple(tuple(row) for row in rows))


def empty_tableau(inner: Sequence[int] = ()) -> SkewTableau:
    inner = tuple(inner)
    return SkewTableau(inner, tuple(() for _ in inner))


def shape_cells(inner: Sequence[int], outer: Sequence[int]) -> list[Cell]:
    cells = []
    for r, length in enumerate(outer, start=1):
        start = inner[r - 1] if r <= len(inner) else 0
        cells.extend((r, c) for c in range(start + 1, length + 1))
    return cells


def is_semistandard(t: SkewTableau) -> bool:
    """Partition shapes with ``inner <= outer``, weak rows and strict columns."""
    outer = t.outer
    if not is_partition(outer) or not is_partition(t.inner) or not contains(outer, t.inner):
        return False
    if len(t.inner) > len(t.rows):
        return False
    cells = t.cells
    for (r, c), value in cells.items():
        if value < 1:
            return False
        right = cells.get((r, c + 1))
        if right is not None and right < value:
            return False
        above = cells.get((r + 1, c))
        if above is not None and above <= value:
            return False
    return True


def is_standard(t: SkewTableau) -> bool:
    return is_semistandard(t) and sorted(t.cells.values()) == list(range(1, t.size + 1))


def tableau_content(t: SkewTableau) -> tuple[int, ...]:
    values = list(t.cells.values())
    if not values:
        return ()
    m = max(values)
    counts = [0] * m
    for v in values:
        counts[v - 1] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# reading words

@lru_cache(maxsize=None)
def reading_order(inner: Partition, outer: Partition) -> tuple[Cell, ...]:
    """Cells in column reading order: columns left to right, each top to bottom."""
    cells = shape_cells(inner, outer)
    return tuple(sorted(cells, key=lambda rc: (rc[1], -rc[0])))


def column_reading_word(t: SkewTableau) -> Word:
    cells = t.cells
    return tuple(cells[rc] for rc in reading_order(t.inner, t.outer))


def with_reading_word(t: SkewTableau, word: Sequence[int]) -> SkewTableau:
    """The filling of ``t``'s shape whose column reading word is ``word``."""
    order = reading_order(t.inner, t.outer)
    if len(order) != len(word):
        raise ValueError("word length does not match the shape")
    return from_cells(t.inner, t.outer, dict(zip(order, word)))


def standardize_tableau(t: SkewTableau) -> SkewTableau:
    """Relabel each letter's cells left to right with consecutive integers."""
    ordered = sorted(t.cells.items(), key=lambda kv: (kv[1], kv[0][1]))
    relabelled = {rc: k for k, (rc, _) in enumerate(ordered, start=1)}
    return from_cells(t.inner, t.outer, relabelled)


def destandardize(t: SkewTableau, cont: Sequence[int]) -> SkewTableau:
    """Inverse of standardization for a known content."""
    letter_of = list(chain.from_iterable([i] * m for i, m in enumerate(cont, start=1)))
    if len(letter_of) != t.size:
        raise ValueError("content size does not match the tableau")
    return from_cells(t.inner, t.outer, {rc: letter_of[v - 1] for rc, v in t.cells.items()})


def column_growth_word(t: SkewTableau) -> Word:
    """Columns of the entries ``n, n-1, ..., 1`` of the standardization."""
    position = {v: c for (r, c), v in standardize_tableau(t).cells.items()}
    return tuple(position[v] for v in range(t.size, 0, -1))


def descent_set(t: SkewTableau) -> set[int]:
    if not is_standard(t):
        raise ValueError("descent sets are defined for standard tableaux only")
    row_of = {v: r for (r, c), v in t.cells.items()}
    return {i for i in range(1, t.size) if row_of[i + 1] > row_of[i]}


def descent_composition(t: SkewTableau) -> Composition:
    return composition_from_set(descent_set(t), t.size)


# ---------------------------------------------------------------------------
# Robinson-Schensted

def _rows_to_tableau(rows: list[list[int]]) -> SkewTableau:
    return straight(rows)


def _columns_to_tableau(cols: list[list[int]]) -> SkewTableau:
    height = len(cols[0]) if cols else 0
    return straight([[col[r] for col in cols if len(col) > r] for r in range(height)])


def _row_insert(rows: list[list[int]], x: int) -> int:
    """Row-insert ``x`` in place; returns the (0-based) row that grew."""
    from bisect import bisect_right

    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r
        row = rows[r]
        k = bisect_right(row, x)
        if k == len(row):
            row.append(x)
            return r
        row[k], x = x, row[k]
        r += 1


def _column_insert(cols: list[list[int]], x: int) -> int:
    """Column-insert ``x`` in place; returns the (0-based) column that grew."""
    from bisect import bisect_left

    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            return c
        col = cols[c]
        k = bisect_left(col, x)
        if k == len(col):
            col.append(x)
            return c
        col[k], x = x, col[k]
        c += 1


def rs_insert(w: Sequence[int], scheme: Literal["row", "column"] = "row") -> tuple[SkewTableau, SkewTableau]:
    """Insertion and recording tableaux of ``w``.

    Row insertion bumps the leftmost entry strictly larger than the new
    letter; column insertion bumps the lowest entry weakly larger.  ``Q``
    records the order in which cells were created.
    """
    if scheme == "row":
        rows: list[list[int]] = []
        q: list[list[int]] = []
        for step, x in enumerate(w, start=1):
            r = _row_insert(rows, x)
            if r == len(q):
                q.append([])
            q[r].append(step)
        return _rows_to_tableau(rows), _rows_to_tableau(q)
    if scheme == "column":
        cols: list[list[int]] = []
        qcols: list[list[int]] = []
        for step, x in enumerate(w, start=1):
            c = _column_insert(cols, x)
            if c == len(qcols):
                qcols.append([])
            qcols[c].append(step)
        return _columns_to_tableau(cols), _columns_to_tableau(qcols)
    raise ValueError(f"unknown insertion scheme {scheme!r}")


def insertion_tableau(w: Sequence[int]) -> SkewTableau:
    rows: list[list[int]] = []
    for x in w:
        _row_insert(rows, x)
    return _rows_to_tableau(rows)


def insertion_shape(w: Sequence[int]) -> Partition:
    rows: list[list[int]] = []
    for x in w:
        _row_insert(rows, x)
    return tuple(len(row) for row in rows)


def column_insert_into(column_word: Sequence[int], letters: Sequence[int]) -> SkewTableau:
    """Start from the single column with reading word ``column_word`` and
    column-insert ``letters`` in the given order."""
    cols = [sorted(column_word)]
    for x in letters:
        _column_insert(cols, x)
    return _columns_to_tableau(cols)


# ---------------------------------------------------------------------------
# jeu de taquin

def jdt_rectify(t: SkewTableau) -> SkewTableau:
    """Straight-shape representative of ``t``'s Knuth class, ``P(crw(t))``."""
    return insertion_tableau(column_reading_word(t))


def forward_slide(cells: dict[Cell, int], hole: Cell) -> Cell:
    """Slide an empty inner corner outwards through ``cells`` (in place).

    Returns where the hole ends up.  The smaller of the neighbours above and
    to the right moves in; on a tie the one above moves so columns stay strict.
    """
    r, c = hole
    while True:
        above = cells.get((r + 1, c))
        right = cells.get((r, c + 1))
        if above is None and right is None:
            return (r, c)
        if above is not None and (right is None or above <= right):
            cells[(r, c)] = cells.pop((r + 1, c))
            r += 1
        else:
            cells[(r, c)] = cells.pop((r, c + 1))
            c += 1


def reverse_slide(cells: dict[Cell, int], hole: Cell) -> Cell:
    """Slide an empty outer corner inwards through ``cells`` (in place)."""
    r, c = hole
    while True:
        below = cells.get((r - 1, c))
        left = cells.get((r, c - 1))
        if below is None and left is None:
            return (r, c)
        if below is not None and (left is None or below >= left):
            cells[(r, c)] = cells.pop((r - 1, c))
            r -= 1
        else:
            cells[(r, c)] = cells.pop((r, c - 1))
            c -= 1


def _shape_of(cells: dict[Cell, int]) -> tuple[Partition, Partition]:
    """Inner and outer partitions of a set of cells forming a skew shape."""
    if not cells:
        return (), ()
    height = max(r for r, _ in cells)
    outer, inner = [], []
    for r in range(1, height + 1):
        cols = [c for rr, c in cells if rr == r]
        outer.append(max(cols) if cols else 0)
        inner.append(min(cols) - 1 if cols else 0)
    while inner and inner[-1] == 0:
        inner.pop()
    return tuple(inner), tuple(outer)


def tableau_from_cell_map(cells: dict[Cell, int]) -> SkewTableau:
    inner, outer = _shape_of(cells)
    if not is_partition(outer) or not is_partition(inner) or not contains(outer, inner):
        raise ValueError("cells do not form a skew shape")
    return from_cells(inner, outer, cells)


def rectify_by_slides(t: SkewTableau) -> SkewTableau:
    """Rectification through explicit forward slides into inner corners."""
    cells = dict(t.cells)
    inner = list(t.inner)
    while inner:
        r = len(inner)
        # topmost row of the inner shape always ends in a corner
        corner = (r, inner[-1])
        forward_slide(cells, corner)
        inner[-1] -= 1
        if inner[-1] == 0:
            inner.pop()
    return tableau_from_cell_map(cells) if cells else straight([])


# ---------------------------------------------------------------------------
# transposition and evacuation

def transpose_tableau(t: SkewTableau) -> SkewTableau:
    cells = {(c, r): v for (r, c), v in t.cells.items()}
    from nclr.combinatorics import transpose

    return from_cells(transpose(t.inner), transpose(t.outer), cells)


def evacuation(t: SkewTableau) -> SkewTableau:
    """Schutzenberger evacuation of a standard straight-shape tableau.

    Repeatedly delete the smallest entry, slide the hole out, and label the
    cell where it ends with ``n, n-1, ..., 1``.
    """
    if t.inner or not is_standard(t):
        raise ValueError("evacuation needs a standard tableau of straight shape")
    cells = dict(t.cells)
    result: dict[Cell, int] = {}
    for label in range(t.size, 0, -1):
        smallest = min(cells, key=cells.__getitem__)
        del cells[smallest]
        result[forward_slide(cells, smallest)] = label
    return from_cells((), t.outer, result)


def superstandard_tableau(alpha: Sequence[int]) -> SkewTableau:
    """The standard tableau of shape ``sort(alpha)`` with descent composition ``alpha``.

    Column ``c`` holds the ``c``-th entry of every block of ``alpha`` that is
    at least ``c`` long, sorted upwards.
    """
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("the empty composition has no superstandard tableau")
    starts, total = [], 0
    for part in alpha:
        starts.append(total + 1)
        total += part
    lam = sort_composition(alpha)
    cells = {}
    for c in range(1, lam[0] + 1):
        column = sorted(s + c - 1 for s, part in zip(starts, alpha) if part >= c)
        for r, value in enumerate(column, start=1):
            cells[(r, c)] = value
    return from_cells((), lam, cells)


# ---------------------------------------------------------------------------
# enumeration helpers

def semistandard_tableaux(inner: Sequence[int], outer: Sequence[int], max_entry: int):
    """All semistandard fillings of ``outer / inner`` with entries ``<= max_entry``."""
    inner, outer = tuple(inner), tuple(outer)
    order = sorted(shape_cells(inner, outer), key=lambda rc: (rc[0], rc[1]))
    cells: dict[Cell, int] = {}

    def rec(k: int):
        if k == len(order):
            yield from_cells(inner, outer, cells)
            return
        r, c = order[k]
        low = max(cells.get((r, c - 1), 1), cells.get((r - 1, c), 0) + 1)
        for v in range(low, max_entry + 1):
            cells[(r, c)] = v
            yield from rec(k + 1)
        cells.pop((r, c), None)

    yield from rec(0)


def standard_tableaux(shape: Sequence[int], inner: Sequence[int] = ()):
    """All standard fillings of ``shape / inner``."""
    inner, shape = tuple(inner), tuple(shape)
    n = sum(shape) - sum(inner)
    current = list(inner) + [0] * (len(shape) - len(inner))
    cells: dict[Cell, int] = {}

    def rec(k: int):
        if k > n:
            yield from_cells(inner, shape, cells)
            return
        for r in range(len(shape)):
            if current[r] < shape[r] and (r == 0 or current[r - 1] > current[r]):
                current[r] += 1
                cells[(r + 1, current[r])] = k
                yield from rec(k + 1)
                del cells[(r + 1, current[r])]
                current[r] -= 1

    yield from rec(1)


def normalized_skew_shapes(n: int) -> list[tuple[Partition, Partition]]:
    """Skew shapes ``(outer, inner)`` of size ``n`` without empty rows or columns.

    Deleting an empty row or column of a skew shape leaves the column
    reading word and the tableau conditions unchanged, so these shapes
    represent every skew shape of size ``n``.
    """
    from nclr.combinatorics import transpose

    out = []

    def rec(lam: list[int], mu: list[int], left: int):
        if left == 0:
            lt = transpose(tuple(lam))
            mt = transpose(tuple(m for m in mu if m))
            if all(l > (mt[j] if j < len(mt) else 0) for j, l in enumerate(lt)):
                out.append((tuple(lam), tuple(m for m in mu if m)))
            return
        top_l = lam[-1] if lam else n
        top_m = mu[-1] if mu else n
        for m in range(min(top_m, top_l - 1), -1, -1):
            for l in range(m + 1, min(top_l, m + left) + 1):
                rec(lam + [l], mu + [m], left - (l - m))

    if n == 0:
        return [((), ())]
    rec([], [], n)
    return sorted(out)


def to_text(t: SkewTableau) -> str:
    """Rows bottom to top, entries space separated, inner cells as ``.``."""
    lines = []
    for r, row in enumerate(t.rows, start=1):
        lines.append(" ".join(["."] * t.inner_part(r) + [str(v) for v in row]))
    return "\n".join(lines)
