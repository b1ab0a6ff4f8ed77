"""Composition tableaux, the rho bijection to Young tableaux, and box adding.

A :class:`CompositionTableau` mirrors :class:`~nclr.tableaux.SkewTableau`:
``inner`` is a composition ``beta`` and ``rows[r-1]`` lists the entries of
row ``r`` (bottom row first) to the right of ``beta_r``.  The outer shape is
``gamma_r = beta_r + len(rows[r-1])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from nclr.combinatorics import Composition, Word, is_composition, lc_leq, sort_composition
from nclr.tableaux import (
    Cell,
    SkewTableau,
    from_cells,
    jdt_rectify,
)

INFINITY = float("inf")


@dataclass(frozen=True)
class CompositionTableau:
    inner: Composition
    rows: tuple[tuple[int, ...], ...]

    def inner_part(self, r: int) -> int:
        return self.inner[r - 1] if r <= len(self.inner) else 0

    @cached_property
    def outer(self) -> Composition:
        return tuple(self.inner_part(r) + len(row) for r, row in enumerate(self.rows, start=1))

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

    def __str__(self) -> str:
        lines = []
        for r, row in enumerate(self.rows, start=1):
            lines.append(" ".join(["."] * self.inner_part(r) + [str(v) for v in row]))
        return "\n".join(lines)


def ct_from_cells(inner: Sequence[int], outer: Sequence[int], cells: dict[Cell, int]) -> CompositionTableau:
    inner, outer = tuple(inner), tuple(outer)
    rows = []
    for r, length in enumerate(outer, start=1):
        start = inner[r - 1] if r <= len(inner) else 0
        rows.append(tuple(cells[(r, c)] for c in range(start + 1, length + 1)))
    return CompositionTableau(inner, tuple(rows))


def ct_reading_word(t: CompositionTableau) -> Word:
    """Each column's entries in decreasing order, columns left to right."""
    cols: dict[int, list[int]] = {}
    for (r, c), v in t.cells.items():
        cols.setdefault(c, []).append(v)
    return tuple(v for c in sorted(cols) for v in sorted(cols[c], reverse=True))


def ct_content(t: CompositionTableau) -> tuple[int, ...]:
    values = list(t.cells.values())
    if not values:
        return ()
    return tuple(values.count(i) for i in range(1, max(values) + 1))


# ---------------------------------------------------------------------------
# validity

def _triple_violations(outer: Sequence[int], inner: Sequence[int], value_of) -> Iterator[tuple]:
    """Yield every triple ``(a, b, c)`` of the triple rule.

    ``a`` sits in row ``j`` column ``k``, ``b`` right of it, and ``c`` in a
    lower row ``i`` below ``b``.  Inner cells read as 0 and a missing ``b``
    as infinity; only triples whose ``c`` is a filled cell are produced.
    """
    nrows = len(outer)
    for j in range(2, nrows + 1):
        beta_j = inner[j - 1] if j <= len(inner) else 0
        for i in range(1, j):
            beta_i = inner[i - 1] if i <= len(inner) else 0
            for k in range(max(1, beta_i), min(outer[j - 1], outer[i - 1] - 1) + 1):
                a = 0 if k <= beta_j else value_of((j, k))
                if k + 1 > outer[j - 1]:
                    b = INFINITY
                elif k + 1 <= beta_j:
                    b = 0
                else:
                    b = value_of((j, k + 1))
                c = value_of((i, k + 1))
                yield a, b, c


def validate_ct(t: CompositionTableau) -> bool:
    """Row, first-column and triple conditions plus ``inner <= outer`` in L_c."""
    inner, outer = t.inner, t.outer
    if not is_composition(inner) or not is_composition(outer) or len(inner) > len(outer):
        return False
    if not lc_leq(inner, outer):
        return False
    for row in t.rows:
        if any(row[k] > row[k + 1] for k in range(len(row) - 1)) or any(v < 1 for v in row):
            return False
    first_column = [t.cells[(r, 1)] for r in range(1, len(outer) + 1) if (r, 1) in t.cells]
    if any(first_column[k] >= first_column[k + 1] for k in range(len(first_column) - 1)):
        return False
    cells = t.cells
    for a, b, c in _triple_violations(outer, inner, cells.__getitem__):
        if a <= c and not b < c:
            return False
    return True


def canonical_ct(alpha: Sequence[int]) -> CompositionTableau:
    """Row ``i`` holds the next ``alpha_i`` consecutive integers."""
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("canonical tableau of the empty composition is undefined")
    rows, start = [], 1
    for part in alpha:
        rows.append(tuple(range(start, start + part)))
        start += part
    return CompositionTableau((), tuple(rows))


# ---------------------------------------------------------------------------
# rho and its inverse

def rho(t: CompositionTableau) -> SkewTableau:
    """Sort each column upwards and stack it on the column of ``sort(beta)``."""
    mu = sort_composition(t.inner)
    cols: dict[int, list[int]] = {}
    for (r, c), v in t.cells.items():
        cols.setdefault(c, []).append(v)
    cells: dict[Cell, int] = {}
    for c, values in cols.items():
        base = sum(1 for part in mu if part >= c)
        for offset, v in enumerate(sorted(values), start=1):
            cells[(base + offset, c)] = v
    if not cells:
        return SkewTableau(mu, tuple(() for _ in mu))
    height = max(r for r, _ in cells)
    height = max(height, len(mu))
    outer = []
    for r in range(1, height + 1):
        row_cols = [c for rr, c in cells if rr == r]
        start = mu[r - 1] if r <= len(mu) else 0
        if row_cols and (min(row_cols) != start + 1 or max(row_cols) - min(row_cols) + 1 != len(row_cols)):
            raise ValueError("not a composition tableau: columns do not stack into a skew shape")
        outer.append(start + len(row_cols))
    result = from_cells(mu, outer, cells)
    from nclr.tableaux import is_semistandard

    if not is_semistandard(result):
        raise ValueError("not a composition tableau: rho image is not a Young tableau")
    return result


def rho_inverse(t: SkewTableau, beta: Sequence[int] = ()) -> CompositionTableau:
    """Rebuild the composition tableau of inner shape ``beta`` column by column.

    The first column goes on top of ``beta`` in increasing order.  Each later
    column is placed smallest entry first, always into the highest row whose
    current end is directly to the left and either belongs to ``beta`` or
    holds an entry no larger than the one being placed.
    """
    beta = tuple(beta)
    if t.inner != sort_composition(beta):
        raise ValueError(f"inner shape {t.inner} is not sort({beta})")
    cols = t.columns()
    first = sorted(cols.get(1, []))
    nrows = len(beta) + len(first)
    length = [beta[r] if r < len(beta) else 0 for r in range(nrows)]
    cells: dict[Cell, int] = {}
    for offset, v in enumerate(first):
        r = len(beta) + offset + 1
        cells[(r, 1)] = v
        length[r - 1] = 1
    last = max(cols) if cols else 0
    for c in range(2, last + 1):
        for v in sorted(cols.get(c, [])):
            for r in range(nrows, 0, -1):
                if length[r - 1] != c - 1:
                    continue
                beta_r = beta[r - 1] if r <= len(beta) else 0
                if beta_r == c - 1 or cells[(r, c - 1)] <= v:
                    cells[(r, c)] = v
                    length[r - 1] = c
                    break
            else:
                raise ValueError(f"no row can take entry {v} in column {c}")
    return ct_from_cells(beta, tuple(length), cells)


def rectify_ct(t: CompositionTableau) -> CompositionTableau:
    return rho_inverse(jdt_rectify(rho(t)), ())


# ---------------------------------------------------------------------------
# box adding operators

def box_add(i: int, alpha: Sequence[int]) -> Composition:
    """The cover of ``alpha`` in L_c whose new box lies in column ``i``."""
    alpha = tuple(alpha)
    if i < 1:
        raise ValueError(f"column index must be positive, got {i}")
    if i == 1:
        return alpha + (1,)
    for k in range(len(alpha) - 1, -1, -1):
        if alpha[k] == i - 1:
            return alpha[:k] + (i,) + alpha[k + 1:]
    raise ValueError(f"{alpha} has no part equal to {i - 1}")


def box_add_word(w: Sequence[int], beta: Sequence[int]) -> Composition:
    """``t_{w_1} ... t_{w_n}(beta)``; the last letter acts first."""
    current = tuple(beta)
    for i in reversed(w):
        current = box_add(i, current)
    return current


# ---------------------------------------------------------------------------
# enumeration

def _partial_ok(outer, inner, placed: dict[Cell, int]) -> bool:
    """False if the partial standard filling already breaks the triple rule.

    Unplaced cells will receive values larger than everything placed.
    """
    unknown = object()

    def value_of(cell):
        return placed.get(cell, unknown)

    for a, b, c in _triple_violations(outer, inner, value_of):
        if c is unknown:
            if a is not unknown and b == INFINITY:
                return False
            continue
        if a is unknown:
            continue
        if a <= c and (b is unknown or not b < c):
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_sct(gamma: Composition, beta: Composition = ()) -> tuple[CompositionTableau, ...]:
    """All standard composition tableaux of shape ``gamma // beta``.

    Entries ``1, 2, ...`` are placed one at a time at the end of some row and
    partial fillings that already violate a condition are pruned.  The result
    is sorted by column reading word.
    """
    gamma, beta = tuple(gamma), tuple(beta)
    if not lc_leq(beta, gamma):
        raise ValueError(f"{beta} is not below {gamma} in L_c")
    nrows = len(gamma)
    start = [beta[r] if r < len(beta) else 0 for r in range(nrows)]
    length = list(start)
    n = sum(gamma) - sum(beta)
    placed: dict[Cell, int] = {}
    found = []

    def first_column_ok(r: int) -> bool:
        # filled first-column cells below must be placed already, none above
        for rr in range(len(beta) + 1, nrows + 1):
            if rr < r and (rr, 1) not in placed:
                return False
            if rr > r and (rr, 1) in placed:
                return False
        return True

    def rec(k: int):
        if k > n:
            tableau = ct_from_cells(beta, gamma, placed)
            if not validate_ct(tableau):
                raise AssertionError(f"pruned search produced an invalid tableau {tableau}")
            found.append(tableau)
            return
        for r in range(1, nrows + 1):
            if length[r - 1] == gamma[r - 1]:
                continue
            cell = (r, length[r - 1] + 1)
            if cell[1] == 1 and not first_column_ok(r):
                continue
            placed[cell] = k
            length[r - 1] += 1
            if _partial_ok(gamma, beta, placed):
                rec(k + 1)
            length[r - 1] -= 1
            del placed[cell]

    rec(1)
    return tuple(sorted(found, key=ct_reading_word))


def enumerate_ct(gamma: Sequence[int], beta: Sequence[int], max_entry: int) -> list[CompositionTableau]:
    """All composition tableaux of shape ``gamma // beta`` with entries ``<= max_entry``."""
    gamma, beta = tuple(gamma), tuple(beta)
    if not lc_leq(beta, gamma):
        raise ValueError(f"{beta} is not below {gamma} in L_c")
    order = []
    for r, length in enumerate(gamma, start=1):
        b = beta[r - 1] if r <= len(beta) else 0
        order.extend((r, c) for c in range(b + 1, length + 1))
    cells: dict[Cell, int] = {}
    found = []

    def rec(k: int):
        if k == len(order):
            tableau = ct_from_cells(beta, gamma, cells)
            if validate_ct(tableau):
                found.append(tableau)
            return
        r, c = order[k]
        low = cells.get((r, c - 1), 1)
        for v in range(low, max_entry + 1):
            cells[(r, c)] = v
            rec(k + 1)
        del cells[(r, c)]

    rec(0)
    return sorted(found, key=lambda t: (ct_reading_word(t), t.rows))
