"""Crystal reflection operators on skew tableaux and LR tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from nclr.combinatorics import (
    Partition,
    Permutation,
    contains,
    is_partition,
    multiply,
    reduced_word,
    simple_transposition,
)
from nclr.tableaux import (
    Cell,
    SkewTableau,
    column_reading_word,
    from_cells,
    reading_order,
    shape_cells,
    with_reading_word,
)


@dataclass(frozen=True)
class LrTriple:
    lam: Partition
    mu: Partition
    nu: Partition

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            if not is_partition(getattr(self, name)):
                raise ValueError(f"{name}={getattr(self, name)} is not a partition")
        if not contains(self.lam, self.mu):
            raise ValueError(f"{self.mu} is not contained in {self.lam}")
        if sum(self.nu) != sum(self.lam) - sum(self.mu):
            raise ValueError("|nu| must equal |lam| - |mu|")


def reflect_word(i: int, w: Sequence[int]) -> tuple[int, ...]:
    """Apply the reflection ``s_i`` to a word.

    Each ``i+1`` is paired with the nearest unpaired ``i`` to its right.  The
    unpaired letters then read ``i^a (i+1)^b`` and are rewritten as
    ``i^b (i+1)^a``.
    """
    out = list(w)
    waiting: list[int] = []
    unpaired_small: list[int] = []
    for pos, x in enumerate(w):
        if x == i + 1:
            waiting.append(pos)
        elif x == i:
            if waiting:
                waiting.pop()
            else:
                unpaired_small.append(pos)
    # ``waiting`` now holds the unpaired i+1's, all right of the unpaired i's
    free = unpaired_small + waiting
    a = len(unpaired_small)
    b = len(waiting)
    for k, pos in enumerate(free):
        out[pos] = i if k < b else i + 1
    if a == b:
        return tuple(w)
    return tuple(out)


def crystal_reflect(i: int, t: SkewTableau) -> SkewTableau:
    """``s_i(t)``: reflect the column reading word and refill the same shape."""
    if i < 1:
        raise ValueError(f"generator index must be positive, got {i}")
    return with_reading_word(t, reflect_word(i, column_reading_word(t)))


def crystal_apply(sigma: Permutation, t: SkewTableau, word: Sequence[int] | None = None) -> SkewTableau:
    """``sigma(t)`` through the reduced word ``s_{i_1} ... s_{i_k}``; ``s_{i_k}`` acts first.

    ``word`` overrides the canonical reduced word; any word of ``sigma``
    gives the same result.
    """
    if word is None:
        word = reduced_word(sigma)
    order = reading_order(t.inner, t.outer)
    w = column_reading_word(t)
    for i in reversed(word):
        w = reflect_word(i, w)
    return from_cells(t.inner, t.outer, dict(zip(order, w)))


def crystal_orbit(t: SkewTableau, n: int) -> dict[Permutation, SkewTableau]:
    """``sigma(t)`` for every ``sigma`` in ``S_n`` via one reflection per Cayley edge."""
    from collections import deque

    order = reading_order(t.inner, t.outer)
    start = tuple(range(1, n + 1))
    words = {start: column_reading_word(t)}
    queue = deque([start])
    while queue:
        sigma = queue.popleft()
        for i in range(1, n):
            nxt = multiply(simple_transposition(i, n), sigma)
            if nxt not in words:
                words[nxt] = reflect_word(i, words[sigma])
                queue.append(nxt)
    return {sigma: from_cells(t.inner, t.outer, dict(zip(order, w))) for sigma, w in words.items()}


def _lr_fillings(lam: Partition, mu: Partition, nu: Partition) -> Iterator[dict[Cell, int]]:
    """Backtrack over cells in reverse reading order (columns right to left,
    each bottom to top), which is the order the lattice condition is checked in."""
    order = list(reversed(reading_order(mu, lam)))
    lam_set = set(shape_cells(mu, lam))
    counts = [0] * (len(nu) + 2)
    cells: dict[Cell, int] = {}

    def rec(k: int):
        if k == len(order):
            yield dict(cells)
            return
        r, c = order[k]
        low = cells.get((r - 1, c), 0) + 1
        high = cells[(r, c + 1)] if (r, c + 1) in lam_set else len(nu)
        for v in range(low, min(high, len(nu)) + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            cells[(r, c)] = v
            yield from rec(k + 1)
            del cells[(r, c)]
            counts[v] -= 1

    yield from rec(0)


def enumerate_lrt(triple: LrTriple) -> list[SkewTableau]:
    """LR tableaux of shape ``lam/mu`` and content ``nu``, sorted by reading word."""
    lam, mu, nu = triple.lam, triple.mu, triple.nu
    found = [from_cells(mu, lam, cells) for cells in _lr_fillings(lam, mu, nu)]
    return sorted(found, key=column_reading_word)


def lrt_sigma(triple: LrTriple, sigma: Permutation) -> list[SkewTableau]:
    """``{sigma(T) : T an LR tableau}``, sorted by reading word."""
    if len(sigma) != len(triple.nu):
        raise ValueError(f"sigma must lie in S_{len(triple.nu)}")
    return sorted((crystal_apply(sigma, t) for t in enumerate_lrt(triple)), key=column_reading_word)
