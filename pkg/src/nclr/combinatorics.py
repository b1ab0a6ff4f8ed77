"""Words, permutations, compositions, partitions and the Young composition poset.

Everything here works on plain tuples of positive integers.  A *word* is any
such tuple, a *permutation* is a word in one-line notation containing each of
``1..n`` once, a *composition* has positive parts and a *partition* is a
weakly decreasing composition.  The empty tuple is the empty composition.

Permutations multiply as functions: ``(s * t)(i) = s(t(i))``.  With the action
``s . lam = (lam[s^-1(1)], ..., lam[s^-1(n)])`` this gives
``(s * t) . lam = s . (t . lam)``, so a product ``s_1 s_2`` acting on a
sequence applies ``s_2`` first.
"""

from __future__ import annotations

from collections import Counter, deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]
Permutation = tuple[int, ...]
Composition = tuple[int, ...]
Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# words

def is_word(w: Sequence[int]) -> bool:
    return all(isinstance(x, int) and x >= 1 for x in w)


def inversions(w: Sequence[int]) -> set[tuple[int, int]]:
    """1-based pairs ``(i, j)`` with ``i < j`` and ``w_i > w_j``."""
    n = len(w)
    return {(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j]}


def standardize_word(w: Sequence[int]) -> Permutation:
    """The permutation with the same inversion set as ``w``.

    Equal letters are relabelled left to right with consecutive integers.
    """
    order = sorted(range(len(w)), key=lambda k: (w[k], k))
    std = [0] * len(w)
    for label, k in enumerate(order, start=1):
        std[k] = label
    return tuple(std)


def descents(w: Sequence[int]) -> set[int]:
    return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}


def content(w: Iterable[int]) -> tuple[int, ...]:
    """Letter multiplicities ``(#1, #2, ..., #m)`` with ``m`` the largest letter."""
    counts = Counter(w)
    if not counts:
        return ()
    return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))


def is_lattice(w: Sequence[int]) -> bool:
    """Every prefix has at least as many ``i`` as ``i+1``, for every ``i``."""
    counts: Counter[int] = Counter()
    for x in w:
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def is_reverse_lattice(w: Sequence[int]) -> bool:
    return is_lattice(tuple(reversed(w)))


def is_column_word(w: Sequence[int]) -> bool:
    return all(w[i] > w[i + 1] for i in range(len(w) - 1))


# ---------------------------------------------------------------------------
# permutations

def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def multiply(s: Permutation, t: Permutation) -> Permutation:
    """Function composition ``s * t``: apply ``t`` first."""
    if len(s) != len(t):
        raise ValueError(f"degree mismatch: {len(s)} vs {len(t)}")
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(s: Permutation) -> Permutation:
    inv = [0] * len(s)
    for i, si in enumerate(s, start=1):
        inv[si - 1] = i
    return tuple(inv)


def simple_transposition(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def longest_element(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def from_word(word: Sequence[int], n: int) -> Permutation:
    """The product ``s_{i_1} s_{i_2} ... s_{i_k}`` in ``S_n``."""
    p = identity(n)
    for i in word:
        p = multiply(p, simple_transposition(i, n))
    return p


def inversion_count(s: Sequence[int]) -> int:
    return len(inversions(s))


def reduced_word(s: Permutation) -> tuple[int, ...]:
    """Bubble-sort reduced word ``(i_1, ..., i_k)`` with ``s = s_{i_1} ... s_{i_k}``.

    Repeatedly strips a right descent: if ``s(i) > s(i+1)`` then
    ``s = (s * s_i) * s_i`` with ``s * s_i`` one inversion shorter.
    """
    p = list(s)
    stripped = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                stripped.append(i + 1)
                break
        else:
            break
    return tuple(reversed(stripped))


def permute_sequence(s: Permutation, seq: Sequence[int]) -> tuple[int, ...]:
    """``s . seq``: entry ``i`` of the result is ``seq[s^-1(i)]``."""
    if len(s) != len(seq):
        raise ValueError(f"cannot act with S_{len(s)} on a sequence of length {len(seq)}")
    inv = inverse(s)
    return tuple(seq[inv[i] - 1] for i in range(len(seq)))


def permutations_of(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    yield from permutations(range(1, n + 1))


def sorting_permutation(target: Sequence[int]) -> Permutation:
    """Shortest ``s`` with ``s . sort(target) = target``.

    Equal parts keep their relative order, which makes ``s`` minimal in
    length among all permutations with this property.
    """
    nu = sorted(target, reverse=True)
    used = [False] * len(nu)
    inv = []
    for value in target:
        for k, part in enumerate(nu):
            if not used[k] and part == value:
                used[k] = True
                inv.append(k + 1)
                break
    return inverse(tuple(inv))


# ---------------------------------------------------------------------------
# compositions and partitions

def is_composition(a: Sequence[int]) -> bool:
    return all(isinstance(x, int) and x > 0 for x in a)


def is_partition(a: Sequence[int]) -> bool:
    return is_composition(a) and all(a[i] >= a[i + 1] for i in range(len(a) - 1))


def sort_composition(a: Sequence[int]) -> Partition:
    return tuple(sorted(a, reverse=True))


def reverse(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(a))


def set_of(a: Sequence[int]) -> set[int]:
    """Partial sums ``a_1, a_1 + a_2, ...`` omitting the full sum."""
    out, total = set(), 0
    for part in a[:-1]:
        total += part
        out.add(total)
    return out


def composition_from_set(s: Iterable[int], n: int) -> Composition:
    cuts = sorted(s)
    if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
        raise ValueError(f"{cuts} is not a subset of [{n - 1}]")
    if n == 0:
        return ()
    points = [0, *cuts, n]
    return tuple(points[k + 1] - points[k] for k in range(len(points) - 1))


def transpose(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``mu`` is contained in ``lam`` as Young diagrams."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first, *rest))
    return tuple(out)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    """Compositions of ``n`` in lexicographic order."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first, *rest))
    return tuple(out)


def rearrangements(lam: Sequence[int]) -> list[Composition]:
    """Distinct compositions that sort to ``lam``, lexicographically ordered."""
    from itertools import permutations

    return sorted(set(permutations(lam)))


def subpartitions(lam: Sequence[int]) -> Iterator[Partition]:
    """All partitions contained in ``lam``."""

    def rec(k: int, bound: int) -> Iterator[Partition]:
        if k == len(lam):
            yield ()
            return
        yield ()
        for part in range(min(bound, lam[k]), 0, -1):
            for rest in rec(k + 1, part):
                yield (part, *rest)

    yield from rec(0, lam[0] if lam else 0)


# ---------------------------------------------------------------------------
# the Young composition poset

def lc_covers(beta: Sequence[int]) -> list[Composition]:
    """Compositions covering ``beta``: append a part 1, or increment a part
    that is not repeated further right."""
    beta = tuple(beta)
    out = [beta + (1,)]
    for k, part in enumerate(beta):
        if all(later != part for later in beta[k + 1:]):
            out.append(beta[:k] + (part + 1,) + beta[k + 1:])
    return out


def lc_leq(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """Whether ``beta <= alpha`` in the Young composition poset.

    Covers only grow existing parts or append parts at the end, so ``beta``
    must fit under ``alpha`` part by part; on top of that, whenever
    ``beta_i >= beta_j`` with ``i > j`` the same must hold in ``alpha``.
    """
    if len(beta) > len(alpha):
        return False
    if any(b > a for b, a in zip(beta, alpha)):
        return False
    for i in range(len(beta)):
        for j in range(i):
            if beta[i] >= beta[j] and alpha[i] < alpha[j]:
                return False
    return True


def lc_reachable(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """Breadth-first search for a saturated chain from ``beta`` to ``alpha``."""
    beta, alpha = tuple(beta), tuple(alpha)
    target = sum(alpha)
    seen = {beta}
    queue = deque([beta])
    while queue:
        current = queue.popleft()
        if current == alpha:
            return True
        if sum(current) >= target:
            continue
        for nxt in lc_covers(current):
            if nxt not in seen and len(nxt) <= len(alpha):
                seen.add(nxt)
                queue.append(nxt)
    return False


def lc_upper_set(beta: Sequence[int], steps: int) -> list[Composition]:
    """Compositions reached from ``beta`` by exactly ``steps`` covers, sorted."""
    level = {tuple(beta)}
    for _ in range(steps):
        level = {nxt for current in level for nxt in lc_covers(current)}
    return sorted(level)
