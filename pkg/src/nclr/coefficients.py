"""Classical and noncommutative Littlewood-Richardson coefficients.

Noncommutative coefficients ``C^gamma_{alpha beta}`` are computed three ways:

``crystal``
    permute the LR tableaux of ``(sort gamma, sort beta, sort alpha)`` by
    crystal reflections and bin them by the outer shape of ``rho_beta^-1``;
``sct``
    count standard composition tableaux of shape ``gamma // beta`` that
    rectify to the canonical tableau of ``alpha``;
``boxadd``
    count compatible frank words ``w`` whose box-adding chain takes ``beta``
    to ``gamma``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Sequence

from nclr.combinatorics import (
    Composition,
    Partition,
    Permutation,
    contains,
    is_composition,
    is_partition,
    lc_leq,
    lc_upper_set,
    longest_element,
    multiply,
    partitions,
    permute_sequence,
    reverse,
    sort_composition,
    sorting_permutation,
)
from nclr.composition_tableaux import (
    CompositionTableau,
    box_add_word,
    canonical_ct,
    enumerate_sct,
    rectify_ct,
    rho_inverse,
)
from nclr.crystal import LrTriple, crystal_apply, enumerate_lrt
from nclr.frank import enumerate_lr_frank


class Method(str, Enum):
    CRYSTAL = "crystal"
    SCT = "sct"
    BOXADD = "boxadd"


@dataclass
class CoefficientTable:
    alpha: Composition
    beta: Composition
    entries: dict[Composition, int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {g: c for g, c in sorted(self.entries.items()) if c}

    def __getitem__(self, gamma: Sequence[int]) -> int:
        return self.entries.get(tuple(gamma), 0)

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "entries": [{"gamma": list(g), "coeff": c} for g, c in sorted(self.entries.items())],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CoefficientTable":
        return cls(
            tuple(data["alpha"]),
            tuple(data["beta"]),
            {tuple(e["gamma"]): int(e["coeff"]) for e in data["entries"]},
        )


def classical_lr(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^lam_{nu mu}`` as the number of LR tableaux of shape ``lam/mu``, content ``nu``."""
    return len(enumerate_lrt(LrTriple(tuple(lam), tuple(mu), tuple(nu))))


def _outer_partitions(mu: Partition, n: int) -> list[Partition]:
    return [lam for lam in partitions(n) if contains(lam, mu)]


def conjugated_by_longest(sigma: Permutation) -> Permutation:
    w0 = longest_element(len(sigma))
    return multiply(w0, multiply(sigma, w0))


# ---------------------------------------------------------------------------
# the three engines, each producing every gamma at once

def crystal_table(alpha: Composition, beta: Composition, sigma: Permutation | None = None,
                  word: Sequence[int] | None = None) -> Counter:
    nu, mu = sort_composition(alpha), sort_composition(beta)
    if sigma is None:
        sigma = sorting_permutation(alpha)
    if permute_sequence(sigma, nu) != tuple(alpha):
        raise ValueError(f"{sigma} does not carry {nu} to {alpha}")
    counts: Counter = Counter()
    for lam in _outer_partitions(mu, sum(alpha) + sum(beta)):
        for t in enumerate_lrt(LrTriple(lam, mu, nu)):
            image = crystal_apply(sigma, t, word)
            counts[rho_inverse(image, beta).outer] += 1
    return counts


@lru_cache(maxsize=None)
def _rectification_counts(gamma: Composition, beta: Composition) -> Counter:
    return Counter(rectify_ct(t) for t in enumerate_sct(gamma, beta))


def sct_table(alpha: Composition, beta: Composition) -> Counter:
    if not alpha:
        return Counter({beta: 1})
    target: CompositionTableau = canonical_ct(alpha)
    counts: Counter = Counter()
    for gamma in lc_upper_set(beta, sum(alpha)):
        found = _rectification_counts(gamma, beta)[target]
        if found:
            counts[gamma] = found
    return counts


def boxadd_table(alpha: Composition, beta: Composition, sigma: Permutation | None = None) -> Counter:
    nu, mu = sort_composition(alpha), sort_composition(beta)
    if sigma is None:
        sigma = sorting_permutation(alpha)
    form = permute_sequence(conjugated_by_longest(sigma), reverse(nu))
    counts: Counter = Counter()
    for lam in _outer_partitions(mu, sum(alpha) + sum(beta)):
        for w in enumerate_lr_frank(lam, mu, form):
            counts[box_add_word(w, beta)] += 1
    return counts


@lru_cache(maxsize=None)
def nc_table(alpha: Composition, beta: Composition, method: Method = Method.SCT) -> CoefficientTable:
    alpha, beta = tuple(alpha), tuple(beta)
    if not is_composition(alpha) or not is_composition(beta):
        raise ValueError("alpha and beta must be compositions")
    method = Method(method)
    if method is Method.CRYSTAL:
        counts = crystal_table(alpha, beta)
    elif method is Method.SCT:
        counts = sct_table(alpha, beta)
    else:
        counts = boxadd_table(alpha, beta)
    return CoefficientTable(alpha, beta, dict(counts))


def nc_lr(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int], method: Method | str = Method.SCT) -> int:
    """``C^gamma_{alpha beta}``; zero when ``beta`` is not below ``gamma`` in L_c."""
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    if not is_composition(gamma):
        raise ValueError(f"{gamma} is not a composition")
    if sum(alpha) + sum(beta) != sum(gamma):
        raise ValueError("|alpha| + |beta| must equal |gamma|")
    if not lc_leq(beta, gamma):
        return 0
    method = Method(method)
    if method is Method.SCT:
        # only one gamma is needed, so skip the rest of the table
        if not alpha:
            return int(gamma == beta)
        return _rectification_counts(gamma, beta)[canonical_ct(alpha)]
    return nc_table(alpha, beta, method)[gamma]


def nc_lr_all(alpha, beta, gamma) -> dict[str, int]:
    return {m.value: nc_lr(alpha, beta, gamma, m) for m in Method}


def expand_product(alpha: Sequence[int], beta: Sequence[int], method: Method | str = Method.SCT) -> CoefficientTable:
    """All nonzero ``C^gamma_{alpha beta}`` for the product of ``alpha`` and ``beta``."""
    return nc_table(tuple(alpha), tuple(beta), Method(method))


def refinement_check(nu: Sequence[int], mu: Sequence[int], lam: Sequence[int],
                     alpha: Sequence[int], beta: Sequence[int], method: Method | str = Method.SCT) -> bool:
    """``c^lam_{nu mu}`` equals the sum of ``C^gamma_{alpha beta}`` over ``sort(gamma) = lam``."""
    nu, mu, lam, alpha, beta = map(tuple, (nu, mu, lam, alpha, beta))
    if sort_composition(alpha) != nu or sort_composition(beta) != mu:
        raise ValueError("alpha and beta must rearrange nu and mu")
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    table = nc_table(alpha, beta, Method(method))
    refined = sum(c for gamma, c in table.entries.items() if sort_composition(gamma) == lam)
    return classical_lr(lam, mu, nu) == refined


def permutations_carrying(nu: Sequence[int], alpha: Sequence[int]) -> list[Permutation]:
    """Every ``sigma`` with ``sigma . nu = alpha``."""
    from itertools import permutations

    n = len(nu)
    return [p for p in permutations(range(1, n + 1)) if permute_sequence(p, nu) == tuple(alpha)]

