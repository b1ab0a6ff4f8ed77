"""Exhaustive property sweeps used by ``nclr verify`` and the experiment scripts.

Each suite returns a :class:`SuiteResult` with pass/fail counts and the
first few failing cases, so a sweep never stops at the first failure.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator

from nclr.coefficients import Method, classical_lr, nc_table
from nclr.combinatorics import (
    compositions,
    contains,
    from_word,
    partitions,
    permute_sequence,
    rearrangements,
    sort_composition,
    subpartitions,
)
from nclr.composition_tableaux import canonical_ct, ct_reading_word, rho, rho_inverse
from nclr.crystal import LrTriple, crystal_apply, crystal_orbit, enumerate_lrt, reflect_word
from nclr.frank import column_form, enumerate_lr_frank, frank_si, iota, iota_by_search, is_frank, phi
from nclr.tableaux import (
    insertion_tableau,
    jdt_rectify,
    semistandard_tableaux,
    standardize_tableau,
)

MAX_SIZE = 8


@dataclass
class VerifyConfig:
    max_size: int = 7
    seed: int = 0
    workers: int = 1
    alphabet: int = 4
    max_failures_kept: int = 5
    suites: tuple[str, ...] = ()

    def __post_init__(self):
        if not 0 <= self.max_size <= MAX_SIZE:
            raise ValueError(f"max_size must lie in 0..{MAX_SIZE}")


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def record(self, good: bool, case, keep: int = 5):
        if good:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < keep:
                self.failures.append(repr(case))


def _run(name: str, cases: Iterable, check: Callable[..., bool], config: VerifyConfig) -> SuiteResult:
    result = SuiteResult(name)
    for case in cases:
        result.record(check(case), case, config.max_failures_kept)
    return result


def lr_triples(max_size: int) -> Iterator[LrTriple]:
    for n in range(max_size + 1):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                for nu in partitions(n - sum(mu)):
                    yield LrTriple(lam, mu, nu)


def composition_pairs(max_size: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    return [
        (alpha, beta)
        for n in range(max_size + 1)
        for k in range(n + 1)
        for alpha in compositions(k)
        for beta in compositions(n - k)
    ]


# ---------------------------------------------------------------------------
# suites

def _methods_agree(pair) -> bool:
    alpha, beta = pair
    tables = [nc_table(alpha, beta, m).entries for m in Method]
    return all(t == tables[0] for t in tables)


def three_methods(config: VerifyConfig) -> SuiteResult:
    pairs = composition_pairs(config.max_size)
    if config.workers > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            verdicts = list(pool.map(_methods_agree, pairs, chunksize=16))
        result = SuiteResult("three-method agreement")
        for pair, good in zip(pairs, verdicts):
            result.record(good, pair, config.max_failures_kept)
        return result
    return _run("three-method agreement", pairs, _methods_agree, config)


def refinement(config: VerifyConfig) -> SuiteResult:
    def cases():
        for t in lr_triples(config.max_size):
            for alpha in rearrangements(t.nu):
                for beta in rearrangements(t.mu):
                    yield t, alpha, beta

    def check(case) -> bool:
        t, alpha, beta = case
        table = nc_table(alpha, beta, Method.SCT)
        refined = sum(c for g, c in table.entries.items() if sort_composition(g) == t.lam)
        return refined == classical_lr(t.lam, t.mu, t.nu)

    return _run("refinement identity", cases(), check, config)


def coxeter(config: VerifyConfig) -> SuiteResult:
    """Relations on every word over the alphabet.

    Reflections only see the column reading word, and every word reads some
    skew tableau (one box per column, boxes in distinct rows), so this covers
    every skew tableau of the same size and alphabet.
    """
    k = config.alphabet

    def cases():
        for n in range(1, config.max_size + 1):
            yield from product(range(1, k + 1), repeat=n)

    def check(w) -> bool:
        for i in range(1, k):
            if reflect_word(i, reflect_word(i, w)) != w:
                return False
            if i + 1 < k:
                j = i + 1
                left = reflect_word(i, reflect_word(j, reflect_word(i, w)))
                if left != reflect_word(j, reflect_word(i, reflect_word(j, w))):
                    return False
            for j in range(i + 2, k):
                if reflect_word(i, reflect_word(j, w)) != reflect_word(j, reflect_word(i, w)):
                    return False
        return True

    return _run("crystal Coxeter relations", cases(), check, config)


def iota_roundtrip(config: VerifyConfig) -> SuiteResult:
    """``iota`` is an involution, keeps ``P``, and matches the brute-force search."""
    letters = min(config.max_size, 6)

    def cases():
        for p in range(1, letters):
            for q in range(1, letters):
                if p + q > config.max_size + 1:
                    continue
                for word in _two_column_words(p, q, letters):
                    if is_frank(word):
                        yield word

    def check(w) -> bool:
        v = iota(w)
        return iota(v) == w and insertion_tableau(v) == insertion_tableau(w) and v == iota_by_search(w)

    return _run("iota round trip", cases(), check, config)


def _two_column_words(p: int, q: int, letters: int) -> Iterator[tuple[int, ...]]:
    from itertools import combinations

    for left in combinations(range(letters, 0, -1), p):
        for right in combinations(range(letters, 0, -1), q):
            w = left + right
            if column_form(w) == (p, q):
                yield w


def rho_roundtrip(config: VerifyConfig) -> SuiteResult:
    """``rho(rho_inverse(T, beta)) == T`` and the reading word does not depend on
    which rearrangement ``beta`` of the inner shape is used."""
    size = min(config.max_size, 5)

    def cases():
        for inner_size in range(5):
            for mu in partitions(inner_size):
                for k in range(size + 1):
                    for lam in partitions(inner_size + k):
                        if contains(lam, mu):
                            yield from semistandard_tableaux(mu, lam, 3)

    def check(t) -> bool:
        words = set()
        for beta in rearrangements(t.inner):
            image = rho_inverse(t, beta)
            if rho(image) != t:
                return False
            words.add(ct_reading_word(image))
        return len(words) == 1

    return _run("rho round trip", cases(), check, config)


def crystal_image_rectification(config: VerifyConfig) -> SuiteResult:
    """Every ``sigma(T)`` for an LR tableau rectifies, once standardized, to ``rho`` of
    the canonical tableau of ``sigma . nu``."""

    def cases():
        for t in lr_triples(config.max_size):
            if not t.nu:
                continue
            seen = set()
            for lr in enumerate_lrt(t):
                for sigma, image in crystal_orbit(lr, len(t.nu)).items():
                    alpha = permute_sequence(sigma, t.nu)
                    if (alpha, image) not in seen:
                        seen.add((alpha, image))
                        yield alpha, image

    def check(case) -> bool:
        alpha, image = case
        return jdt_rectify(standardize_tableau(image)) == rho(canonical_ct(alpha))

    return _run("crystal image rectification", cases(), check, config)


def intertwining(config: VerifyConfig) -> SuiteResult:
    from nclr.crystal import crystal_reflect

    def cases():
        for n in range(config.max_size + 1):
            for lam in partitions(n):
                for mu in subpartitions(lam):
                    for alpha in compositions(n - sum(mu)):
                        for w in enumerate_lr_frank(lam, mu, alpha):
                            yield w, lam, mu

    def check(case) -> bool:
        w, lam, mu = case
        tableau = phi(w, lam, mu)
        m = len(column_form(w))
        return all(crystal_reflect(i, tableau) == phi(frank_si(m - i, w), lam, mu) for i in range(1, m))

    return _run("phi intertwining", cases(), check, config)


def reduced_word_choice(config: VerifyConfig) -> SuiteResult:
    """Random reduced words for ``sigma`` act like the canonical one."""
    rng = random.Random(config.seed)

    def random_reduced_word(sigma) -> tuple[int, ...]:
        # peel a random right descent off sigma until the identity remains
        word: list[int] = []
        current = list(sigma)
        while True:
            descents = [i for i in range(1, len(current)) if current[i - 1] > current[i]]
            if not descents:
                break
            i = rng.choice(descents)
            current[i - 1], current[i] = current[i], current[i - 1]
            word.append(i)
        return tuple(reversed(word))

    def cases():
        for t in lr_triples(min(config.max_size, 7)):
            if len(t.nu) < 3:
                continue
            for lr in enumerate_lrt(t):
                sigma = tuple(rng.sample(range(1, len(t.nu) + 1), len(t.nu)))
                yield lr, sigma, random_reduced_word(sigma)

    def check(case) -> bool:
        lr, sigma, word = case
        return from_word(word, len(sigma)) == sigma and crystal_apply(sigma, lr, word) == crystal_apply(sigma, lr)

    return _run("reduced word independence", cases(), check, config)


SUITES: dict[str, Callable[[VerifyConfig], SuiteResult]] = {
    "three-methods": three_methods,
    "refinement": refinement,
    "coxeter": coxeter,
    "iota": iota_roundtrip,
    "rho": rho_roundtrip,
    "intertwining": intertwining,
    "rectification": crystal_image_rectification,
    "reduced-words": reduced_word_choice,
}


def run_all(config: VerifyConfig) -> list[SuiteResult]:
    names = config.suites or tuple(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    return [SUITES[name](config) for name in names]
