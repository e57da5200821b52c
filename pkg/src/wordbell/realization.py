"""Polynomial realization inside the free associative algebra.

Letters are pairs (alphabet index, letter index): the ambient space is the
free algebra on a disjoint family of truncated alphabets A_1, A_2, ...  A
word polynomial is a LinComb over words (tuples of letters) with basis tag
"Word".  The uncolored realization lives entirely in alphabet 1.

Reading of the defining word sum for a colored key: positions in one block
all carry a single letter from the alphabet named by the block's color, and
distinct blocks choose letters independently — so two blocks drawn from the
same alphabet may well pick equal letters.  (Only the within-block equality
and the block-to-alphabet assignment are constrained.)

Truncation soundness: two homogeneous degree-n word polynomials over the
infinite alphabets agree iff they agree at truncation L = n, since a degree-n
monomial involves at most n distinct letters of each alphabet.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .combinatorics import (
    ColoredSetPartition,
    CyclePermutation,
    SetPartition,
    refinements,
)
from .lincomb import BasisError, LinComb

WORD = "Word"

Letter = tuple[int, int]
Word = tuple[Letter, ...]


def letters(alphabet: int, count: int) -> list[Letter]:
    """The first ``count`` letters of alphabet ``alphabet``."""
    return [(alphabet, i) for i in range(1, count + 1)]


def word_one() -> LinComb:
    return LinComb.term(WORD, ())


def word_zero() -> LinComb:
    return LinComb.zero(WORD)


def word_degree(x: LinComb) -> int | None:
    """Common word length of all terms, or None if inhomogeneous or zero."""
    degs = {len(w) for w in x.keys()}
    if len(degs) != 1:
        return None
    return degs.pop()


# ---------------------------------------------------------------------------
# expansions of the distinguished bases


def _blockwise_expand(parts, letter_choices) -> LinComb:
    # parts: sequence of blocks; letter_choices: one candidate list per part.
    n = sum(len(b) for b in parts)
    out: dict = {}
    for assignment in product(*letter_choices):
        w = [None] * n
        for block, letter in zip(parts, assignment):
            for pos in block:
                w[pos - 1] = letter
        key = tuple(w)
        out[key] = out.get(key, 0) + 1
    return LinComb._raw(WORD, out)


def expand_phi(part, truncation: int) -> LinComb:
    """Word expansion of a Phi basis key at the given truncation.

    For a colored key the block colored i draws its letter from alphabet A_i;
    plain set partitions embed with every block in alphabet 1.
    """
    if isinstance(part, ColoredSetPartition):
        blocks = [b for b, _ in part.parts]
        choices = [letters(c, truncation) for _, c in part.parts]
    elif isinstance(part, SetPartition):
        blocks = list(part.blocks)
        choices = [letters(1, truncation) for _ in part.blocks]
    else:
        raise TypeError(f"cannot expand {type(part).__name__}")
    return _blockwise_expand(blocks, choices)


def expand_phi_on(pi: SetPartition, alphabet: list[Letter]) -> LinComb:
    """Uncolored Phi expansion over an explicit letter list."""
    return _blockwise_expand(list(pi.blocks), [alphabet for _ in pi.blocks])


def expand_monomial(pi: SetPartition, truncation_or_letters) -> LinComb:
    """Word expansion of a monomial key: distinct blocks take distinct letters."""
    alphabet = (
        letters(1, truncation_or_letters)
        if isinstance(truncation_or_letters, int)
        else list(truncation_or_letters)
    )
    k = pi.part_count
    out: dict = {}
    n = pi.size
    for chosen in product(*[alphabet] * k):
        if len(set(chosen)) != k:
            continue
        w = [None] * n
        for block, letter in zip(pi.blocks, chosen):
            for pos in block:
                w[pos - 1] = letter
        key = tuple(w)
        out[key] = out.get(key, 0) + 1
    return LinComb._raw(WORD, out)


def expand_psi(pi: SetPartition, truncation: int) -> LinComb:
    """Psi realization: pi! times the Phi expansion."""
    return expand_phi(pi, truncation) * pi.part_factorial()


def expand_psi_on(pi: SetPartition, alphabet: list[Letter]) -> LinComb:
    return expand_phi_on(pi, alphabet) * pi.part_factorial()


def expand_s_on(pi: SetPartition, alphabet: list[Letter]) -> LinComb:
    """S_pi realization: sum of Psi expansions over all refinements of pi."""
    total = word_zero()
    for q in refinements(pi):
        total = total + expand_psi_on(q, alphabet)
    return total


_COMPLETE_SERIES: dict[tuple[Letter, ...], list[LinComb]] = {}


def complete_s(n: int, alphabet) -> LinComb:
    """S_{{1..n}} over the given letters (the word complete function).

    Grown on demand via the shuffle-exponential recursion
    m S_m = sum_j j (j! Phi_{{1..j}}) shuffle S_{m-j}, which agrees with the
    refinement sum over all set partitions but scales far better.
    """
    key = tuple(alphabet)
    cached = _COMPLETE_SERIES.get(key)
    if cached is not None and len(cached) > n:
        return cached[n]
    # Extend a private copy and publish it with one assignment, so concurrent
    # readers only ever see fully built prefixes.
    series = list(cached) if cached else [word_one()]
    while len(series) <= n:
        m = len(series)
        total: dict = {}
        for j in range(1, m + 1):
            phi_j = LinComb._raw(
                WORD, {(letter,) * j: 1 for letter in key}
            )
            _shuffle_into_scaled(total, phi_j, series[m - j], j * math.factorial(j))
        coeffs = {}
        for w, c in total.items():
            v = Fraction(c, m)
            coeffs[w] = v.numerator if v.denominator == 1 else v
        series.append(LinComb._raw(WORD, coeffs))
    _COMPLETE_SERIES[key] = series
    return series[n]


# ---------------------------------------------------------------------------
# shuffle machinery


@lru_cache(maxsize=None)
def _interleave_patterns(n: int, m: int) -> tuple:
    total = range(n + m)
    out = []
    for I in combinations(total, n):
        chosen = set(I)
        out.append((I, tuple(p for p in total if p not in chosen)))
    return tuple(out)


def _shuffle_words(u: Word, v: Word) -> dict:
    n, m = len(u), len(v)
    if n == 0:
        return {v: 1}
    if m == 0:
        return {u: 1}
    out: dict = {}
    w = [None] * (n + m)
    for I, J in _interleave_patterns(n, m):
        for pos, letter in zip(I, u):
            w[pos] = letter
        for pos, letter in zip(J, v):
            w[pos] = letter
        key = tuple(w)
        out[key] = out.get(key, 0) + 1
    return out


def shuffle(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear shuffle product of word polynomials."""
    if x.basis != WORD or y.basis != WORD:
        raise BasisError("shuffle is defined on word polynomials")
    out: dict = {}
    for u, cu in x.items():
        for v, cv in y.items():
            c = cu * cv
            for w, mult in _shuffle_words(u, v).items():
                acc = out.get(w, 0) + c * mult
                if acc:
                    out[w] = acc
                else:
                    del out[w]
    return LinComb._raw(WORD, out)


def shuffle_scatter(composition, words) -> Word | None:
    """Scatter word p into the positions of block p of a set composition.

    Returns None (the zero of the operator) when some word length does not
    match its block size.  The j-th letter of word p lands at the j-th
    smallest position of block p.
    """
    blocks = [tuple(sorted(b)) for b in composition]
    if len(blocks) != len(words):
        raise ValueError("need exactly one word per block")
    n = sum(len(b) for b in blocks)
    w = [None] * n
    for block, word in zip(blocks, words):
        if len(block) != len(word):
            return None
        for pos, letter in zip(block, word):
            w[pos - 1] = letter
    if any(l is None for l in w):
        raise ValueError("composition blocks must be disjoint and cover {1..n}")
    return tuple(w)


def shuffle_composite(composition, polys) -> LinComb:
    """Multilinear extension of the scatter operator to word polynomials."""
    out: dict = {}
    for combo in product(*[list(p.items()) for p in polys]):
        words = [w for w, _ in combo]
        coeff = 1
        for _, c in combo:
            coeff *= c
        scattered = shuffle_scatter(composition, words)
        if scattered is None:
            continue
        acc = out.get(scattered, 0) + coeff
        if acc:
            out[scattered] = acc
        else:
            del out[scattered]
    return LinComb._raw(WORD, out)


def specialize_complete(pi: SetPartition, family) -> LinComb:
    """S_pi in the virtual alphabet defined by the homogeneous family.

    ``family`` maps each degree m to a homogeneous word polynomial of degree
    m (list indexed by degree, or mapping); the single-block key of size n
    specializes to family[n] and general keys scatter blockwise.
    """
    polys = []
    for b in pi.blocks:
        p = family[len(b)]
        if word_degree(p) not in (len(b), None) or (word_degree(p) is None and p):
            raise ValueError(f"family entry for degree {len(b)} is not homogeneous")
        polys.append(p)
    if not pi.blocks:
        return word_one()
    return shuffle_composite(pi.blocks, polys)


# ---------------------------------------------------------------------------
# series of word polynomials (for scaled alphabets and shuffle powers)


def _shuffle_into(out: dict, x: LinComb, y: LinComb) -> None:
    _shuffle_into_scaled(out, x, y, 1)


def _shuffle_into_scaled(out: dict, x: LinComb, y: LinComb, scale) -> None:
    for u, cu in x.items():
        for v, cv in y.items():
            c = cu * cv * scale
            for w, mult in _shuffle_words(u, v).items():
                acc = out.get(w, 0) + c * mult
                if acc:
                    out[w] = acc
                else:
                    del out[w]


def series_shuffle_mul(a: list[LinComb], b: list[LinComb], order: int) -> list[LinComb]:
    sums: list[dict] = [{} for _ in range(order + 1)]
    for i, ca in enumerate(a[: order + 1]):
        if not ca:
            continue
        for j in range(min(order - i, len(b) - 1) + 1):
            if b[j]:
                _shuffle_into(sums[i + j], ca, b[j])
    return [LinComb._raw(WORD, d) for d in sums]


def series_shuffle_power(a: list[LinComb], k: int, order: int) -> list[LinComb]:
    # Iterative powering: the base usually has small supports, so k-1 long-by-
    # short multiplications beat repeated squaring of ever-larger series.
    result = [word_one()] + [word_zero() for _ in range(order)]
    base = list(a[: order + 1]) + [word_zero()] * max(0, order + 1 - len(a))
    for _ in range(k):
        result = series_shuffle_mul(result, base, order)
    return result


def complete_series(alphabet: list[Letter], order: int) -> list[LinComb]:
    """Coefficients of sigma_t over the alphabet: [1, S_1, S_2, ...]."""
    return [complete_s(n, alphabet) for n in range(order + 1)]


def scaled_complete(n: int, k: int, alphabet: list[Letter]) -> LinComb:
    """S_{{1..n}}(k*A), defined through sigma_t(kA) = sigma_t(A)^(shuffle k)."""
    return series_shuffle_power(complete_series(alphabet, n), k, n)[n]


# ---------------------------------------------------------------------------
# the cycle-support specialization


def cycle_word(sigma: CyclePermutation) -> Word:
    """The word w[sigma] over the letters b_i = (1, i).

    Each cycle, written minimum first and standardized, contributes the word
    b_{std[1]} ... b_{std[l]} scattered into its sorted support.
    """
    words = []
    for cyc in sigma.cycles:
        support = sorted(cyc)
        pos = {x: i + 1 for i, x in enumerate(support)}
        words.append(tuple((1, pos[x]) for x in cyc))
    scattered = shuffle_scatter(sigma.supports(), words)
    assert scattered is not None
    return scattered


def cycle_specialization(sigma: CyclePermutation) -> LinComb:
    return LinComb.term(WORD, cycle_word(sigma))


def _all_permutations(n: int):
    from itertools import permutations as _perms

    for line in _perms(range(1, n + 1)):
        yield CyclePermutation.from_one_line(line)


def cycle_bell(n: int, k: int) -> LinComb:
    """Word Bell polynomial specialized to cycle words: the sum of w[sigma]
    over permutations of size n with exactly k cycles."""
    out: dict = {}
    for sigma in _all_permutations(n):
        if sigma.cycle_count != k:
            continue
        w = cycle_word(sigma)
        out[w] = out.get(w, 0) + 1
    return LinComb._raw(WORD, out)


def cycle_complete_family(m: int) -> LinComb:
    """The specialized complete function: all words b_1 b_{s(2)} ... b_{s(m)}
    with s a permutation of {2..m} prefixed by 1."""
    from itertools import permutations as _perms

    out: dict = {}
    for rest in _perms(range(2, m + 1)):
        w = tuple((1, i) for i in (1,) + rest)
        out[w] = 1
    return LinComb._raw(WORD, out)
