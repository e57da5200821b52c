"""Tests for the combinatorial index sets, enumeration and bijections."""

import math
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from wordbell.combinatorics import (
    BELL,
    FACTORIAL,
    IDEMPOTENT,
    ONES,
    SHIFTED_FACTORIAL,
    TREE,
    ColoredSetPartition,
    ColorSequence,
    CyclePermutation,
    IdempotentEndofunction,
    InvalidColorError,
    Level2Partition,
    ListPartition,
    SequenceMismatchError,
    SetPartition,
    colored_partitions,
    colored_partitions_k,
    count_by_type,
    from_cycle_permutation,
    from_idempotent,
    from_level2,
    from_list_partition,
    interleave_keys,
    matching_unions,
    set_partitions,
    splitting_count,
    standardize,
    standardize_blocks,
    to_cycle_permutation,
    to_idempotent,
    to_level2,
    to_list_partition,
)

CONST9 = ColorSequence.constant(9)


# ---------------------------------------------------------------------------
# independent oracles


def rgs_partitions(n):
    """All set partitions of {1..n} by restricted growth strings."""
    if n == 0:
        return [()]
    out = []

    def grow(prefix, top):
        if len(prefix) == n:
            blocks = {}
            for i, v in enumerate(prefix, start=1):
                blocks.setdefault(v, []).append(i)
            out.append(tuple(tuple(b) for b in blocks.values()))
            return
        for v in range(top + 2):
            grow(prefix + [v], max(top, v))

    grow([0], 0)
    return out


def bell_triangle(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def eq1_colored_partitions(seq, n):
    """The overcounting generation through matching unions, deduplicated."""
    seen = set()

    def compositions(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first,) + rest

    for comp in compositions(n):
        ranges = [range(1, seq(i) + 1) for i in comp]
        if any(len(r) == 0 for r in ranges):
            continue
        for colors in product(*ranges):
            pieces = [
                ColoredSetPartition([(tuple(range(1, i + 1)), c)], seq)
                for i, c in zip(comp, colors)
            ]
            current = [ColoredSetPartition.empty(seq)]
            for piece in pieces:
                current = [u for p in current for u in interleave_keys(p, piece)]
            seen.update(current)
    return seen


# ---------------------------------------------------------------------------
# color sequences


def test_named_rules_closed_forms():
    for m in range(1, 9):
        assert ONES(m) == 1
        assert FACTORIAL(m) == math.factorial(m)
        assert SHIFTED_FACTORIAL(m) == math.factorial(m - 1)
        assert IDEMPOTENT(m) == m
        assert BELL(m) == bell_triangle(m)
        assert TREE(m) == m ** (m - 1)


def test_explicit_sequence_and_tail():
    seq = ColorSequence.explicit([1, 2, 9], tail="tree")
    assert [seq(m) for m in (1, 2, 3, 4, 5)] == [1, 2, 9, 64, 625]
    const = ColorSequence.explicit([5], tail=2)
    assert [const(m) for m in (1, 2, 10)] == [5, 2, 2]
    with pytest.raises(ValueError):
        ColorSequence.explicit([-1])
    with pytest.raises(ValueError):
        ColorSequence.named("nope")


def test_parse_round_trip():
    for text in ("ones", "factorial", "1,2,9,64 tail:tree", "a=2,2 tail:0"):
        seq = ColorSequence.parse(text)
        again = ColorSequence.parse(seq.spec_string())
        assert seq == again


def test_zero_tail_makes_large_blocks_impossible():
    involutions = ColorSequence.explicit([1, 1], tail=0)
    counts = [len(colored_partitions(involutions, n)) for n in range(6)]
    # brute-force involution counts
    expected = []
    for n in range(6):
        count = 0
        for perm in permutations(range(1, n + 1)):
            if all(perm[perm[i] - 1] == i + 1 for i in range(n)):
                count += 1
        expected.append(count)
    assert counts == expected


# ---------------------------------------------------------------------------
# canonical forms and standardization


def test_canonicalization_and_validation():
    p = SetPartition([(3, 1), (2,)])
    assert p.blocks == ((1, 3), (2,))
    assert p.size == 3 and p.part_count == 2
    with pytest.raises(ValueError):
        SetPartition([(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        SetPartition([(1,), (3,)])
    with pytest.raises(InvalidColorError):
        ColoredSetPartition([((1, 2), 5)], ColorSequence.constant(2))


def test_standardize_scattered_labels():
    raw = [({1, 4, 7}, 1), ({3, 8}, 1), ({5}, 3), ({10}, 1)]
    got = standardize(raw, CONST9)
    assert got == ColoredSetPartition(
        [((1, 3, 5), 1), ((2, 6), 1), ((4,), 3), ((7,), 1)], CONST9
    )


def test_standardize_identity_and_rank():
    already = ColoredSetPartition([((1, 2), 2), ((3,), 1)], CONST9)
    assert standardize(already.parts, CONST9) == already
    two = ColorSequence.constant(2)
    assert standardize([({2}, 1), ({9}, 2)], two) == ColoredSetPartition(
        [((1,), 1), ((2,), 2)], two
    )
    with pytest.raises(ValueError):
        standardize([({1, 2}, 1), ({2, 3}, 1)], CONST9)
    with pytest.raises(InvalidColorError):
        standardize([({4}, 10)], ColorSequence.constant(2))


def test_standardize_is_idempotent():
    for p in colored_partitions(IDEMPOTENT, 4):
        assert standardize(p.parts, IDEMPOTENT) == p


# ---------------------------------------------------------------------------
# shifted union and matching unions


def test_shifted_union_worked_example():
    a = ColoredSetPartition([((1, 3), 5), ((2,), 3)], CONST9)
    b = ColoredSetPartition([((1,), 2), ((2, 3), 4)], CONST9)
    assert a.shifted_union(b) == ColoredSetPartition(
        [((1, 3), 5), ((2,), 3), ((4,), 2), ((5, 6), 4)], CONST9
    )


def test_shifted_union_unit_and_mismatch():
    a = ColoredSetPartition([((1, 2), 1)], CONST9)
    empty = ColoredSetPartition.empty(CONST9)
    assert empty.shifted_union(a) == a
    assert a.shifted_union(empty) == a
    with pytest.raises(SequenceMismatchError):
        a.shifted_union(ColoredSetPartition([((1,), 1)], ONES))


def test_matching_unions_two_singletons_and_pair():
    x = ColoredSetPartition([((1,), 5), ((2,), 3)], CONST9)
    y = ColoredSetPartition([((1, 2), 2)], CONST9)
    got = matching_unions(x, y)
    expected = [
        [((1,), 5), ((2,), 3), ((3, 4), 2)],
        [((1,), 5), ((3,), 3), ((2, 4), 2)],
        [((1,), 5), ((4,), 3), ((2, 3), 2)],
        [((2,), 5), ((3,), 3), ((1, 4), 2)],
        [((2,), 5), ((4,), 3), ((1, 3), 2)],
        [((3,), 5), ((4,), 3), ((1, 2), 2)],
    ]
    assert got == sorted(
        (ColoredSetPartition(parts, CONST9) for parts in expected),
        key=lambda p: p.parts,
    )


def test_matching_unions_with_empty():
    x = ColoredSetPartition([((1, 2), 3), ((3,), 1)], CONST9)
    assert matching_unions(x, ColoredSetPartition.empty(CONST9)) == [x]


def test_alpha_values_on_matching_union_example():
    x = ColoredSetPartition([((1,), 5), ((2,), 3)], CONST9)
    y = ColoredSetPartition([((1, 2), 2)], CONST9)
    for union in matching_unions(x, y):
        assert splitting_count(x, y, union) == 1
    assert splitting_count(x, ColoredSetPartition.empty(CONST9), x) == 1


def test_alpha_total_is_binomial():
    pool2 = colored_partitions(IDEMPOTENT, 2)
    pool1 = colored_partitions(IDEMPOTENT, 1)
    for x in pool1 + pool2:
        for y in pool1 + pool2:
            total = sum(
                splitting_count(x, y, union) for union in matching_unions(x, y)
            )
            assert total == math.comb(x.size + y.size, x.size)


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_ordinary():
    assert set_partitions(0) == (SetPartition(),)
    assert len(set_partitions(3)) == 5
    for n in range(9):
        assert len(set_partitions(n)) == bell_triangle(n)
    for n in range(7):
        assert {p.blocks for p in set_partitions(n)} == {
            SetPartition(blocks).blocks for blocks in rgs_partitions(n)
        }


def test_enumerate_colored_size_three_listing():
    got = colored_partitions(IDEMPOTENT, 3)
    assert len(got) == 10
    expected = [
        [((1, 2, 3), 1)],
        [((1, 2, 3), 2)],
        [((1, 2, 3), 3)],
        [((1, 2), 1), ((3,), 1)],
        [((1, 2), 2), ((3,), 1)],
        [((1, 3), 1), ((2,), 1)],
        [((1, 3), 2), ((2,), 1)],
        [((2, 3), 1), ((1,), 1)],
        [((2, 3), 2), ((1,), 1)],
        [((1,), 1), ((2,), 1), ((3,), 1)],
    ]
    assert set(got) == {ColoredSetPartition(p, IDEMPOTENT) for p in expected}
    got_k = colored_partitions_k(IDEMPOTENT, 3, 2)
    assert len(got_k) == 6
    assert all(p.part_count == 2 for p in got_k)


def test_enumerate_colored_counts_and_eq1_oracle():
    assert len(colored_partitions(ONES, 5)) == 52
    for seq in (ONES, FACTORIAL, SHIFTED_FACTORIAL, IDEMPOTENT):
        for n in range(5):
            mine = set(colored_partitions(seq, n))
            assert mine == eq1_colored_partitions(seq, n), (seq, n)


def test_enumeration_is_sorted_and_duplicate_free():
    for seq in (FACTORIAL, BELL):
        for n in range(5):
            got = colored_partitions(seq, n)
            assert len(got) == len(set(got))
            assert got == sorted(got, key=lambda p: p.parts)


# ---------------------------------------------------------------------------
# bijections


def test_list_partition_bijection():
    singles = ColoredSetPartition([((1,), 1), ((2,), 1)], FACTORIAL)
    assert to_list_partition(singles) == ListPartition([(1,), (2,)])
    counts = [len(colored_partitions(FACTORIAL, n)) for n in range(1, 6)]
    assert counts == [1, 3, 13, 73, 501]
    for n in range(5):
        seen = set()
        for p in colored_partitions(FACTORIAL, n):
            lp = to_list_partition(p)
            assert from_list_partition(lp) == p
            assert lp.list_count == p.part_count and lp.size == p.size
            seen.add(lp)
        assert len(seen) == len(colored_partitions(FACTORIAL, n))
    with pytest.raises(SequenceMismatchError):
        to_list_partition(ColoredSetPartition([((1,), 1)], ONES))


def test_cycle_bijection_counts_and_roundtrip():
    for n in range(1, 7):
        assert len(colored_partitions(SHIFTED_FACTORIAL, n)) == math.factorial(n)
    identity = ColoredSetPartition(
        [((i,), 1) for i in range(1, 5)], SHIFTED_FACTORIAL
    )
    assert to_cycle_permutation(identity).one_line() == (1, 2, 3, 4)
    for n in range(6):
        for p in colored_partitions(SHIFTED_FACTORIAL, n):
            sigma = to_cycle_permutation(p)
            assert from_cycle_permutation(sigma) == p
            assert sigma.cycle_count == p.part_count and sigma.size == p.size


def test_cycle_bijection_custom_ranking():
    # an alternative ranking: iota_1(1) = 1, iota_3(231) = 2, iota_3(312) = 1,
    # with one-line 231 the cycle (1 2 3) and 312 the cycle (1 3 2)
    def stated_rank(std_cycle):
        return {(1,): 0, (1, 2, 3): 1, (1, 3, 2): 0}[std_cycle]

    def stated_unrank(m, rank):
        table = {(1, 0): (1,), (3, 1): (1, 2, 3), (3, 0): (1, 3, 2)}
        return table[(m, rank)]

    sigma = CyclePermutation.from_one_line((3, 2, 4, 1, 5, 8, 6, 7))
    got = from_cycle_permutation(sigma, rank=stated_rank)
    want = ColoredSetPartition(
        [((2,), 1), ((1, 3, 4), 2), ((5,), 1), ((6, 7, 8), 1)], SHIFTED_FACTORIAL
    )
    assert got == want
    assert to_cycle_permutation(want, unrank=stated_unrank) == sigma


def test_level2_bijection():
    assert len(colored_partitions(BELL, 1)) == 1
    counts = [len(colored_partitions(BELL, n)) for n in range(1, 6)]
    assert counts == [1, 3, 12, 60, 358]
    # direct enumeration of level-2 partitions of {1..4}
    direct = set()
    for inner in set_partitions(4):
        for grouping in set_partitions(inner.part_count):
            groups = tuple(
                tuple(inner.blocks[i - 1] for i in g) for g in grouping.blocks
            )
            direct.add(Level2Partition(groups))
    images = {to_level2(p) for p in colored_partitions(BELL, 4)}
    assert images == direct and len(direct) == 60
    for n in range(6):
        for p in colored_partitions(BELL, n):
            l2 = to_level2(p)
            assert from_level2(l2) == p
            assert l2.group_count == p.part_count and l2.size == p.size


def test_idempotent_bijection():
    # brute-force scan of all n^n functions
    for n in range(1, 5):
        brute = set()
        for images in product(range(1, n + 1), repeat=n):
            if all(images[images[i] - 1] == images[i] for i in range(n)):
                brute.add(IdempotentEndofunction(images))
        mine = {to_idempotent(p) for p in colored_partitions(IDEMPOTENT, n)}
        assert mine == brute
        assert len(brute) == [1, 3, 10, 41][n - 1]
    constant = IdempotentEndofunction((1, 1, 1))
    assert from_idempotent(constant) == ColoredSetPartition(
        [((1, 2, 3), 1)], IDEMPOTENT
    )
    identity = ColoredSetPartition([((i,), 1) for i in (1, 2, 3)], IDEMPOTENT)
    assert to_idempotent(identity).images == (1, 2, 3)
    for n in range(6):
        for p in colored_partitions(IDEMPOTENT, n):
            f = to_idempotent(p)
            assert from_idempotent(f) == p
            assert f.image_count == p.part_count and f.size == p.size


# ---------------------------------------------------------------------------
# type counting


def test_count_by_type_partition_numbers():
    partition_counts = [1, 1, 2, 3, 5, 7, 11, 15]
    for n, want in enumerate(partition_counts):
        assert count_by_type(ONES, n) == want
    assert count_by_type(FACTORIAL, 0) == 1


def test_count_by_type_matches_classification():
    for seq in (ONES, FACTORIAL, SHIFTED_FACTORIAL, IDEMPOTENT):
        for n in range(7):
            types = {p.type_signature() for p in colored_partitions(seq, n)}
            assert count_by_type(seq, n) == len(types), (seq.spec_string(), n)


# ---------------------------------------------------------------------------
# property tests


def blocks_strategy(max_n=7):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.lists(
            st.integers(min_value=0, max_value=max(n - 1, 0)),
            min_size=n,
            max_size=n,
        )
    )


def assignment_to_partition(assignment) -> SetPartition:
    blocks = {}
    for i, v in enumerate(assignment, start=1):
        blocks.setdefault(min(v, i - 1), []).append(i)
    return SetPartition(tuple(tuple(b) for b in blocks.values()))


partitions_st = blocks_strategy().map(assignment_to_partition)


def colored_st(seq=IDEMPOTENT, max_n=6):
    def colorize(draw_pair):
        p, seeds = draw_pair
        parts = []
        for block, seed in zip(p.blocks, seeds):
            bound = seq(len(block))
            parts.append((block, 1 + seed % bound))
        return ColoredSetPartition(parts, seq)

    return (
        blocks_strategy(max_n)
        .map(assignment_to_partition)
        .flatmap(
            lambda p: st.tuples(
                st.just(p),
                st.lists(
                    st.integers(min_value=0, max_value=10 ** 6),
                    min_size=p.part_count,
                    max_size=p.part_count,
                ),
            )
        )
        .map(colorize)
    )


@settings(max_examples=40, deadline=None)
@given(colored_st(), colored_st())
def test_shifted_union_bookkeeping(x, y):
    union = x.shifted_union(y)
    assert union.size == x.size + y.size
    assert union.part_count == x.part_count + y.part_count


@settings(max_examples=25, deadline=None)
@given(colored_st(max_n=4), colored_st(max_n=4), colored_st(max_n=4))
def test_shifted_union_associative(x, y, z):
    assert x.shifted_union(y).shifted_union(z) == x.shifted_union(
        y.shifted_union(z)
    )


@settings(max_examples=25, deadline=None)
@given(colored_st(max_n=3), colored_st(max_n=3))
def test_alpha_sum_property(x, y):
    total = sum(splitting_count(x, y, u) for u in matching_unions(x, y))
    assert total == math.comb(x.size + y.size, x.size)


@settings(max_examples=40, deadline=None)
@given(partitions_st)
def test_standardize_blocks_fixed_point(p):
    assert standardize_blocks(p.blocks) == p
