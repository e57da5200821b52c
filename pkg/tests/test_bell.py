"""Tests for classical, word, colored and shuffle Bell polynomials."""

import math
import random
from fractions import Fraction

import pytest

from wordbell.bell import (
    alpha,
    beta,
    colored_psi_bell,
    colored_psi_complete,
    complete_bell_poly,
    deriv,
    deriv_via_monomial,
    eval_complete_bell,
    eval_complete_bell_via_gf,
    eval_partial_bell,
    eval_partial_bell_direct,
    gamma,
    gamma_beta_alpha_h,
    h_in_c,
    identity_suite,
    morphism_diagram_report,
    partial_bell_poly,
    psi_atom,
    shuffle_complete_bell,
    shuffle_partial_bell,
    word_bell_tpoly,
    word_complete_bell,
    word_partial_bell,
)
from wordbell.combinatorics import (
    FACTORIAL,
    IDEMPOTENT,
    ONES,
    SHIFTED_FACTORIAL,
    TREE,
    ColorSequence,
    SetPartition,
    colored_partitions,
    set_partitions,
)
from wordbell.hopf import phi_elem, psi_elem, psi_product
from wordbell.lincomb import BasisError, LinComb
from wordbell.realization import expand_phi, expand_psi, letters
from wordbell.sympoly import SparsePoly


def sp(blocks):
    return SetPartition(blocks)


# ---------------------------------------------------------------------------
# oracles


def stirling2(n, k):
    if n == 0 and k == 0:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def marked_gf_coefficient(a, n, k):
    """[x^k t^n / n!] exp(x sum a_i t^i / i!) computed with plain lists."""
    # rows[m] maps x-degree -> coefficient of t^m
    rows = [{0: Fraction(1)}]
    for m in range(1, n + 1):
        acc = {}
        for j in range(1, m + 1):
            f_j = Fraction(a[j - 1]) / math.factorial(j)
            if not f_j:
                continue
            for deg, c in rows[m - j].items():
                acc[deg + 1] = acc.get(deg + 1, Fraction(0)) + Fraction(j, m) * f_j * c
        rows.append(acc)
    return rows[n].get(k, Fraction(0)) * math.factorial(n)


# ---------------------------------------------------------------------------
# classical symbolic and numeric


def test_symbolic_basics():
    assert complete_bell_poly(0) == 1
    assert partial_bell_poly(0, 0) == 1
    assert partial_bell_poly(3, 5) == SparsePoly.zero()
    assert partial_bell_poly(3, 2) == SparsePoly.var(1) * SparsePoly.var(2) * 3
    # A_n = sum_k B_{n,k}
    for n in range(7):
        total = SparsePoly.zero()
        for k in range(n + 1):
            total = total + partial_bell_poly(n, k)
        assert total == complete_bell_poly(n)


def test_stirling_specialization_symbolic():
    for n in range(10):
        for k in range(n + 1):
            value = partial_bell_poly(n, k).evaluate(lambda i: 1)
            assert value == stirling2(n, k)


def test_partial_bell_matches_double_gf():
    rng = random.Random(11)
    for _ in range(3):
        a = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(9)]
        for n in range(9):
            for k in range(n + 1):
                assert eval_partial_bell(a, n, k) == marked_gf_coefficient(a, n, k)


def test_eval_closed_forms():
    assert eval_partial_bell(FACTORIAL, 4, 2) == 36
    assert eval_partial_bell(IDEMPOTENT, 4, 2) == 24
    assert eval_partial_bell(SHIFTED_FACTORIAL, 4, 2) == 11
    assert eval_partial_bell(TREE, 3, 2) == 6
    assert eval_partial_bell(ONES, 4, 2) == 7 == len(word_partial_bell(4, 2))
    for n in range(9):
        for k in range(1, n + 1):
            lah = math.comb(n - 1, k - 1) * math.factorial(n) // math.factorial(k)
            assert eval_partial_bell(FACTORIAL, n, k) == lah
            idem = math.comb(n, k) * k ** (n - k)
            assert eval_partial_bell(IDEMPOTENT, n, k) == idem
            tree = math.comb(n - 1, k - 1) * n ** (n - k)
            assert eval_partial_bell(TREE, n, k) == tree


def test_stirling1_against_cycle_enumeration():
    from itertools import permutations

    for n in range(7):
        counts = {}
        for line in permutations(range(1, n + 1)):
            seen = [False] * (n + 1)
            cycles = 0
            for start in range(1, n + 1):
                if seen[start]:
                    continue
                cycles += 1
                x = start
                while not seen[x]:
                    seen[x] = True
                    x = line[x - 1]
            counts[cycles] = counts.get(cycles, 0) + 1
        for k in range(1, n + 1):
            assert eval_partial_bell(SHIFTED_FACTORIAL, n, k) == counts.get(k, 0)


def test_fast_paths_agree_with_direct():
    rng = random.Random(23)
    for _ in range(10):
        a = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(8)]
        zero_head = [Fraction(0)] + a[1:]
        for seq in (a, zero_head):
            for n in range(8):
                for k in range(n + 1):
                    assert eval_partial_bell(seq, n, k) == eval_partial_bell_direct(
                        seq, n, k
                    )


def test_complete_recurrence_vs_gf():
    rng = random.Random(5)
    for _ in range(5):
        a = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(8)]
        for n in range(8):
            assert eval_complete_bell(a, n) == eval_complete_bell_via_gf(a, n)


def test_counts_match_enumeration():
    for seq in (ONES, FACTORIAL, SHIFTED_FACTORIAL, IDEMPOTENT):
        for n in range(7):
            pool = colored_partitions(seq, n)
            assert len(pool) == eval_complete_bell(seq, n)
            for k in range(n + 1):
                count = sum(1 for p in pool if p.part_count == k)
                assert count == eval_partial_bell(seq, n, k)


# ---------------------------------------------------------------------------
# ladder operator and word Bell polynomials


def test_deriv_examples():
    x = phi_elem(sp([(1, 3), (2, 4)]))
    got = deriv(x)
    assert got == phi_elem(sp([(1, 3, 5), (2, 4)])) + phi_elem(sp([(1, 3), (2, 4, 5)]))
    assert deriv(phi_elem(SetPartition())) == LinComb.zero("Phi")
    with pytest.raises(BasisError):
        deriv(psi_elem(sp([(1,)])))


def test_deriv_via_monomial_identity():
    for n in range(6):
        for p in set_partitions(n):
            e = phi_elem(p)
            assert deriv(e) == deriv_via_monomial(e)


def test_word_partial_bell_four_two():
    got = word_partial_bell(4, 2)
    keys = [
        [(1, 3, 4), (2,)],
        [(1, 2, 3), (4,)],
        [(1, 2, 4), (3,)],
        [(1, 2), (3, 4)],
        [(1, 3), (2, 4)],
        [(1, 4), (2, 3)],
        [(1,), (2, 3, 4)],
    ]
    assert got == LinComb("Phi", {sp(b): 1 for b in keys})


def test_word_bell_enumeration():
    assert word_complete_bell(0) == phi_elem(SetPartition())
    for n in range(7):
        assert word_complete_bell(n) == LinComb(
            "Phi", {p: 1 for p in set_partitions(n)}
        )
        for k in range(n + 1):
            want = LinComb(
                "Phi", {p: 1 for p in set_partitions(n) if p.part_count == k}
            )
            assert word_partial_bell(n, k) == want
    # trailing zeros trimmed: degree of the t-polynomial is n
    assert word_bell_tpoly(4).degree == 4


# ---------------------------------------------------------------------------
# colored dual-side Bell polynomials


def test_colored_psi_bell_enumerates():
    for seq in (ONES, FACTORIAL, SHIFTED_FACTORIAL, IDEMPOTENT):
        for n in range(6):
            for k in range(n + 1):
                got = colored_psi_bell(seq, n, k)
                want = LinComb(
                    "Psi",
                    {p: 1 for p in colored_partitions(seq, n) if p.part_count == k},
                )
                assert got == want
            assert colored_psi_complete(seq, n) == LinComb(
                "Psi", {p: 1 for p in colored_partitions(seq, n)}
            )


def test_colored_psi_bell_counts():
    assert len(colored_psi_bell(FACTORIAL, 4, 2)) == 36
    assert gamma(colored_psi_bell(FACTORIAL, 4, 2)) == Fraction(36, 24)
    single = colored_psi_bell(ONES, 3, 3)
    assert len(single) == 1
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert len(colored_psi_bell(SHIFTED_FACTORIAL, n, k)) == eval_partial_bell(
                SHIFTED_FACTORIAL, n, k
            )


def test_psi_atom():
    atom = psi_atom(IDEMPOTENT, 2)
    assert len(atom) == 2
    assert all(key.part_count == 1 and key.size == 2 for key in atom.keys())


# ---------------------------------------------------------------------------
# shuffle Bell polynomials


def test_shuffle_bell_trivial_cases():
    family = {m: expand_phi(SetPartition.single_block(m), 3) for m in range(1, 5)}
    assert shuffle_partial_bell(family, 0, 0) == LinComb.term("Word", ())
    assert not shuffle_partial_bell(family, 3, 0)
    for n in range(1, 4):
        assert shuffle_partial_bell(family, n, 1) == family[n]


def test_shuffle_bell_families():
    for n in range(1, 6):
        phi_family = {m: expand_phi(SetPartition.single_block(m), n) for m in range(1, n + 1)}
        psi_family = {m: expand_psi(SetPartition.single_block(m), n) for m in range(1, n + 1)}
        for k in range(1, n + 1):
            want_phi = LinComb.zero("Word")
            want_psi = LinComb.zero("Word")
            for p in set_partitions(n):
                if p.part_count == k:
                    want_phi = want_phi + expand_phi(p, n)
                    want_psi = want_psi + expand_psi(p, n)
            assert shuffle_partial_bell(phi_family, n, k) == want_phi
            assert shuffle_partial_bell(psi_family, n, k) == want_psi
        total = shuffle_complete_bell(phi_family, n)
        want = LinComb.zero("Word")
        for p in set_partitions(n):
            want = want + expand_phi(p, n)
        assert total == want


def test_shuffle_bell_rejects_inhomogeneous():
    bad = {1: expand_phi(SetPartition.single_block(2), 2)}
    with pytest.raises(ValueError):
        shuffle_partial_bell(bad, 2, 1)


# ---------------------------------------------------------------------------
# morphisms


def test_alpha_expands_h_to_all_partitions():
    for n in range(6):
        got = alpha(h_in_c(n))
        assert got == LinComb("Psi", {p: 1 for p in set_partitions(n)})


def test_beta_colors_keys():
    x = psi_elem(sp([(1, 2), (3,)]))
    got = beta(x, IDEMPOTENT)
    assert len(got) == 2  # two colors for the 2-block, one for the singleton
    assert all(key.underlying() == sp([(1, 2), (3,)]) for key in got.keys())
    involutions = beta(psi_elem(sp([(1, 2, 3)])), ColorSequence.explicit([1, 1]))
    assert not involutions


def test_gamma_values_and_diagram():
    assert gamma(psi_elem(sp([(1, 2), (3,)]))) == Fraction(1, 6)
    for seq in (ONES, FACTORIAL, SHIFTED_FACTORIAL, IDEMPOTENT):
        for n in range(6):
            got = gamma_beta_alpha_h(n, seq)
            assert got == eval_complete_bell(seq, n) / math.factorial(n)
    # ones: the composite gives Bell numbers over n!
    for n in range(6):
        got = gamma_beta_alpha_h(n, ONES)
        assert got * math.factorial(n) == eval_complete_bell(ONES, n)


def test_morphism_diagram_report_passes():
    report = morphism_diagram_report(max_n=5, pair_max=4)
    assert all(item["status"] == "pass" for item in report)


def test_dual_pairing_of_both_bell_polynomials():
    # pairing the Phi-side and Psi-side partial Bell polynomials counts the
    # partitions with k blocks, independently of the block-size morphism
    from wordbell.hopf import duality_pairing
    from wordbell.symfun import h_k_part

    for n in range(6):
        for k in range(n + 1):
            dual_side = alpha(h_k_part(n, k))
            got = duality_pairing(word_partial_bell(n, k), dual_side)
            assert got == stirling2(n, k)


# ---------------------------------------------------------------------------
# the word identity suite (spot cases; the full grid runs in acceptance)


def test_identity_suite_spot_cases():
    from wordbell.bell import (
        binomiality_check,
        composition_check,
        convolution_check,
        prop_s_form_check,
    )

    assert prop_s_form_check(3, 1)["status"] == "pass"
    assert prop_s_form_check(4, 2)["status"] == "pass"
    assert binomiality_check(3, 1, 1)["status"] == "pass"
    assert convolution_check(3, 1)["status"] == "pass"
    assert composition_check(4, 2, 1)["status"] == "pass"
    assert composition_check(4, 1, 2)["status"] == "pass"
