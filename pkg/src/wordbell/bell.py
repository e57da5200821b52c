"""Bell polynomials: classical, word, colored and shuffle variants.

Four incarnations of the same combinatorics live here:

* classical complete/partial Bell polynomials as exact symbolic polynomials
  in a1, a2, ... and their fast numeric evaluation;
* word Bell polynomials in the Phi basis, generated by the ladder operator
  that adjoins a new largest element to a block;
* their normalized images on the dual (Psi) side for any color sequence;
* shuffle-power Bell polynomials for arbitrary word polynomial arguments.

The module also hosts the specialization morphisms connecting symmetric
functions to the colored dual algebra, plus report-style verifiers for the
identities relating all of the above.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    ColoredSetPartition,
    ColorSequence,
    SetPartition,
    colored_partitions,
    int_partitions,
)
from .hopf import (
    PHI,
    PSI,
    monomial_to_phi,
    phi_elem,
    phi_product,
    phi_to_monomial,
    psi_elem,
    psi_product,
)
from .lincomb import BasisError, LinComb, TPoly
from .realization import (
    complete_s,
    expand_s_on,
    letters,
    scaled_complete,
    series_shuffle_power,
    shuffle,
    word_degree,
    word_one,
    word_zero,
)
from .sympoly import SparsePoly

# ---------------------------------------------------------------------------
# classical Bell polynomials (symbolic)


@lru_cache(maxsize=None)
def _marked_exp_row(m: int) -> tuple[tuple[int, SparsePoly], ...]:
    """Row m of exp(x * sum a_j t^j / j!): pairs (k, coefficient of x^k t^m)."""
    if m == 0:
        return ((0, SparsePoly.const(1)),)
    acc: dict[int, SparsePoly] = {}
    for j in range(1, m + 1):
        f_j = SparsePoly.var(j) * Fraction(1, math.factorial(j))
        for k, poly in _marked_exp_row(m - j):
            term = f_j * poly * Fraction(j, m)
            prev = acc.get(k + 1)
            acc[k + 1] = term if prev is None else prev + term
    return tuple(sorted((k, p) for k, p in acc.items() if p))


def partial_bell_poly(n: int, k: int) -> SparsePoly:
    """B_{n,k} as an exact polynomial in the variables a1, a2, ..."""
    if k < 0 or k > n:
        return SparsePoly.zero()
    for kk, poly in _marked_exp_row(n):
        if kk == k:
            return poly * math.factorial(n)
    return SparsePoly.zero()


def complete_bell_poly(n: int) -> SparsePoly:
    """A_n = sum_k B_{n,k}, with A_0 = 1."""
    total = SparsePoly.zero()
    for _, poly in _marked_exp_row(n):
        total = total + poly
    return total * math.factorial(n)


# ---------------------------------------------------------------------------
# evaluation


def seq_values(a):
    """Normalize a sequence description to a callable m -> Fraction.

    Accepts a ColorSequence, a callable, or an indexable of values for
    a_1, a_2, ... (finite lists are zero-extended).
    """
    if isinstance(a, ColorSequence):
        return lambda m: Fraction(a(m))
    if callable(a):
        return lambda m: Fraction(a(m))
    values = [Fraction(v) for v in a]
    return lambda m: values[m - 1] if m <= len(values) else Fraction(0)


def eval_partial_bell_direct(a, n: int, k: int) -> Fraction:
    """B_{n,k}(a) summed over integer partitions (no fast paths)."""
    if k < 0 or k > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1) if k == 0 else Fraction(0)
    value = seq_values(a)
    total = Fraction(0)
    for lam in int_partitions(n):
        if len(lam) != k:
            continue
        coeff = Fraction(math.factorial(n))
        mult: dict[int, int] = {}
        for part in lam:
            coeff /= math.factorial(part)
            mult[part] = mult.get(part, 0) + 1
        for m in mult.values():
            coeff /= math.factorial(m)
        prod = Fraction(1)
        for part in lam:
            prod *= value(part)
        total += coeff * prod
    return total


def eval_partial_bell(a, n: int, k: int) -> Fraction:
    """Exact B_{n,k}(a), routing through the a1-normalizations when they apply.

    a1 not in {0, 1} reduces to B_{n,k}(1, a2/a1, ...) scaled by a1^k; a1 = 0
    shifts to B_{n-k,k} of the sequence a_{j+1}/(j+1).  Both reductions agree
    with the direct evaluation (tested), so they are safe fast paths.
    """
    if k < 0 or k > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1) if k == 0 else Fraction(0)
    value = seq_values(a)
    a1 = value(1)
    if a1 == 0:
        if n < k:
            return Fraction(0)
        shifted = lambda m: value(m + 1) / (m + 1)
        return (
            Fraction(math.factorial(n), math.factorial(n - k))
            * eval_partial_bell_direct(shifted, n - k, k)
        )
    if a1 != 1:
        normalized = lambda m: value(m) / a1
        return a1**k * eval_partial_bell_direct(normalized, n, k)
    return eval_partial_bell_direct(value, n, k)


def eval_complete_bell(a, n: int) -> Fraction:
    """A_n(a) by the binomial recurrence A_{m+1} = sum C(m,i) a_{i+1} A_{m-i}."""
    value = seq_values(a)
    table = [Fraction(1)]
    for m in range(n):
        nxt = Fraction(0)
        for i in range(m + 1):
            nxt += math.comb(m, i) * value(i + 1) * table[m - i]
        table.append(nxt)
    return table[n]


def eval_complete_bell_via_gf(a, n: int) -> Fraction:
    """A_n(a) from the exponential generating function (validation route)."""
    from . import series

    value = seq_values(a)
    arg = [Fraction(0)] + [value(i) / math.factorial(i) for i in range(1, n + 1)]
    return series.exp(arg, n)[n] * math.factorial(n)


# ---------------------------------------------------------------------------
# word Bell polynomials in the Phi basis


def deriv(x: LinComb) -> LinComb:
    """The ladder operator: adjoin n+1 to each block in turn; kills scalars."""
    if x.basis != PHI:
        raise BasisError("the ladder operator acts on the Phi basis")
    out: dict = {}
    for key, c in x.items():
        if not isinstance(key, SetPartition):
            raise BasisError("the ladder operator is defined on uncolored keys")
        n = key.size
        for i in range(key.part_count):
            blocks = list(key.blocks)
            blocks[i] = blocks[i] + (n + 1,)
            new = SetPartition._trusted(tuple(blocks))
            acc = out.get(new, 0) + c
            if acc:
                out[new] = acc
            else:
                del out[new]
    return LinComb._raw(PHI, out)


def _append_singleton(x: LinComb) -> LinComb:
    return phi_product(x, phi_elem(SetPartition.singletons(1)))


def word_bell_tpoly(n: int) -> TPoly:
    """The t-marked operator power: coefficient of t^k is the partial word
    Bell polynomial with k blocks."""
    zero = LinComb.zero(PHI)
    coeffs = [phi_elem(SetPartition())]
    for _ in range(n):
        nxt = [deriv(coeffs[0])]
        for k in range(1, len(coeffs) + 1):
            term = _append_singleton(coeffs[k - 1])
            if k < len(coeffs):
                term = term + deriv(coeffs[k])
            nxt.append(term)
        coeffs = nxt
    return TPoly(zero, coeffs)


def word_partial_bell(n: int, k: int) -> LinComb:
    return word_bell_tpoly(n).coeff(k)


def word_complete_bell(n: int) -> LinComb:
    return word_bell_tpoly(n).at_one()


def deriv_via_monomial(x: LinComb) -> LinComb:
    """The ladder operator written through the monomial basis.

    Rename the Phi coordinates as M coordinates, multiply by the one-letter
    complete function inside the algebra, rename back, and subtract the plain
    right multiplication.  Agrees with :func:`deriv` on every input.
    """
    if x.basis != PHI:
        raise BasisError("expected the Phi basis")
    as_m = x.retag("M")
    in_phi = monomial_to_phi(as_m)
    multiplied = _append_singleton(in_phi)
    back = phi_to_monomial(multiplied).retag(PHI)
    return back - _append_singleton(x)


# ---------------------------------------------------------------------------
# normalized Bell polynomials on the dual side


def psi_atom(seq: ColorSequence, m: int) -> LinComb:
    """The degree-m generator: the sum of Psi over all one-block colorings."""
    out: dict = {}
    block = tuple(range(1, m + 1))
    for c in range(1, seq(m) + 1):
        out[ColoredSetPartition._trusted(((block, c),), seq)] = 1
    return LinComb._raw(PSI, out)


def _psi_series_power(series: list[LinComb], k: int, order: int, zero: LinComb, unit: LinComb):
    result = [unit] + [zero] * order
    base = list(series[: order + 1]) + [zero] * max(0, order + 1 - len(series))
    while k:
        if k & 1:
            result = _psi_series_mul(result, base, order, zero)
        base = _psi_series_mul(base, base, order, zero)
        k >>= 1
    return result


def _psi_series_mul(a, b, order, zero):
    out = [zero] * (order + 1)
    for i, ca in enumerate(a[: order + 1]):
        if not ca:
            continue
        for j in range(order - i + 1):
            if b[j]:
                out[i + j] = out[i + j] + psi_product(ca, b[j])
    return out


def colored_psi_bell(seq: ColorSequence, n: int, k: int, generators=None) -> LinComb:
    """The normalized partial Bell polynomial of the atomic generators,
    computed as [t^n] (sum_i F_i t^i)^k / k! in the dual algebra.

    Equals the plain sum of Psi over all colored partitions of size n with
    exactly k parts.
    """
    if k < 0 or k > n:
        return LinComb.zero(PSI)
    unit = psi_elem(ColoredSetPartition.empty(seq))
    zero = LinComb.zero(PSI)
    if generators is None:
        generators = [psi_atom(seq, m) for m in range(1, n + 1)]
    series = [zero] + list(generators[:n])
    powered = _psi_series_power(series, k, n, zero, unit)
    return powered[n] * Fraction(1, math.factorial(k))


def colored_psi_complete(seq: ColorSequence, n: int) -> LinComb:
    total = LinComb.zero(PSI)
    for k in range(0 if n == 0 else 1, n + 1):
        total = total + colored_psi_bell(seq, n, k)
    return total


# ---------------------------------------------------------------------------
# shuffle-power Bell polynomials for word polynomial arguments


def shuffle_bell_series(generators, k: int, order: int) -> list[LinComb]:
    """Coefficients of (sum_i F_i t^i)^(shuffle k) / k! up to t^order.

    ``generators`` maps degree i >= 1 to the word polynomial F_i (list with
    index 0 unused, or mapping).
    """
    series = [word_zero()]
    for i in range(1, order + 1):
        try:
            f = generators[i]
        except (IndexError, KeyError):
            f = word_zero()
        series.append(f)
    powered = series_shuffle_power(series, k, order)
    scale = Fraction(1, math.factorial(k))
    return [c * scale for c in powered]


def shuffle_partial_bell(generators, n: int, k: int) -> LinComb:
    """[t^n] of the k-fold shuffle power over k!, for homogeneous generators."""
    for i in range(1, n + 1):
        try:
            f = generators[i]
        except (IndexError, KeyError):
            continue
        if f and word_degree(f) != i:
            raise ValueError(f"generator {i} is not homogeneous of degree {i}")
    if k == 0:
        return word_one() if n == 0 else word_zero()
    return shuffle_bell_series(generators, k, n)[n]


def shuffle_complete_bell(generators, n: int) -> LinComb:
    total = word_one() if n == 0 else word_zero()
    for k in range(1, n + 1):
        total = total + shuffle_partial_bell(generators, n, k)
    return total


# ---------------------------------------------------------------------------
# the specialization morphisms


@lru_cache(maxsize=None)
def h_in_c(n: int) -> SparsePoly:
    """The complete function h_n written in the generators c_1, c_2, ...

    h_n = sum over partitions lambda of n of c_lambda, where c_lambda divides
    the monomial by the multiplicities' factorials.
    """
    total = SparsePoly.zero()
    for lam in int_partitions(n):
        mono = SparsePoly.const(1)
        mult: dict[int, int] = {}
        for part in lam:
            mono = mono * SparsePoly.var(part)
            mult[part] = mult.get(part, 0) + 1
        coeff = Fraction(1)
        for m in mult.values():
            coeff /= math.factorial(m)
        total = total + mono * coeff
    return total


def alpha(p: SparsePoly) -> LinComb:
    """The embedding of Sym: substitute c_i -> Psi of the one-block partition
    of size i and evaluate in the (commutative) uncolored dual algebra."""
    unit = psi_elem(SetPartition())
    return p.substitute(
        lambda i: psi_elem(SetPartition.single_block(i)),
        mul=lambda a, b: psi_product(a, b) if isinstance(a, LinComb) else b * a,
        one=unit,
    )


def beta(x: LinComb, seq: ColorSequence) -> LinComb:
    """Color each uncolored key in all ways allowed by the sequence."""
    if x.basis != PSI:
        raise BasisError("beta acts on the Psi basis")
    from itertools import product as _product

    out: dict = {}
    for key, c in x.items():
        ranges = []
        possible = True
        for b in key.blocks:
            bound = seq(len(b))
            if bound == 0:
                possible = False
                break
            ranges.append(range(1, bound + 1))
        if not possible:
            continue
        for colors in _product(*ranges):
            colored = ColoredSetPartition._trusted(
                tuple(zip(key.blocks, colors)), seq
            )
            acc = out.get(colored, 0) + c
            if acc:
                out[colored] = acc
            else:
                del out[colored]
    return LinComb._raw(PSI, out)


def gamma(x: LinComb) -> Fraction:
    """The character sending every basis key of size n to 1/n!."""
    total = Fraction(0)
    for key, c in x.items():
        total += Fraction(c) / math.factorial(key.size)
    return total


def gamma_beta(x: LinComb, a) -> Fraction:
    """gamma(beta_a(x)) computed through weights, valid for any rational
    sequence: a key pi contributes prod_B a_{#B} / |pi|!."""
    value = seq_values(a)
    total = Fraction(0)
    for key, c in x.items():
        weight = Fraction(1)
        for b in key.blocks:
            weight *= value(len(b))
        total += Fraction(c) * weight / math.factorial(key.size)
    return total


def gamma_beta_alpha_h(n: int, a) -> Fraction:
    """The composite of the specialization diagram applied to h_n."""
    return gamma_beta(alpha(h_in_c(n)), a)


def _random_rational_sequence(rng: random.Random, length: int) -> list[Fraction]:
    return [
        Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(length)
    ]


def morphism_diagram_report(
    max_n: int = 6,
    sequences: tuple[ColorSequence, ...] | None = None,
    rational_trials: int = 2,
    seed: int = 0,
    pair_max: int = 5,
) -> list[dict]:
    """Verify that the specialization diagram commutes and that the character
    is multiplicative; returns one report entry per check."""
    from .combinatorics import FACTORIAL, IDEMPOTENT, ONES, SHIFTED_FACTORIAL

    if sequences is None:
        sequences = (ONES, FACTORIAL, SHIFTED_FACTORIAL, IDEMPOTENT)
    report = []
    for seq in sequences:
        failure = None
        for n in range(max_n + 1):
            got = gamma_beta_alpha_h(n, seq)
            want = eval_complete_bell(seq, n) / math.factorial(n)
            if got != want:
                failure = {"n": n, "got": str(got), "want": str(want)}
                break
            materialized = gamma(beta(alpha(h_in_c(n)), seq))
            if materialized != want:
                failure = {"n": n, "route": "materialized", "got": str(materialized)}
                break
        report.append(
            {
                "identity": f"diagram h_n -> A_n(a)/n! [{seq.spec_string()}]",
                "range": f"n <= {max_n}",
                "status": "fail" if failure else "pass",
                "counterexample": failure,
            }
        )
    rng = random.Random(seed)
    for t in range(rational_trials):
        a = _random_rational_sequence(rng, max_n + 1)
        failure = None
        for n in range(max_n + 1):
            got = gamma_beta_alpha_h(n, a)
            want = eval_complete_bell(a, n) / math.factorial(n)
            if got != want:
                failure = {"n": n, "a": [str(v) for v in a], "got": str(got)}
                break
        report.append(
            {
                "identity": f"diagram h_n -> A_n(a)/n! [random rational #{t + 1}]",
                "range": f"n <= {max_n}",
                "status": "fail" if failure else "pass",
                "counterexample": failure,
            }
        )
    for seq in sequences:
        failure = None
        keys_by_size = {
            m: colored_partitions(seq, m) for m in range(1, pair_max)
        }
        for i in range(1, pair_max):
            for j in range(1, pair_max - i + 1):
                for ki in keys_by_size[i]:
                    for kj in keys_by_size[j]:
                        prod = psi_product(psi_elem(ki), psi_elem(kj))
                        if gamma(prod) != gamma(psi_elem(ki)) * gamma(psi_elem(kj)):
                            failure = {"left": str(ki.parts), "right": str(kj.parts)}
                            break
                    if failure:
                        break
                if failure:
                    break
            if failure:
                break
        report.append(
            {
                "identity": f"gamma multiplicative [{seq.spec_string()}]",
                "range": f"total size <= {pair_max}",
                "status": "fail" if failure else "pass",
                "counterexample": failure,
            }
        )
    return report


# ---------------------------------------------------------------------------
# word identities (S-function form of the shuffle Bell polynomials)


def mixed_complete_family(a_prime, a_second, order: int) -> list[LinComb]:
    """The generators S_1(A') shuffled with S_{m-1}(A''), degrees 1..order."""
    out = [word_zero()]
    s1 = complete_s(1, a_prime)
    for m in range(1, order + 1):
        out.append(shuffle(s1, complete_s(m - 1, a_second)))
    return out


@lru_cache(maxsize=None)
def _mixed_bell_series_cached(a_prime, a_second, k: int, order: int):
    family = mixed_complete_family(list(a_prime), list(a_second), order)
    return shuffle_bell_series(family, k, order)


def mixed_bell_series(a_prime, a_second, k: int, order: int) -> list[LinComb]:
    """The series of B^{A'}_{.,k}(A'') by the shuffle-power definition."""
    return _mixed_bell_series_cached(tuple(a_prime), tuple(a_second), k, order)


def prop_s_form_check(n: int, k: int) -> dict:
    """B^{A'}_{n,k}(A'') equals S_{singletons k}(A') shuffled with
    S_{{1..n-k}}(k A''), at the faithful truncation."""
    a_prime = letters(1, max(k, 1))
    a_second = letters(2, max(n - k, 1))
    lhs = mixed_bell_series(a_prime, a_second, k, n)[n]
    rhs = shuffle(
        expand_s_on(SetPartition.singletons(k), a_prime),
        scaled_complete(n - k, k, a_second),
    )
    ok = lhs == rhs
    return {
        "identity": "partial Bell as S-function product",
        "range": f"n={n}, k={k}",
        "status": "pass" if ok else "fail",
        "counterexample": None if ok else {"n": n, "k": k},
    }


def binomiality_check(n: int, k1: int, k2: int) -> dict:
    """C(k1+k2, k1) B_{n,k1+k2} = sum_i B_{i,k1} shuffle B_{n-i,k2}."""
    k = k1 + k2
    a_prime = letters(1, max(k, 1))
    a_second = letters(2, max(n - min(k1, k2), 1))
    series_k = mixed_bell_series(a_prime, a_second, k, n)
    series_1 = mixed_bell_series(a_prime, a_second, k1, n)
    series_2 = mixed_bell_series(a_prime, a_second, k2, n)
    lhs = series_k[n] * math.comb(k, k1)
    rhs = word_zero()
    for i in range(n + 1):
        if series_1[i] and series_2[n - i]:
            rhs = rhs + shuffle(series_1[i], series_2[n - i])
    ok = lhs == rhs
    return {
        "identity": "binomiality of partial word Bell polynomials",
        "range": f"n={n}, k1={k1}, k2={k2}",
        "status": "pass" if ok else "fail",
        "counterexample": None if ok else {"n": n, "k1": k1, "k2": k2},
    }


def convolution_check(n: int, k: int, truncation: int = 2) -> dict:
    """The alphabet-sum convolution, with the index shift that balances the
    degrees: S_(k singletons)(A') shuffle B_{n,k}(A'') equals
    sum_i B_{i,k}(A''_1) shuffle B_{n+k-i,k}(A''_2) for A'' = A''_1 + A''_2.
    """
    a_prime = letters(1, truncation)
    a_one = letters(2, truncation)
    a_two = letters(3, truncation)
    a_union = a_one + a_two
    top = n
    series_u = mixed_bell_series(a_prime, a_union, k, top)
    series_1 = mixed_bell_series(a_prime, a_one, k, top)
    series_2 = mixed_bell_series(a_prime, a_two, k, top)
    lhs = shuffle(expand_s_on(SetPartition.singletons(k), a_prime), series_u[n])
    rhs = word_zero()
    for i in range(k, n + 1):
        j = n + k - i
        if j < k or j > top:
            continue
        if series_1[i] and series_2[j]:
            rhs = rhs + shuffle(series_1[i], series_2[j])
    ok = lhs == rhs
    return {
        "identity": "convolution over an alphabet sum",
        "range": f"n={n}, k={k}, L={truncation}",
        "status": "pass" if ok else "fail",
        "counterexample": None if ok else {"n": n, "k": k},
    }


def composition_check(n: int, k1: int, k2: int, truncation: int = 2) -> dict:
    """Composing partial word Bell polynomials telescopes:

    B_{n,k1}(args F_m = B^{A'}_{k2+m-1,k2}(A'')) equals
    (k1 k2)! / (k1! k2!^{k1}) times B^{A'}_{n-k1+k1k2, k1k2}(A'').
    """
    a_prime = letters(1, truncation)
    a_second = letters(2, truncation)
    top_arg = k2 + n - 1
    base = mixed_bell_series(a_prime, a_second, k2, top_arg)
    args = [word_zero()]
    for m in range(1, n + 1):
        args.append(base[k2 + m - 1])
    powered = series_shuffle_power(args, k1, n)
    lhs = powered[n] * Fraction(1, math.factorial(k1))
    n_target = n - k1 + k1 * k2
    rhs_series = mixed_bell_series(a_prime, a_second, k1 * k2, n_target)
    prefactor = Fraction(
        math.factorial(k1 * k2),
        math.factorial(k1) * math.factorial(k2) ** k1,
    )
    rhs = rhs_series[n_target] * prefactor
    ok = lhs == rhs
    return {
        "identity": "composition of partial word Bell polynomials",
        "range": f"n={n}, k1={k1}, k2={k2}, L={truncation}",
        "status": "pass" if ok else "fail",
        "counterexample": None if ok else {"n": n, "k1": k1, "k2": k2},
    }


def _convolution_batch(max_n: int, max_k: int, truncation: int = 2) -> list[dict]:
    # One series power per (alphabet, k); individual n slices are then cheap.
    report = []
    a_prime = letters(1, truncation)
    a_one = letters(2, truncation)
    a_two = letters(3, truncation)
    a_union = a_one + a_two
    for k in range(1, max_k + 1):
        series_u = mixed_bell_series(a_prime, a_union, k, max_n)
        series_1 = mixed_bell_series(a_prime, a_one, k, max_n)
        series_2 = mixed_bell_series(a_prime, a_two, k, max_n)
        singles = expand_s_on(SetPartition.singletons(k), a_prime)
        for n in range(k, max_n + 1):
            lhs = shuffle(singles, series_u[n])
            rhs = word_zero()
            for i in range(k, n + 1):
                j = n + k - i
                if j < k or j > max_n:
                    continue
                if series_1[i] and series_2[j]:
                    rhs = rhs + shuffle(series_1[i], series_2[j])
            ok = lhs == rhs
            report.append(
                {
                    "identity": "convolution over an alphabet sum",
                    "range": f"n={n}, k={k}, L={truncation}",
                    "status": "pass" if ok else "fail",
                    "counterexample": None if ok else {"n": n, "k": k},
                }
            )
    return report


def _composition_batch(max_n: int, max_k: int) -> list[dict]:
    report = []
    for k1 in range(1, max_k + 1):
        for k2 in range(1, max_k + 1):
            truncation = 2 if k1 * k2 <= 4 else 1
            a_prime = letters(1, truncation)
            a_second = letters(2, truncation)
            base = mixed_bell_series(a_prime, a_second, k2, k2 + max_n - 1)
            args = [word_zero()] + [base[k2 + m - 1] for m in range(1, max_n + 1)]
            powered = series_shuffle_power(args, k1, max_n)
            top_target = max_n - k1 + k1 * k2
            rhs_series = mixed_bell_series(a_prime, a_second, k1 * k2, top_target)
            prefactor = Fraction(
                math.factorial(k1 * k2),
                math.factorial(k1) * math.factorial(k2) ** k1,
            )
            for n in range(k1, max_n + 1):
                lhs = powered[n] * Fraction(1, math.factorial(k1))
                rhs = rhs_series[n - k1 + k1 * k2] * prefactor
                ok = lhs == rhs
                report.append(
                    {
                        "identity": "composition of partial word Bell polynomials",
                        "range": f"n={n}, k1={k1}, k2={k2}, L={truncation}",
                        "status": "pass" if ok else "fail",
                        "counterexample": None if ok else {"n": n, "k1": k1, "k2": k2},
                    }
                )
    return report


def identity_suite(which: str = "all", max_n: int = 5, max_k: int = 3) -> list[dict]:
    """Run the selected word identities over the full grid.

    ``which`` is one of ``completeToS`` (the S-function form), ``binomiality``,
    ``convolution``, ``composition`` or ``all``.  Truncations: the first two
    families are checked at the faithful truncation; the convolution and
    composition checks run over two-letter alphabets (one-letter for the
    largest composition cases), which keeps every check exact.
    """
    report = []
    if which in ("completeToS", "all"):
        for n in range(1, max_n + 1):
            for k in range(1, min(n, max_k) + 1):
                report.append(prop_s_form_check(n, k))
    if which in ("binomiality", "all"):
        for n in range(1, max_n + 1):
            for k1 in range(1, max_k + 1):
                for k2 in range(k1, max_k + 1):
                    if k1 + k2 <= n:
                        report.append(binomiality_check(n, k1, k2))
    if which in ("convolution", "all"):
        report.extend(_convolution_batch(max_n, max_k))
    if which in ("composition", "all"):
        report.extend(_composition_batch(max_n, max_k))
    return report
