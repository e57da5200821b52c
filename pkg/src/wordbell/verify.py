"""Machine-readable verification suites.

Each suite replays a family of identities at a configurable size bound and
returns a list of report items {identity, range, status, counterexample};
the command line wraps these in JSON and turns failures into exit codes.
Oracles used here (Stirling recurrences, brute-force enumerations) are
deliberately independent of the code paths they validate.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

from . import bell, hopf, munthekaas, realization, symfun
from .combinatorics import (
    FACTORIAL,
    IDEMPOTENT,
    ONES,
    SHIFTED_FACTORIAL,
    SetPartition,
    colored_partitions,
    refines,
    set_partitions,
)
from .lincomb import LinComb

SUITES = ("hopf", "bell", "word", "mk", "appendix", "all")

DEFAULT_SEQUENCES = (ONES, FACTORIAL, SHIFTED_FACTORIAL, IDEMPOTENT)


def _item(identity, rng_desc, failure) -> dict:
    return {
        "identity": identity,
        "range": rng_desc,
        "status": "fail" if failure else "pass",
        "counterexample": failure,
    }


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if k == 0 or k > n or n == 0:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def _stirling1_unsigned(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if k == 0 or k > n or n == 0:
        return 0
    return (n - 1) * _stirling1_unsigned(n - 1, k) + _stirling1_unsigned(n - 1, k - 1)


# ---------------------------------------------------------------------------
# hopf


def _basis_keys(seq, n):
    return colored_partitions(seq, n)


def hopf_suite(max_n: int = 4, sequences=DEFAULT_SEQUENCES) -> list[dict]:
    report = []
    for seq in sequences:
        label = seq.spec_string()
        keys = {n: _basis_keys(seq, n) for n in range(max_n + 1)}

        failure = None
        for i in range(1, max_n + 1):
            for j in range(1, max_n - i + 1):
                for a in keys[i]:
                    for b in keys[j]:
                        ea, eb = hopf.phi_elem(a), hopf.phi_elem(b)
                        lhs = hopf.phi_coproduct(hopf.phi_product(ea, eb))
                        rhs = hopf.tensor_multiply(
                            hopf.phi_coproduct(ea), hopf.phi_coproduct(eb), hopf.phi_product
                        )
                        if lhs != rhs:
                            failure = {"left": str(a), "right": str(b), "side": "Phi"}
                        pa, pb = hopf.psi_elem(a), hopf.psi_elem(b)
                        lhs = hopf.psi_coproduct(hopf.psi_product(pa, pb))
                        rhs = hopf.tensor_multiply(
                            hopf.psi_coproduct(pa), hopf.psi_coproduct(pb), hopf.psi_product
                        )
                        if lhs != rhs:
                            failure = {"left": str(a), "right": str(b), "side": "Psi"}
        report.append(_item(f"bialgebra compatibility [{label}]", f"|x|+|y| <= {max_n}", failure))

        failure = None
        sizes = [
            (i, j, k)
            for i in range(1, max_n + 1)
            for j in range(1, max_n + 1)
            for k in range(1, max_n + 1)
            if i + j + k <= max_n
        ]
        for i, j, k in sizes:
            for a in keys[i]:
                for b in keys[j]:
                    for c in keys[k]:
                        pa, pb, pc = (hopf.psi_elem(x) for x in (a, b, c))
                        left = hopf.psi_product(hopf.psi_product(pa, pb), pc)
                        right = hopf.psi_product(pa, hopf.psi_product(pb, pc))
                        if left != right:
                            failure = {"triple": (str(a), str(b), str(c))}
        report.append(_item(f"product associativity [{label}]", f"total size <= {max_n}", failure))

        failure = None
        for n in range(max_n + 1):
            for a in keys[n]:
                cop = hopf.phi_coproduct(hopf.phi_elem(a))
                if hopf.tensor_swap(cop) != cop:
                    failure = {"key": str(a), "side": "Phi cocommutativity"}
                pcop = hopf.psi_coproduct(hopf.psi_elem(a))
                left = LinComb.zero(hopf.PHI)
                # counit: (eps x id) Delta = id on both sides
                for (l, r), c in cop.items():
                    if l.size == 0:
                        left = left + LinComb.term(hopf.PHI, r, c)
                if left != hopf.phi_elem(a):
                    failure = {"key": str(a), "side": "Phi counit"}
                left = LinComb.zero(hopf.PSI)
                for (l, r), c in pcop.items():
                    if l.size == 0:
                        left = left + LinComb.term(hopf.PSI, r, c)
                if left != hopf.psi_elem(a):
                    failure = {"key": str(a), "side": "Psi counit"}
        report.append(_item(f"cocommutativity and counit [{label}]", f"n <= {max_n}", failure))

        failure = None
        for n in range(max_n + 1):
            for a in keys[n]:
                cop = hopf.phi_coproduct(hopf.phi_elem(a))
                total = LinComb.zero(hopf.PHI)
                for (l, r), c in cop.items():
                    total = total + hopf.phi_product(hopf.antipode(hopf.phi_elem(l)), hopf.phi_elem(r)) * c
                expect = hopf.one(seq=a.seq) if n == 0 else LinComb.zero(hopf.PHI)
                if total != expect:
                    failure = {"key": str(a)}
        report.append(_item(f"antipode axiom [{label}]", f"n <= {max_n}", failure))

        failure = None
        for i in range(1, max_n):
            for j in range(1, max_n - i + 1):
                n = i + j
                cops = {z: hopf.phi_coproduct(hopf.phi_elem(z)) for z in keys[n]}
                for a in keys[i]:
                    for b in keys[j]:
                        prod = hopf.psi_product(hopf.psi_elem(a), hopf.psi_elem(b))
                        for z in keys[n]:
                            if prod.coeff(z) != cops[z].coeff((a, b)):
                                failure = {"x": str(a), "y": str(b), "z": str(z)}
        report.append(
            _item(f"duality adjointness <xy,z> = <x(x)y, Dz> [{label}]", f"|x|+|y| <= {max_n}", failure)
        )

        failure = None
        for n in range(max_n + 1):
            if len(keys[n]) != bell.eval_complete_bell(seq, n):
                failure = {"n": n, "dim": len(keys[n])}
        report.append(_item(f"graded dimensions equal A_n(a) [{label}]", f"n <= {max_n}", failure))

    failure = None
    for n in range(min(max_n, 4) + 1):
        for p in set_partitions(n):
            expanded = hopf.phi_to_monomial(hopf.phi_elem(p))
            if expanded.coeff(p) != 1:
                failure = {"pi": str(p), "reason": "diagonal not 1"}
            if any(not refines(p, q) for q in expanded.keys()):
                failure = {"pi": str(p), "reason": "support not coarser"}
            if hopf.monomial_to_phi(expanded) != hopf.phi_elem(p):
                failure = {"pi": str(p), "reason": "round trip"}
    report.append(_item("monomial change of basis is unitriangular", f"n <= {min(max_n, 4)}", failure))
    return report


# ---------------------------------------------------------------------------
# bell


def bell_suite(max_n: int = 6, seed: int = 0) -> list[dict]:
    report = []
    rng = random.Random(seed)

    failure = None
    for n in range(min(max_n + 3, 9)):
        for k in range(n + 1):
            if bell.eval_partial_bell(ONES, n, k) != _stirling2(n, k):
                failure = {"kind": "stirling2", "n": n, "k": k}
            if bell.eval_partial_bell(SHIFTED_FACTORIAL, n, k) != _stirling1_unsigned(n, k):
                failure = {"kind": "stirling1", "n": n, "k": k}
            if k >= 1:
                lah = math.comb(n - 1, k - 1) * math.factorial(n) // math.factorial(k)
                if bell.eval_partial_bell(FACTORIAL, n, k) != lah:
                    failure = {"kind": "lah", "n": n, "k": k}
                idem = math.comb(n, k) * k ** (n - k)
                if bell.eval_partial_bell(IDEMPOTENT, n, k) != idem:
                    failure = {"kind": "idempotent", "n": n, "k": k}
    report.append(_item("classical specializations of B_{n,k}", "n <= 8", failure))

    failure = None
    for _ in range(4):
        a = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(max_n + 2)]
        for variant in (a, [Fraction(0)] + a[1:]):
            for n in range(max_n + 2):
                for k in range(n + 1):
                    if bell.eval_partial_bell(variant, n, k) != bell.eval_partial_bell_direct(
                        variant, n, k
                    ):
                        failure = {"n": n, "k": k, "a": [str(v) for v in variant]}
        if bell.eval_complete_bell(a, max_n) != bell.eval_complete_bell_via_gf(a, max_n):
            failure = {"kind": "complete", "a": [str(v) for v in a]}
    report.append(_item("normalization fast paths agree with direct evaluation", "random rational", failure))

    failure = None
    for n in range(max_n + 1):
        want_complete = LinComb("Phi", {p: 1 for p in set_partitions(n)})
        if bell.word_complete_bell(n) != want_complete:
            failure = {"n": n}
        for k in range(n + 1):
            want = LinComb("Phi", {p: 1 for p in set_partitions(n) if p.part_count == k})
            if bell.word_partial_bell(n, k) != want:
                failure = {"n": n, "k": k}
    report.append(_item("word Bell polynomials enumerate partitions by blocks", f"n <= {max_n}", failure))

    failure = None
    for n in range(min(max_n, 5) + 1):
        for p in set_partitions(n):
            e = hopf.phi_elem(p)
            if bell.deriv(e) != bell.deriv_via_monomial(e):
                failure = {"pi": str(p)}
    report.append(_item("ladder operator factors through the monomial basis", f"n <= {min(max_n, 5)}", failure))

    failure = None
    for seq in (FACTORIAL, IDEMPOTENT):
        for n in range(min(max_n, 5) + 1):
            for k in range(n + 1):
                got = bell.colored_psi_bell(seq, n, k)
                want = LinComb(
                    "Psi",
                    {p: 1 for p in colored_partitions(seq, n) if p.part_count == k},
                )
                if got != want:
                    failure = {"seq": seq.spec_string(), "n": n, "k": k}
    report.append(_item("colored dual Bell polynomials enumerate colored partitions", f"n <= {min(max_n, 5)}", failure))

    report.extend(bell.morphism_diagram_report(max_n=min(max_n, 6), pair_max=min(max_n, 5)))
    return report


# ---------------------------------------------------------------------------
# word (realization)


def word_suite(max_n: int = 5, max_k: int = 3) -> list[dict]:
    report = []

    failure = None
    seen = {}
    for n in range(min(max_n, 4) + 1):
        for key in colored_partitions(IDEMPOTENT, n):
            poly = realization.expand_phi(key, 4)
            frozen = tuple(sorted(poly.items()))
            if frozen in seen:
                failure = {"first": str(seen[frozen]), "second": str(key)}
            seen[frozen] = key
    report.append(_item("realization is injective on basis keys", "n <= 4, L = 4", failure))

    failure = None
    for n1 in range(1, min(max_n, 4)):
        for n2 in range(1, min(max_n, 4) - n1 + 1):
            L = n1 + n2
            for p1 in colored_partitions(IDEMPOTENT, n1):
                for p2 in colored_partitions(IDEMPOTENT, n2):
                    lhs = realization.shuffle_composite(
                        [tuple(range(1, n1 + 1)), tuple(range(n1 + 1, n1 + n2 + 1))],
                        [realization.expand_phi(p1, L), realization.expand_phi(p2, L)],
                    )
                    rhs = realization.expand_phi(p1.shifted_union(p2), L)
                    if lhs != rhs:
                        failure = {"left": str(p1), "right": str(p2)}
    report.append(_item("expansion intertwines product and concatenation", f"sizes <= {min(max_n, 4)}", failure))

    failure = None
    for n1 in range(1, max_n):
        for n2 in range(1, max_n - n1 + 1):
            L = n1 + n2
            for p1 in set_partitions(n1):
                for p2 in set_partitions(n2):
                    lhs = realization.shuffle(
                        realization.expand_psi(p1, L), realization.expand_psi(p2, L)
                    )
                    prod = hopf.psi_product(hopf.psi_elem(p1), hopf.psi_elem(p2))
                    rhs = realization.word_zero()
                    for key, c in prod.items():
                        rhs = rhs + realization.expand_psi(key, L) * c
                    if lhs != rhs:
                        failure = {"left": str(p1), "right": str(p2)}
    report.append(_item("shuffle realization of the dual product", f"|x|+|y| <= {max_n}", failure))

    failure = None
    for n in range(1, min(max_n, 4) + 1):
        for k in range(1, n + 1):
            family_phi = {m: realization.expand_phi(SetPartition.single_block(m), n) for m in range(1, n + 1)}
            got = bell.shuffle_partial_bell(family_phi, n, k)
            want = realization.word_zero()
            for p in set_partitions(n):
                if p.part_count == k:
                    want = want + realization.expand_phi(p, n)
            if got != want:
                failure = {"n": n, "k": k, "family": "Phi"}
            family_psi = {m: realization.expand_psi(SetPartition.single_block(m), n) for m in range(1, n + 1)}
            got = bell.shuffle_partial_bell(family_psi, n, k)
            want = realization.word_zero()
            for p in set_partitions(n):
                if p.part_count == k:
                    want = want + realization.expand_psi(p, n)
            if got != want:
                failure = {"n": n, "k": k, "family": "Psi"}
    report.append(_item("shuffle Bell polynomials of the distinguished families", f"n <= {min(max_n, 4)}", failure))

    report.extend(bell.identity_suite("all", max_n=min(max_n, 4), max_k=min(max_k, 2)))
    return report


# ---------------------------------------------------------------------------
# mk


def mk_suite(max_n: int = 6) -> list[dict]:
    report = []
    nw = munthekaas.nc_word

    expected = {
        1: {1: nw(1)},
        2: {2: nw(1, 1), 1: nw(2)},
        3: {3: nw(1, 1, 1), 2: nw(2, 1) * 2 + nw(1, 2), 1: nw(3)},
        4: {
            4: nw(1, 1, 1, 1),
            3: nw(2, 1, 1) * 3 + nw(1, 2, 1) * 2 + nw(1, 1, 2),
            2: nw(3, 1) * 3 + nw(2, 2) * 3 + nw(1, 3),
            1: nw(4),
        },
    }
    failure = None
    for n, rows in expected.items():
        poly = munthekaas.mb_tpoly(n)
        for k, want in rows.items():
            if poly.coeff(k) != want:
                failure = {"n": n, "k": k}
    report.append(_item("low-degree noncommutative Bell polynomials", "n <= 4", failure))

    failure = None
    for n in range(max_n + 1):
        for k in range(n + 1):
            if munthekaas.xi(bell.word_partial_bell(n, k)) != munthekaas.mb_partial(n, k):
                failure = {"n": n, "k": k}
    report.append(_item("block-size morphism maps word to noncommutative Bell", f"n <= {max_n}", failure))

    failure = None
    for n in range(1, min(max_n, 5) + 1):
        for p in set_partitions(n):
            comp = p.block_sizes()
            k = len(comp)
            count = sum(
                1 for q in set_partitions(n) if q.block_sizes() == comp
            )
            if munthekaas.ebrahimi_coefficient(n, k, comp) != count:
                failure = {"n": n, "comp": comp}
    report.append(_item("coefficients count partitions by block-size composition", f"n <= {min(max_n, 5)}", failure))

    failure = None
    elems = [hopf.phi_elem(p) for n in (1, 2) for p in set_partitions(n)]
    for u in elems:
        for v in elems:
            if munthekaas.zinbiel_left(u, v) != munthekaas.zinbiel_right(v, u):
                failure = {"axiom": "u < v = v > u"}
            for w in elems:
                total = sum(k.size for e in (u, v, w) for k in e.keys())
                if total > 4:
                    continue
                zl, zr = munthekaas.zinbiel_left, munthekaas.zinbiel_right
                if zl(zl(u, v), w) != zl(u, zl(v, w)) + zl(u, zr(v, w)):
                    failure = {"axiom": "left-left"}
                if zl(zr(u, v), w) != zr(u, zl(v, w)):
                    failure = {"axiom": "mixed"}
                if zr(u, zr(v, w)) != zr(zl(u, v), w) + zr(zr(u, v), w):
                    failure = {"axiom": "right-right"}
    report.append(_item("Zinbiel axioms on the dual realization", "total size <= 4", failure))

    failure = None
    for n in range(1, max_n + 1):
        poly = munthekaas.p_triangular(munthekaas.complete_phi_matrix(n), n)
        for k in range(1, n + 1):
            if poly.coeff(k) != bell.word_partial_bell(n, k):
                failure = {"n": n, "k": k}
    report.append(_item("triangular polynomial of the complete matrix", f"n <= {max_n}", failure))

    failure = None
    for n in range(1, max_n + 1):
        if munthekaas.hessenberg_expansion(n) != munthekaas.mb_at_one(n):
            failure = {"n": n}
    report.append(_item("Hessenberg path expansion at t = 1", f"n <= {max_n}", failure))
    return report


# ---------------------------------------------------------------------------
# dispatch


def run_suite(name: str, max_n: int | None = None, seed: int = 0) -> list[dict]:
    if name == "hopf":
        return hopf_suite(max_n if max_n is not None else 4)
    if name == "bell":
        return bell_suite(max_n if max_n is not None else 6, seed=seed)
    if name == "word":
        return word_suite(max_n if max_n is not None else 5)
    if name == "mk":
        return mk_suite(max_n if max_n is not None else 6)
    if name == "appendix":
        return symfun.appendix_suite(seed=seed)
    if name == "all":
        out = []
        for sub in ("hopf", "bell", "word", "mk", "appendix"):
            for item in run_suite(sub, max_n=max_n, seed=seed):
                item = dict(item)
                item["suite"] = sub
                out.append(item)
        return out
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
