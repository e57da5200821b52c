"""Hopf operations for colored word symmetric functions and their graded dual.

The algebra side (basis Phi) multiplies by shifted union of keys and
comultiplies by splitting parts in all ways; the dual side (basis Psi)
multiplies by interleaving supports and comultiplies by deconcatenation.
Keys may be plain set partitions (the uncolored case) or colored set
partitions over any color sequence; basis tags keep the four bases
Phi / Psi / M / S apart, and tensors carry pair keys.

All coefficients are exact rationals; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    ColoredSetPartition,
    ColorSequence,
    SetPartition,
    coarsenings,
    interleave_keys,
    part_bipartitions,
    refinements,
)
from .lincomb import BasisError, LinComb, tensor_tag

PHI = "Phi"
PSI = "Psi"
MONOMIAL = "M"
COMPLETE = "S"

_DUAL = {PHI: PSI, PSI: PHI, MONOMIAL: COMPLETE, COMPLETE: MONOMIAL}


def _require(x: LinComb, basis: str) -> None:
    if x.basis != basis:
        raise BasisError(f"expected basis {basis!r}, got {x.basis!r}")


def phi_elem(key) -> LinComb:
    return LinComb.term(PHI, key)


def psi_elem(key) -> LinComb:
    return LinComb.term(PSI, key)


def m_elem(key) -> LinComb:
    return LinComb.term(MONOMIAL, key)


def s_elem(key) -> LinComb:
    return LinComb.term(COMPLETE, key)


def empty_key(seq: ColorSequence | None = None):
    """The size-0 key: uncolored by default, colored over ``seq`` if given."""
    return SetPartition() if seq is None else ColoredSetPartition.empty(seq)


def one(basis: str = PHI, seq: ColorSequence | None = None) -> LinComb:
    return LinComb.term(basis, empty_key(seq))


# ---------------------------------------------------------------------------
# products and coproducts


def phi_product(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of the shifted union of keys."""
    _require(x, PHI)
    _require(y, PHI)
    out: dict = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            key = kx.shifted_union(ky)
            acc = out.get(key, 0) + cx * cy
            if acc:
                out[key] = acc
            else:
                del out[key]
    return LinComb._raw(PHI, out)


def phi_coproduct(x: LinComb) -> LinComb:
    """Sum over complementary standardized sub-partitions (tensor output)."""
    _require(x, PHI)
    out: dict = {}
    for key, c in x.items():
        for left, right in part_bipartitions(key):
            pair = (left, right)
            acc = out.get(pair, 0) + c
            if acc:
                out[pair] = acc
            else:
                del out[pair]
    return LinComb._raw(tensor_tag(PHI), out)


def psi_product(x: LinComb, y: LinComb) -> LinComb:
    """Dual product: sum over support interleavings, with multiplicities."""
    _require(x, PSI)
    _require(y, PSI)
    out: dict = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            c = cx * cy
            for key in interleave_keys(kx, ky):
                acc = out.get(key, 0) + c
                if acc:
                    out[key] = acc
                else:
                    del out[key]
    return LinComb._raw(PSI, out)


def psi_coproduct(x: LinComb) -> LinComb:
    """Deconcatenation over all prefix/suffix splits of the support."""
    _require(x, PSI)
    out: dict = {}
    for key, c in x.items():
        for j in range(key.size + 1):
            split = key.split_at(j)
            if split is None:
                continue
            acc = out.get(split, 0) + c
            if acc:
                out[split] = acc
            else:
                del out[split]
    return LinComb._raw(tensor_tag(PSI), out)


def tensor(x: LinComb, y: LinComb) -> LinComb:
    """x (x) y as a pair-keyed linear combination."""
    if x.basis != y.basis:
        raise BasisError("tensor legs must share a basis")
    out: dict = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            out[(kx, ky)] = cx * cy
    return LinComb._raw(tensor_tag(x.basis), out)


def tensor_multiply(s: LinComb, t: LinComb, product) -> LinComb:
    """Componentwise product (a(x)b)(c(x)d) = ac (x) bd of two tensors."""
    if s.basis != t.basis:
        raise BasisError("tensor bases differ")
    base = s.basis.split("⊗")[0]
    out: dict = {}
    for (a, b), c1 in s.items():
        ea, eb = LinComb.term(base, a), LinComb.term(base, b)
        for (c, d), c2 in t.items():
            left = product(ea, LinComb.term(base, c))
            right = product(eb, LinComb.term(base, d))
            coeff = c1 * c2
            for kl, cl in left.items():
                for kr, cr in right.items():
                    pair = (kl, kr)
                    acc = out.get(pair, 0) + coeff * cl * cr
                    if acc:
                        out[pair] = acc
                    else:
                        del out[pair]
    return LinComb._raw(s.basis, out)


def tensor_swap(t: LinComb) -> LinComb:
    return LinComb._raw(t.basis, {(b, a): c for (a, b), c in t.items()})


def counit(x: LinComb) -> Fraction | int:
    """Coefficient of the size-0 key."""
    total = 0
    for key, c in x.items():
        if key.size == 0:
            total += c
    return total


# ---------------------------------------------------------------------------
# basis changes for the uncolored specialization


def _require_uncolored(x: LinComb) -> None:
    for key in x.keys():
        if not isinstance(key, SetPartition):
            raise BasisError("this basis change is defined on uncolored keys only")


def phi_to_monomial(x: LinComb) -> LinComb:
    """Expand Phi in word monomial functions: Phi_pi = sum of M over coarser."""
    _require(x, PHI)
    _require_uncolored(x)
    out: dict = {}
    for key, c in x.items():
        for q in coarsenings(key):
            acc = out.get(q, 0) + c
            if acc:
                out[q] = acc
            else:
                del out[q]
    return LinComb._raw(MONOMIAL, out)


@lru_cache(maxsize=None)
def _monomial_in_phi(key: SetPartition) -> LinComb:
    # Triangular inversion of Phi_pi = sum_{pi <= q} M_q over the coarsening order.
    out = phi_elem(key)
    for q in coarsenings(key):
        if q != key:
            out = out - _monomial_in_phi(q)
    return out


def monomial_to_phi(x: LinComb) -> LinComb:
    """Inverse basis change, by triangular solve over the refinement order."""
    _require(x, MONOMIAL)
    _require_uncolored(x)
    total = LinComb.zero(PHI)
    for key, c in x.items():
        total = total + _monomial_in_phi(key) * c
    return total


def complete_to_psi(pi: SetPartition) -> LinComb:
    """S_pi as a sum of Psi over all refinements of pi."""
    return LinComb._raw(PSI, {q: 1 for q in refinements(pi)})


def duality_pairing(x: LinComb, y: LinComb) -> Fraction | int:
    """Kronecker pairing of dual bases, extended bilinearly.

    Defined for (Phi, Psi) and (S, M) in either order, including their
    tensor squares (pair keys pair componentwise).
    """
    bx = x.basis.split("⊗")
    by = y.basis.split("⊗")
    if len(bx) != len(by) or any(_DUAL[a] != b for a, b in zip(bx, by)):
        raise BasisError(f"bases {x.basis!r} and {y.basis!r} are not dual")
    small, big = (x, y) if len(x) <= len(y) else (y, x)
    total = 0
    for key, c in small.items():
        d = big.coeff(key)
        if d:
            total += c * d
    return total


# ---------------------------------------------------------------------------
# antipode


@lru_cache(maxsize=None)
def _antipode_key(key) -> LinComb:
    if key.size == 0:
        return phi_elem(key)
    out = -phi_elem(key)
    for left, right in part_bipartitions(key):
        if left.size == 0 or right.size == 0:
            continue
        out = out - phi_product(_antipode_key(left), phi_elem(right))
    return out


def antipode(x: LinComb) -> LinComb:
    """Antipode of the Phi basis by the graded connected recursion."""
    _require(x, PHI)
    total = LinComb.zero(PHI)
    for key, c in x.items():
        total = total + _antipode_key(key) * c
    return total
