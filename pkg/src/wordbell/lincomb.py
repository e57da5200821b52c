"""Exact linear combinations over hashable basis keys.

Every algebra in this package stores its elements the same way: a finite
mapping from canonical basis keys to nonzero rational coefficients, plus a
basis tag.  Colored word symmetric functions, word polynomials over indexed
alphabets and noncommutative polynomials are all `LinComb` instances over
different key types; the tag makes accidentally mixing bases a type error
instead of a silent merge.

Coefficients are exact: Python ints or `fractions.Fraction`, never floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

Scalar = int | Fraction


class BasisError(TypeError):
    """An operation received elements over incompatible bases."""


def tensor_tag(basis: str) -> str:
    """Basis tag used for two-fold tensors (pair keys)."""
    return basis + "⊗" + basis


class LinComb:
    """Finite rational linear combination of hashable keys, tagged by basis."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping | Iterable = ()):
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            if not coeff:
                continue
            acc = data.get(key, 0) + coeff
            if acc:
                data[key] = acc
            else:
                del data[key]
        self.basis = basis
        self._terms = data

    # -- construction -------------------------------------------------------

    @classmethod
    def _raw(cls, basis: str, terms: dict) -> "LinComb":
        # Trusted constructor: `terms` must already be zero-free.
        obj = cls.__new__(cls)
        obj.basis = basis
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, basis: str) -> "LinComb":
        return cls._raw(basis, {})

    @classmethod
    def term(cls, basis: str, key: Hashable, coeff: Scalar = 1) -> "LinComb":
        return cls._raw(basis, {key: coeff} if coeff else {})

    # -- inspection ----------------------------------------------------------

    def coeff(self, key: Hashable) -> Scalar:
        return self._terms.get(key, 0)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def sorted_items(self, key: Callable = None):
        """Terms in a deterministic order (for printing and serialization)."""
        if key is None:
            key = lambda kv: kv[0]
        return sorted(self._terms.items(), key=key)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    __hash__ = None  # mutable-dict backed; not hashable

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if not self._terms:
            return f"<LinComb {self.basis}: 0>"
        parts = [f"{c}*{k}" for k, c in list(self._terms.items())[:4]]
        more = " + ..." if len(self._terms) > 4 else ""
        return f"<LinComb {self.basis}: " + " + ".join(parts) + more + ">"

    # -- module structure ----------------------------------------------------

    def _check(self, other: "LinComb") -> None:
        if self.basis != other.basis:
            raise BasisError(
                f"cannot combine bases {self.basis!r} and {other.basis!r}"
            )

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        self._check(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        data = dict(self._terms)
        for key, coeff in other._terms.items():
            acc = data.get(key, 0) + coeff
            if acc:
                data[key] = acc
            else:
                del data[key]
        return LinComb._raw(self.basis, data)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LinComb":
        return LinComb._raw(self.basis, {k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar: Scalar) -> "LinComb":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return LinComb.zero(self.basis)
        return LinComb._raw(
            self.basis, {k: c * scalar for k, c in self._terms.items()}
        )

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "LinComb":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(scalar))

    def map_keys(self, fn: Callable[[Hashable], Hashable]) -> "LinComb":
        """Linear relabeling of basis keys (images may collide)."""
        out: dict = {}
        for key, coeff in self._terms.items():
            new = fn(key)
            acc = out.get(new, 0) + coeff
            if acc:
                out[new] = acc
            else:
                del out[new]
        return LinComb._raw(self.basis, out)

    def retag(self, basis: str) -> "LinComb":
        """Same coefficients, different basis tag (explicit conversion only)."""
        return LinComb._raw(basis, dict(self._terms))


def accumulate(data: dict, key: Hashable, coeff: Scalar) -> None:
    """Add ``coeff`` to ``data[key]`` in place, dropping exact zeros."""
    acc = data.get(key, 0) + coeff
    if acc:
        data[key] = acc
    elif key in data:
        del data[key]


class TPoly:
    """Polynomial in a formal marker t whose coefficients are LinComb values.

    Trailing zero coefficients are trimmed, so ``degree`` is exact.
    """

    __slots__ = ("zero", "coeffs")

    def __init__(self, zero: LinComb, coeffs: Iterable[LinComb] = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.zero = zero
        self.coeffs = tuple(cs)

    def coeff(self, k: int) -> LinComb:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.zero

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def at_one(self) -> LinComb:
        """Evaluate at t = 1 (sum of all coefficients)."""
        total = self.zero
        for c in self.coeffs:
            total = total + c
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<TPoly degree {self.degree}>"
