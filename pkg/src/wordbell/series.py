"""Truncated power series over the rationals, exact.

A series is a plain list of Fractions ``[c0, c1, ..., cN]``; every function
takes the truncation order explicitly and returns a list of length order+1.
These routines back the generating-function identities: exponentials and
logarithms for the Newton formula, composition and reversion for the Faà di
Bruno operations on virtual alphabets.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Scalar = int | Fraction
Series = list


def pad(a: Sequence[Scalar], order: int) -> Series:
    """Copy of ``a`` padded/truncated to exactly order+1 coefficients."""
    out = [Fraction(c) for c in a[: order + 1]]
    out.extend([Fraction(0)] * (order + 1 - len(out)))
    return out


def mul(a: Sequence[Scalar], b: Sequence[Scalar], order: int) -> Series:
    out = [Fraction(0)] * (order + 1)
    for i, ca in enumerate(a[: order + 1]):
        if not ca:
            continue
        top = min(order - i, len(b) - 1)
        for j in range(top + 1):
            if b[j]:
                out[i + j] += ca * b[j]
    return out


def power(a: Sequence[Scalar], k: int, order: int) -> Series:
    result = pad([1], order)
    base = pad(a, order)
    while k:
        if k & 1:
            result = mul(result, base, order)
        base = mul(base, base, order)
        k >>= 1
    return result


def exp(a: Sequence[Scalar], order: int) -> Series:
    """exp of a series with zero constant term."""
    a = pad(a, order)
    if a[0]:
        raise ValueError("exp requires zero constant term")
    b = [Fraction(0)] * (order + 1)
    b[0] = Fraction(1)
    for m in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            if a[j]:
                acc += j * a[j] * b[m - j]
        b[m] = acc / m
    return b


def log(a: Sequence[Scalar], order: int) -> Series:
    """log of a series with constant term 1."""
    a = pad(a, order)
    if a[0] != 1:
        raise ValueError("log requires constant term 1")
    c = [Fraction(0)] * (order + 1)
    for m in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, m):
            if c[j] and a[m - j]:
                acc += j * c[j] * a[m - j]
        c[m] = a[m] - acc / m
    return c


def compose(a: Sequence[Scalar], b: Sequence[Scalar], order: int) -> Series:
    """a(b(t)) for b with zero constant term (Horner evaluation)."""
    b = pad(b, order)
    if b[0]:
        raise ValueError("compose requires inner constant term 0")
    a = pad(a, order)
    result = [Fraction(0)] * (order + 1)
    for coeff in reversed(a):
        result = mul(result, b, order)
        result[0] += coeff
    return result


def reciprocal(a: Sequence[Scalar], order: int) -> Series:
    a = pad(a, order)
    if not a[0]:
        raise ValueError("reciprocal requires nonzero constant term")
    b = [Fraction(0)] * (order + 1)
    b[0] = 1 / Fraction(a[0])
    for m in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            if a[j]:
                acc += a[j] * b[m - j]
        b[m] = -acc / a[0]
    return b


def reversion(a: Sequence[Scalar], order: int) -> Series:
    """Compositional inverse g with a(g(t)) = t; needs a0 = 0, a1 != 0."""
    a = pad(a, order)
    if a[0] or not a[1]:
        raise ValueError("reversion requires a0 = 0 and a1 != 0")
    g = [Fraction(0)] * (order + 1)
    if order >= 1:
        g[1] = 1 / Fraction(a[1])
    for m in range(2, order + 1):
        # With g known below degree m, [t^m] a(g) is a1*g[m] + error(lower g).
        err = compose(a, g, m)[m]
        g[m] = -err / a[1]
    return g
