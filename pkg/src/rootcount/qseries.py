"""Truncated power series with exact rational coefficients, and group orders.

Series are graded by matrix dimension: the coefficient at index n always
refers to the group acting on an n-dimensional space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .numtheory import GroupFamily


class Series:
    """Immutable power series truncated at z**trunc."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs: Iterable, trunc: int):
        if trunc < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [Fraction(c) for c in coeffs][: trunc + 1]
        cs += [Fraction(0)] * (trunc + 1 - len(cs))
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def one(cls, trunc: int) -> "Series":
        return cls([1], trunc)

    @classmethod
    def from_terms(cls, terms, trunc: int) -> "Series":
        """Build from (exponent, coefficient) pairs; exponents past trunc are dropped."""
        cs = [Fraction(0)] * (trunc + 1)
        for k, c in terms:
            if 0 <= k <= trunc:
                cs[k] += c
        return cls(cs, trunc)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.trunc + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc, self.coeffs))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Series([{body}], trunc={self.trunc})"

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if other.trunc != self.trunc:
            raise ValueError(f"truncation mismatch: {self.trunc} vs {other.trunc}")

    def __add__(self, other):
        self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    def __sub__(self, other):
        self._check(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    def __neg__(self):
        return Series([-a for a in self.coeffs], self.trunc)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([a * other for a in self.coeffs], self.trunc)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return series_pow(self, k)

    def support(self):
        return [n for n, c in enumerate(self.coeffs) if c]


def series_mul(a: Series, b: Series) -> Series:
    a._check(b)
    N = a.trunc
    out = [Fraction(0)] * (N + 1)
    bnz = [(j, c) for j, c in enumerate(b.coeffs) if c]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in bnz:
            if i + j > N:
                break
            out[i + j] += x * y
    return Series(out, N)


def series_pow(a: Series, k: int) -> Series:
    if k < 0:
        raise ValueError("negative powers are not supported")
    result = Series.one(a.trunc)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def geometric_series(t: int, N: int) -> Series:
    """1 / (1 - z**t) truncated at N."""
    if t < 1:
        raise ValueError("period must be >= 1")
    return Series([1 if n % t == 0 else 0 for n in range(N + 1)], N)


def product(factors: Sequence[Series], trunc: int) -> Series:
    result = Series.one(trunc)
    for f in factors:
        result = series_mul(result, f)
    return result


# ---------------------------------------------------------------- group orders

def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def order_gl(n: int, b: int) -> int:
    return _prod(b ** n - b ** i for i in range(n))


def order_u(n: int, b: int) -> int:
    """Unitary group of rank n with entries in F_{b^2}."""
    return b ** (n * (n - 1) // 2) * _prod(b ** i - (-1) ** i for i in range(1, n + 1))


def order_sp(n: int, b: int) -> int:
    if n % 2:
        raise ValueError(f"symplectic dimension must be even, got {n}")
    k = n // 2
    return b ** (k * k) * _prod(b ** (2 * i) - 1 for i in range(1, k + 1))


def order_o(n: int, b: int, eps: int = 0) -> int:
    """Orthogonal group order; eps = +1/-1 selects the even-dimensional type.

    For odd n the type is irrelevant and eps is ignored.
    """
    if n == 0:
        return 1
    k, odd = divmod(n, 2)
    if odd:
        return 2 * b ** (k * k) * _prod(b ** (2 * i) - 1 for i in range(1, k + 1))
    if eps not in (1, -1):
        raise ValueError("even-dimensional orthogonal order needs eps = +1 or -1")
    return (2 * b ** (k * (k - 1)) * (b ** k - eps)
            * _prod(b ** (2 * i) - 1 for i in range(1, k)))


def group_order(family, n: int, base: int) -> int:
    """Order of the classical group of matrix dimension n over base.

    For the unitary family base is b and the matrices have entries in F_{b^2}.
    OrthoPlus/OrthoMinus at odd n give the (unique) odd orthogonal order.
    """
    family = GroupFamily(family)
    if n < 0:
        raise ValueError("dimension must be >= 0")
    if n == 0:
        return 1
    if family is GroupFamily.GL:
        return order_gl(n, base)
    if family is GroupFamily.U:
        return order_u(n, base)
    if family is GroupFamily.SP:
        return order_sp(n, base)
    if family is GroupFamily.ORTHO_PLUS:
        return order_o(n, base, 1)
    if family is GroupFamily.ORTHO_MINUS:
        return order_o(n, base, -1)
    if n % 2 == 0:
        raise ValueError(f"{family.value} at even dimension {n} needs a type (o+ or o-)")
    return order_o(n, base)
