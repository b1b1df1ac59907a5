"""Plain and signed partitions, and centralizer orders indexed by them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, Iterator, List, Optional, Tuple

from .qseries import order_o, order_sp

SYMPLECTIC = "symplectic"
ORTHOGONAL = "orthogonal"


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(sorted((int(x) for x in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > i) for i in range(self[0]))

    @property
    def multiplicities(self) -> Dict[int, int]:
        """m_i(lambda) for every part size i that occurs."""
        return dict(sorted(Counter(self).items()))

    def __repr__(self):
        return f"Partition({tuple(self)})"


def gen_partitions(n: int, max_part: Optional[int] = None,
                   max_len: Optional[int] = None) -> List[Partition]:
    """All partitions of n, lexicographically descending."""
    if n < 0:
        raise ValueError("n must be >= 0")
    top = n if max_part is None else min(n, max_part)
    limit = n if max_len is None else max_len

    def rec(rest, cap, slots) -> Iterator[tuple]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for k in range(min(rest, cap), 0, -1):
            if k * slots < rest:
                break
            for tail in rec(rest - k, k, slots - 1):
                yield (k,) + tail

    return [Partition(p) for p in rec(n, top, limit)]


def _check_base(b: int):
    if abs(b) < 2:
        raise ValueError(f"centralizer base must satisfy |b| >= 2, got {b}")


def c_gl(lam, base: int) -> Fraction:
    """b^{sum (lambda'_i)^2} * prod_i prod_{j=1}^{m_i} (1 - b^{-j}).

    With b = Q >= 2 this is the order of the GL centralizer of a block with
    partition lambda over a field of Q elements.  Negative b gives the
    unitary version up to the sign (-1)^{|lambda|}.
    """
    _check_base(base)
    lam = Partition(lam)
    b = Fraction(base)
    value = b ** sum(x * x for x in lam.conjugate)
    for m in lam.multiplicities.values():
        for j in range(1, m + 1):
            value *= 1 - b ** -j
    return value


def c_unitary(lam, base: int) -> int:
    """Order of the unitary-type centralizer of lambda, entries in F_{base^2}."""
    lam = Partition(lam)
    value = c_gl(lam, -base) * (-1) ** lam.size
    assert value > 0 and value.denominator == 1, (lam, base, value)
    return int(value)


@dataclass(frozen=True)
class SignedPartition:
    kind: str
    parts: Partition
    signs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", Partition(self.parts))
        object.__setattr__(self, "signs", tuple(sorted(self.signs)))
        mult = self.parts.multiplicities
        if self.kind == SYMPLECTIC:
            paired, signed = 1, 0
        elif self.kind == ORTHOGONAL:
            paired, signed = 0, 1
        else:
            raise ValueError(f"unknown kind {self.kind!r}")
        for mu, m in mult.items():
            if mu % 2 == paired and m % 2:
                raise ValueError(f"{self.kind}: part {mu} needs even multiplicity")
        keys = [mu for mu in mult if mu % 2 == signed]
        if sorted(k for k, _ in self.signs) != keys:
            raise ValueError(f"{self.kind}: signs must be keyed by parts {keys}")
        if any(s not in (1, -1) for _, s in self.signs):
            raise ValueError("signs must be +1 or -1")

    def sign(self, mu: int) -> int:
        return dict(self.signs)[mu]

    @property
    def size(self) -> int:
        return self.parts.size

    def __str__(self):
        sg = dict(self.signs)
        bits = []
        for mu, m in self.parts.multiplicities.items():
            tag = {1: "+", -1: "-"}.get(sg.get(mu), "")
            bits.append(f"{mu}{tag}" + (f"^{m}" if m > 1 else ""))
        return "(" + ",".join(bits) + ")"


def gen_signed(kind: str, n: int, max_part: Optional[int] = None) -> List[SignedPartition]:
    if kind not in (SYMPLECTIC, ORTHOGONAL):
        raise ValueError(f"unknown kind {kind!r}")
    needs_pairs = 1 if kind == SYMPLECTIC else 0
    out = []
    for lam in gen_partitions(n, max_part=max_part):
        mult = lam.multiplicities
        if any(mu % 2 == needs_pairs and m % 2 for mu, m in mult.items()):
            continue
        keys = [mu for mu in mult if mu % 2 != needs_pairs]
        for choice in cartesian((1, -1), repeat=len(keys)):
            out.append(SignedPartition(kind, lam, tuple(zip(keys, choice))))
    return out


def c_signed(kind: str, lam: SignedPartition, q: int) -> Fraction:
    """Centralizer order of the +-1 eigenvalue block with signed partition lam.

    Symplectic: odd mu -> |Sp_{m}|, even mu -> q^{m/2} |O^eps_{m}|.
    Orthogonal: odd mu -> |O^eps_{m}|, even mu -> q^{-m/2} |Sp_{m}|.
    Both multiplied by q^{sum_{mu<nu} mu m_mu m_nu + 1/2 sum (mu-1) m_mu^2}.
    """
    if lam.kind != kind:
        raise ValueError(f"expected a {kind} signed partition, got {lam.kind}")
    if q % 2 == 0:
        raise ValueError("q must be odd")
    mult = lam.parts.multiplicities
    items = list(mult.items())
    exponent = Fraction(0)
    for i, (mu, m) in enumerate(items):
        for nu, n in items[i + 1:]:
            exponent += mu * m * n
        exponent += Fraction((mu - 1) * m * m, 2)
    value = 1
    for mu, m in items:
        if kind == SYMPLECTIC:
            if mu % 2:
                value *= order_sp(m, q)
            else:
                exponent += Fraction(m, 2)
                value *= order_o(m, q, lam.sign(mu))
        else:
            if mu % 2:
                value *= order_o(m, q, lam.sign(mu))
            else:
                exponent -= Fraction(m, 2)
                value *= order_sp(m, q)
    assert exponent.denominator == 1, (lam, exponent)
    result = Fraction(value) * Fraction(q) ** int(exponent)
    assert result > 0 and result.denominator == 1, (lam, result)
    return result
