"""Compositions (ordered partitions), decreasing index chains, and
coefficient extraction from (1 - sum u_i x^i)^(-1).

A composition of n is an ordered tuple of positive parts summing to n; there
are 2^(n-1) of them.  Strictly decreasing chains drawn from an open integer
interval are in bijection with compositions (subtract consecutive entries),
and that bijection is implemented once with an explicit ``lower`` endpoint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import SizeLimitError
from .exact import Scalar

COMPOSITION_LIMIT = 24
GESSEL_BRUTEFORCE_LIMIT = 20


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive parts summing to ``total``."""

    parts: tuple[int, ...]
    total: int

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a composition has at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive, got {self.parts}")
        if sum(self.parts) != self.total:
            raise ValueError(f"parts {self.parts} do not sum to {self.total}")

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts), sum(parts))

    @property
    def length(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class DecreasingChain:
    """Strictly decreasing indices drawn from the open interval (lower, upper).

    The empty chain is valid; it corresponds to the one-part composition of
    upper - lower.
    """

    indices: tuple[int, ...]
    upper: int
    lower: int

    def __post_init__(self):
        if self.lower < 0 or self.upper <= self.lower:
            raise ValueError(f"need 0 <= lower < upper, got lower={self.lower} upper={self.upper}")
        if any(not (self.lower < i < self.upper) for i in self.indices):
            raise ValueError(f"chain indices {self.indices} leave ({self.lower}, {self.upper})")
        if any(a <= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError(f"chain indices {self.indices} are not strictly decreasing")

    @property
    def length(self) -> int:
        return len(self.indices)


def enumerate_compositions(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n in lexicographic order of parts."""
    if n < 1:
        raise ValueError(f"compositions are defined for n >= 1, got {n}")
    if n > COMPOSITION_LIMIT:
        raise SizeLimitError(
            f"n={n} exceeds the composition enumeration limit {COMPOSITION_LIMIT} "
            f"(2^(n-1) compositions)"
        )
    out: list[Composition] = []

    def rec(remaining: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(Composition(prefix, n))
            return
        for first in range(1, remaining + 1):
            rec(remaining - first, prefix + (first,))

    rec(n, ())
    return out


def enumerate_compositions_length(n: int, m: int) -> list[Composition]:
    """All compositions of n with exactly m parts, lexicographic order."""
    if n < 1:
        raise ValueError(f"compositions are defined for n >= 1, got {n}")
    if m < 1 or m > n:
        raise ValueError(f"length m must satisfy 1 <= m <= n, got m={m}, n={n}")
    if n > COMPOSITION_LIMIT:
        raise SizeLimitError(
            f"n={n} exceeds the composition enumeration limit {COMPOSITION_LIMIT}"
        )
    out: list[Composition] = []

    def rec(remaining: int, parts_left: int, prefix: tuple[int, ...]):
        if parts_left == 1:
            out.append(Composition(prefix + (remaining,), n))
            return
        for first in range(1, remaining - parts_left + 2):
            rec(remaining - first, parts_left - 1, prefix + (first,))

    rec(n, m, ())
    return out


def enumerate_chains(upper: int, lower: int, length: int | None = None) -> list[DecreasingChain]:
    """All strictly decreasing chains from the open interval (lower, upper).

    Ordered by chain length, then by the ascending subset they descend from;
    the empty chain comes first.  There are 2^(upper-lower-1) in total and
    C(upper-lower-1, r) of each length r.
    """
    if lower < 0 or upper <= lower:
        raise ValueError(f"need 0 <= lower < upper, got lower={lower} upper={upper}")
    interval = range(lower + 1, upper)
    lengths = range(len(interval) + 1) if length is None else [length]
    out = []
    for r in lengths:
        for combo in itertools.combinations(interval, r):
            out.append(DecreasingChain(tuple(reversed(combo)), upper, lower))
    return out


def chain_to_composition(chain: DecreasingChain) -> Composition:
    """Consecutive differences (upper-i1, i1-i2, ..., ir-lower).

    Maps a chain of length r to a composition of upper - lower with r+1
    parts; the empty chain maps to the single part (upper - lower).
    """
    seq = (chain.upper,) + chain.indices + (chain.lower,)
    parts = tuple(a - b for a, b in zip(seq, seq[1:]))
    return Composition(parts, chain.upper - chain.lower)


def composition_to_chain(comp: Composition, upper: int, lower: int) -> DecreasingChain:
    """Inverse of :func:`chain_to_composition`: partial sums from the top."""
    if comp.total != upper - lower:
        raise ValueError(
            f"composition of {comp.total} cannot fill the interval ({lower}, {upper})"
        )
    indices = []
    acc = upper
    for part in comp.parts[:-1]:
        acc -= part
        indices.append(acc)
    return DecreasingChain(tuple(indices), upper, lower)


def _padded(u: Sequence[Scalar], n: int) -> list[Fraction]:
    us = [Fraction(x) for x in u]
    if len(us) < n:
        raise ValueError(f"need weights u_1..u_{n}, got {len(us)}")
    return us


def gessel_coefficient_series(u: Sequence[Scalar], n: int) -> Fraction:
    """Coefficient of x^n in (1 - sum_{i>=1} u_i x^i)^(-1).

    Computed by truncated power-series inversion: c_0 = 1 and
    c_t = sum_{i=1}^{t} u_i c_{t-i}.
    """
    if n < 0:
        raise ValueError(f"coefficient index must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    us = _padded(u, n)
    c = [Fraction(1)] + [Fraction(0)] * n
    for t in range(1, n + 1):
        c[t] = sum((us[i - 1] * c[t - i] for i in range(1, t + 1)), Fraction(0))
    return c[n]


def gessel_coefficient_bruteforce(u: Sequence[Scalar], n: int) -> Fraction:
    """Same coefficient as a sum over all compositions of n of prod u_part."""
    if n < 0:
        raise ValueError(f"coefficient index must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    if n > GESSEL_BRUTEFORCE_LIMIT:
        raise SizeLimitError(
            f"n={n} exceeds the brute-force limit {GESSEL_BRUTEFORCE_LIMIT}"
        )
    us = _padded(u, n)
    total = Fraction(0)
    for comp in enumerate_compositions(n):
        prod = Fraction(1)
        for part in comp.parts:
            prod *= us[part - 1]
        total += prod
    return total
