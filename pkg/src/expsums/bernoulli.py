"""Bernoulli numbers two independent ways.

``bernoulli_oracle`` runs the defining recurrence sum_{j=0}^{n} C(n+1, j) B_j
= 0 with B_0 = 1 (which fixes B_1 = -1/2).  ``retrieve_bernoulli`` recovers
B_n a second way, sharing no code with the oracle: it equates the Bernoulli
closed form of h(p, .) for p = n+1 against the odd-exponent halving
recurrence, solves the single linear coefficient equation for B_n, and then
insists the two polynomials agree in every coefficient.
"""

from __future__ import annotations

import types
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import ConsistencyError
from .exact import Polynomial, binomial, polynomial_from_points
from .power_sums import faulhaber_polynomial, h_naive, odd_recurrence_polynomial


@lru_cache(maxsize=None)
def bernoulli_oracle(n: int) -> Fraction:
    """Exact B_n (convention B_1 = -1/2) from the defining recurrence."""
    if n < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(n):
        acc += binomial(n + 1, j) * bernoulli_oracle(j)
    return -acc / (n + 1)


@dataclass(frozen=True)
class RetrievalDetail:
    """One retrieval step: the solved value and the two matched polynomials."""

    n: int
    p: int
    value: Fraction
    compared_degree: int
    recurrence_poly: Polynomial
    closed_form_poly: Polynomial


def _known_even_power_sum(n: int) -> Polynomial:
    """Closed form of h(n, .) for even n without any Bernoulli input.

    Exact interpolation of the summation oracle through k = 0..n+1; this
    plays the role of the classically known even-exponent formulas and keeps
    the retrieval independent of the value being solved for.
    """
    points = [(t, Fraction(h_naive(n, t))) for t in range(n + 2)]
    return polynomial_from_points(points, var="k")


@lru_cache(maxsize=None)
def _retrieve_detail(n: int) -> RetrievalDetail:
    if n < 1 or (n != 1 and n % 2 == 1):
        raise ValueError(
            f"retrieval is defined for n = 1 and even n >= 2, got n={n} "
            f"(odd Bernoulli numbers beyond the first vanish; nothing to solve)"
        )
    retrieved: dict[int, Fraction] = {}
    if n > 1:
        retrieved[1] = retrieve_bernoulli(1)
        for m in range(2, n, 2):
            retrieved[m] = retrieve_bernoulli(m)

    def bern_prior(j: int) -> Fraction:
        # Indices below n: retrieved values, odd ones >= 3 vanish.
        if j in retrieved:
            return retrieved[j]
        if j % 2 == 1 and j > 1:
            return Fraction(0)
        raise ConsistencyError(f"retrieval for n={n} asked for unavailable B_{j}")

    p = 1 if n == 1 else n + 1

    # Closed forms of the lower power sums feeding the recurrence side.
    lower: dict[int, Polynomial] = {}
    for j in range(1, p):
        if j % 2 == 0:
            lower[j] = _known_even_power_sum(j) if j == n else faulhaber_polynomial(j, bern_prior)
        else:
            lower[j] = odd_recurrence_polynomial(j, lower.__getitem__)
    recurrence_poly = odd_recurrence_polynomial(p, lower.__getitem__)

    def bern_with(value_n: Fraction):
        def bern(j: int) -> Fraction:
            if j == n:
                return value_n
            if j > n:
                # Only j = p = n+1 occurs here, an odd index >= 3: it vanishes.
                return Fraction(0)
            return bern_prior(j)

        return bern

    base = faulhaber_polynomial(p, bern_with(Fraction(0)))
    slope = faulhaber_polynomial(p, bern_with(Fraction(1))) - base

    degree = p - n + 1
    slope_c = Fraction(slope.coefficient(degree))
    if slope_c == 0:
        raise ConsistencyError(f"degenerate retrieval equation at n={n}, degree {degree}")
    value = (Fraction(recurrence_poly.coefficient(degree)) - Fraction(base.coefficient(degree))) / slope_c

    closed_form_poly = base + slope * value
    if closed_form_poly != recurrence_poly:
        raise ConsistencyError(
            f"retrieval of B_{n}: polynomials disagree beyond the solved coefficient"
        )
    return RetrievalDetail(n, p, value, degree, recurrence_poly, closed_form_poly)


def retrieve_bernoulli(n: int) -> Fraction:
    """Recover B_n (n = 1 or even) by matching power-sum closed forms."""
    return _retrieve_detail(n).value


def retrieve_bernoulli_detail(n: int) -> RetrievalDetail:
    """Retrieval plus the two full polynomials, for auditing every coefficient."""
    return _retrieve_detail(n)


@dataclass(frozen=True)
class BernoulliTable:
    """Immutable index -> B_n map under the B_1 = -1/2 convention."""

    values: Mapping[int, Fraction]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def bernoulli_table(nmax: int) -> BernoulliTable:
    """Table of B_0..B_nmax, every entry cross-checked against the oracle.

    Index 1 and even indices >= 2 come from the retrieval path; odd indices
    >= 3 are set to zero.
    """
    if nmax < 0:
        raise ValueError(f"bernoulli_table requires nmax >= 0, got {nmax}")
    values: dict[int, Fraction] = {0: Fraction(1)}
    for n in range(1, nmax + 1):
        if n == 1 or n % 2 == 0:
            values[n] = retrieve_bernoulli(n)
        else:
            values[n] = Fraction(0)
    for n, v in values.items():
        if v != bernoulli_oracle(n):
            raise ConsistencyError(f"table entry B_{n} = {v} disagrees with the oracle")
    return BernoulliTable(types.MappingProxyType(values))
