"""Desk-scale numerics: Dirichlet characters mod k, Gauss sums, the power
moments S(m, chi) = sum_{j=1}^{k} (j/k)^m G(j, chi), truncated L(r, chi), and
a magnitude check of the identity tying L(r, chi) to Bernoulli-weighted
moments of Gauss sums.

Characters are stored as explicit value tables (complex doubles, zero off the
units); the unit group is decomposed into cyclic components so enumeration is
deterministic.  Exactness lives elsewhere in the package; this module is
double precision by design, with rigorous truncation-error bounds where
series are cut.
"""

from __future__ import annotations

import cmath
import itertools
import math
import types
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional

import numpy as np

from .bernoulli import bernoulli_oracle
from .errors import ConsistencyError, DivergenceError, SizeLimitError
from .exact import binomial

# Hard ceiling on summed terms; partial sums cannot certify tighter targets
# in reasonable time, so tighter requests are rejected rather than attempted.
_MAX_TRUNCATION_TERMS = 2**33


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _prime_divisors(n: int) -> list[int]:
    return [p for p, _ in _factorize(n)]


def _primitive_root_mod_p(p: int) -> int:
    if p == 2:
        return 1
    qs = _prime_divisors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ConsistencyError(f"no primitive root found mod {p}")


def _odd_prime_power_generator(p: int, e: int) -> int:
    # A generator mod p lifts to p^e unless g^(p-1) = 1 mod p^2; then g+p does.
    g = _primitive_root_mod_p(p)
    if e >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _crt_lift(a: int, q: int, k: int) -> int:
    # x = a mod q, x = 1 mod k/q (q and k/q coprime).
    r = k // q
    if r == 1:
        return a % k
    t = ((1 - a) * pow(q % r, -1, r)) % r
    return (a + q * t) % k


@dataclass(frozen=True)
class UnitGroupStructure:
    """(Z/kZ)* as independent cyclic components.

    ``generators[i]`` has multiplicative order ``orders[i]``, the component
    orders multiply to the unit count, and ``dlog`` maps every unit to its
    exponent vector.
    """

    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    dlog: Mapping[int, tuple[int, ...]]


@lru_cache(maxsize=None)
def unit_group_structure(k: int) -> UnitGroupStructure:
    """Decompose (Z/kZ)* via the prime-power factorization of k.

    Odd prime powers contribute one cyclic component (a lifted primitive
    root); 2^e contributes nothing (e=1), one order-2 component (e=2), or the
    order-2 component of -1 plus the cyclic component of 3 (e>=3).  Every
    generator order and the exhaustive discrete-log table are self-checked.
    """
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    components: list[tuple[int, int]] = []
    for p, e in _factorize(k):
        q = p**e
        if p == 2:
            if e == 2:
                components.append((_crt_lift(3, q, k), 2))
            elif e >= 3:
                components.append((_crt_lift(q - 1, q, k), 2))
                components.append((_crt_lift(3, q, k), 2 ** (e - 2)))
        else:
            g = _odd_prime_power_generator(p, e)
            components.append((_crt_lift(g, q, k), (p - 1) * p ** (e - 1)))
    generators = tuple(g for g, _ in components)
    orders = tuple(o for _, o in components)

    for g, o in components:
        if pow(g, o, k) != 1 or any(pow(g, o // d, k) == 1 for d in _prime_divisors(o)):
            raise ConsistencyError(f"generator {g} mod {k} does not have order {o}")

    units = [n for n in range(k) if math.gcd(n, k) == 1]
    dlog: dict[int, tuple[int, ...]] = {}
    for exps in itertools.product(*(range(o) for o in orders)):
        residue = 1 % k
        for g, v in zip(generators, exps):
            residue = residue * pow(g, v, k) % k
        if residue in dlog:
            raise ConsistencyError(f"components of (Z/{k}Z)* are not independent")
        dlog[residue] = exps
    if len(dlog) != len(units):
        raise ConsistencyError(f"component orders do not cover (Z/{k}Z)*")
    return UnitGroupStructure(k, generators, orders, types.MappingProxyType(dlog))


@dataclass(frozen=True)
class DirichletCharacter:
    """Value table of one character mod k: completely multiplicative on the
    units, zero elsewhere, determined by the root of unity assigned to each
    group generator (``exponents``)."""

    modulus: int
    index: int
    exponents: tuple[int, ...]
    values: tuple[complex, ...]
    parity: str
    principal: bool
    conductor: int
    primitive: bool

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"


def _phase(structure: UnitGroupStructure, exponents: tuple[int, ...], unit: int) -> Fraction:
    v = structure.dlog[unit]
    total = Fraction(0)
    for t, vv, o in zip(exponents, v, structure.orders):
        total += Fraction(t * vv, o)
    return total % 1


def _conductor(structure: UnitGroupStructure, exponents: tuple[int, ...]) -> int:
    k = structure.modulus
    for d in range(1, k + 1):
        if k % d:
            continue
        if all(_phase(structure, exponents, u) == 0
               for u in structure.dlog if u % d == 1 % d):
            return d
    return k


def enumerate_characters(k: int) -> list[DirichletCharacter]:
    """All characters mod k, ordered by generator exponent tuple (principal
    first); the count equals the number of units."""
    st = unit_group_structure(k)
    chars = []
    minus_one = (k - 1) % k
    for index, exps in enumerate(itertools.product(*(range(o) for o in st.orders))):
        values = [0j] * k
        for u in st.dlog:
            values[u] = cmath.rect(1.0, 2.0 * math.pi * float(_phase(st, exps, u)))
        parity_phase = _phase(st, exps, minus_one)
        if parity_phase not in (Fraction(0), Fraction(1, 2)):
            raise ConsistencyError(f"character value at -1 is not a square root of 1: {parity_phase}")
        conductor = _conductor(st, exps)
        chars.append(
            DirichletCharacter(
                modulus=k,
                index=index,
                exponents=exps,
                values=tuple(values),
                parity="odd" if parity_phase else "even",
                principal=all(t == 0 for t in exps),
                conductor=conductor,
                primitive=conductor == k,
            )
        )
    return chars


def gauss_sum(j: int, chi: DirichletCharacter) -> complex:
    """G(j, chi) = sum_{m=1}^{k} chi(m) e^(2 pi i m j / k)."""
    k = chi.modulus
    total = 0j
    for m in range(1, k + 1):
        v = chi.values[m % k]
        if v != 0:
            total += v * cmath.exp(2j * math.pi * m * j / k)
    return total


def s_sum(m: int, chi: DirichletCharacter) -> complex:
    """S(m, chi) = sum_{j=1}^{k} (j/k)^m G(j, chi), the j = k term included."""
    if m < 0:
        raise ValueError(f"moment m must be >= 0, got {m}")
    k = chi.modulus
    total = 0j
    for j in range(1, k + 1):
        total += (j / k) ** m * gauss_sum(j, chi)
    return total


@dataclass(frozen=True)
class LSeriesValue:
    """A truncated L(r, chi) with a rigorous bound on the dropped tail."""

    r: int
    value: complex
    truncation_N: int
    tail_bound: float


def _class_sum(a: int, N: int, k: int, r: int) -> float:
    # sum of n^(-r) over n = a mod k, 1 <= n <= N, in numpy blocks.
    start = a if a >= 1 else k
    if start > N:
        return 0.0
    count = (N - start) // k + 1
    total = 0.0
    block = 1 << 21
    for j0 in range(0, count, block):
        ns = start + k * np.arange(j0, min(j0 + block, count), dtype=np.float64)
        total += float(np.sum(1.0 / ns)) if r == 1 else float(np.sum(ns ** float(-r)))
    return total


def l_value(r: int, chi: DirichletCharacter, target_tol: float) -> LSeriesValue:
    """Partial sum of sum_{n>=1} chi(n)/n^r cut so the tail bound meets
    target_tol.

    For r >= 2 the tail is bounded by the integral comparison
    N^(1-r)/(r-1).  For r = 1 the sum runs over complete blocks of k (block
    sums of a non-principal character vanish) and partial summation bounds
    the tail by k * max_partial / N, where max_partial is the largest prefix
    magnitude of the character over one period.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if target_tol <= 0:
        raise ValueError(f"target_tol must be positive, got {target_tol}")
    k = chi.modulus
    if r == 1:
        if chi.principal:
            raise DivergenceError("L(1, chi) diverges for the principal character")
        prefix = 0j
        max_partial = 0.0
        for t in range(1, k):
            prefix += chi.values[t]
            max_partial = max(max_partial, abs(prefix))
        max_partial = max(max_partial, 1.0)
        blocks = max(1, math.ceil(max_partial / target_tol))
        N = blocks * k
        tail_bound = k * max_partial / N
    else:
        N = max(k, math.ceil(((r - 1) * target_tol) ** (-1.0 / (r - 1))))
        tail_bound = float(N) ** (1 - r) / (r - 1)
    if N > _MAX_TRUNCATION_TERMS:
        raise SizeLimitError(
            f"target_tol={target_tol:g} needs {N} terms "
            f"(limit {_MAX_TRUNCATION_TERMS}); relax target_tol"
        )
    value = 0j
    for a in range(k):
        v = chi.values[a]
        if v != 0:
            value += v * _class_sum(a, N, k, r)
    return LSeriesValue(r, value, N, tail_bound)


@dataclass(frozen=True)
class AlkanReport:
    """Magnitude comparison of k r! / (2^(r-1) pi^r) |L(r, chi)| against
    |sum_q C(r, q) B_q S(r-q, chi)|; the sign is recorded, never asserted."""

    modulus: int
    r: int
    chi_index: int
    lhs_magnitude: Optional[float]
    rhs_magnitude: Optional[float]
    ratio: Optional[float]
    sign_observed: Optional[int]
    status: str
    reason: str = ""


def alkan_check(r: int, chi: DirichletCharacter, tol: float) -> AlkanReport:
    """PASS when the magnitude ratio of the two sides is within tol of 1.

    Requires a non-principal character whose parity matches r (a mismatch is
    reported as SKIPPED, not an error) and small r.  The observed sign is the
    real sign of the full complex ratio with the i^r prefactor included.
    The internal L-series target is floored at 1e-8 absolute, the practical
    limit of the truncation method; a tighter tol therefore fails honestly
    rather than stalling.
    """
    if not 1 <= r <= 4:
        raise ValueError(f"the check is desk-scale only, need 1 <= r <= 4, got {r}")
    if chi.principal:
        raise ValueError("the identity requires a non-principal character")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if chi.parity != ("odd" if r % 2 else "even"):
        return AlkanReport(chi.modulus, r, chi.index, None, None, None, None,
                           "SKIPPED", "parity mismatch")
    rhs = 0j
    for q in range(2 * (r // 2) + 1):
        b = bernoulli_oracle(q)
        if b != 0:
            rhs += binomial(r, q) * float(b) * s_sum(r - q, chi)
    lvalue = l_value(r, chi, target_tol=max(tol / 20, 1e-8)).value
    prefactor = chi.modulus * math.factorial(r) / (2 ** (r - 1) * math.pi**r)
    lhs_magnitude = prefactor * abs(lvalue)
    rhs_magnitude = abs(rhs)
    if rhs_magnitude == 0.0:
        return AlkanReport(chi.modulus, r, chi.index, lhs_magnitude, 0.0, None, None,
                           "FAIL", "zero right-hand side")
    ratio = lhs_magnitude / rhs_magnitude
    signed = prefactor / (1j**r) * lvalue / rhs
    sign_observed = 1 if signed.real > 0.5 else (-1 if signed.real < -0.5 else 0)
    status = "PASS" if abs(ratio - 1.0) <= tol else "FAIL"
    return AlkanReport(chi.modulus, r, chi.index, lhs_magnitude, rhs_magnitude,
                       ratio, sign_observed, status)


def alkan_sweep(k: int, r: int, tol: float,
                include_imprimitive: bool = False) -> list[AlkanReport]:
    """Run the magnitude check across the characters mod k.

    Principal and (by default) imprimitive characters are skipped; with
    ``include_imprimitive`` the latter are evaluated but only REPORTED, never
    failed, since the identity's scope for them is not pinned down.
    """
    reports = []
    for chi in enumerate_characters(k):
        if chi.principal:
            reports.append(AlkanReport(k, r, chi.index, None, None, None, None,
                                       "SKIPPED", "principal character"))
            continue
        if not chi.primitive and not include_imprimitive:
            reports.append(AlkanReport(k, r, chi.index, None, None, None, None,
                                       "SKIPPED", f"imprimitive (conductor {chi.conductor})"))
            continue
        report = alkan_check(r, chi, tol)
        if not chi.primitive and report.status in ("PASS", "FAIL"):
            report = AlkanReport(k, r, chi.index, report.lhs_magnitude,
                                 report.rhs_magnitude, report.ratio,
                                 report.sign_observed, "REPORTED",
                                 f"imprimitive (conductor {chi.conductor})")
        reports.append(report)
    return reports
