"""Exponential power sums sum_{s=1}^{k-1} s^p zeta^(+-ms) and their identities.

Let zeta be a primitive k-th root of unity.  Writing f(p) for the negative
frequency sum (sign -1) and g(p) for the positive one (sign +1), this module
verifies, both exactly in Q[x]/Phi_k and in floating complex arithmetic,

    f(p) = -k^p + sum_{a=0}^{p-1} (-1)^(p-a) C(p, a) k^a g(p-a)      (k does not divide m)

together with the periodicity-only reflection

    f(p) = (-1)^p g(p) + sum_{a=0}^{p-1} (-1)^(p+a+1) C(p, a) k^(p-a) f(a)

(checked mod x^k - 1 for every frequency m including 0), and the signed
binomial chain sums that collapse the recursive expansion of the reflection
into the single binomial coefficient in front of each k^a g(p-a).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import NamedTuple

from .compositions import enumerate_chains
from .errors import PreconditionError
from .exact import CyclotomicElement, Polynomial, binomial


@dataclass(frozen=True)
class ExpSumQuery:
    """One sum: exponent p, modulus k >= 2, frequency m (reduced mod k), sign.

    sign +1 is the positive-frequency sum g, sign -1 the negative-frequency
    sum f.  k = 1 is rejected: the sum is empty and no frequency is admissible.
    """

    p: int
    k: int
    m: int
    sign: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError(f"exponent p must be >= 0, got {self.p}")
        if self.k < 2:
            raise ValueError(f"modulus k must be >= 2, got {self.k}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "m", self.m % self.k)


def exp_power_sum_complex(q: ExpSumQuery) -> complex:
    """Direct double-precision summation of s^p exp(sign * 2 pi i m s / k)."""
    w = cmath.exp(q.sign * 2j * cmath.pi * q.m / q.k)
    total = 0j
    ws = 1 + 0j
    for s in range(1, q.k):
        ws *= w
        total += float(s) ** q.p * ws
    return total


def exp_power_sum_cyclo(q: ExpSumQuery) -> CyclotomicElement:
    """The exact image of the sum in Q[x]/Phi_k under zeta -> x.

    Each term s^p zeta^(sign*m*s) becomes s^p x^((sign*m*s) mod k); the
    accumulated exponent vector is reduced mod Phi_k once.
    """
    vec = [0] * q.k
    for s in range(1, q.k):
        vec[(q.sign * q.m * s) % q.k] += s**q.p
    return CyclotomicElement(q.k, Polynomial(vec))


def _require_nondivisible(p: int, k: int, m: int) -> int:
    if p < 1:
        raise ValueError(f"exponent p must be >= 1, got {p}")
    if k < 2:
        raise ValueError(f"modulus k must be >= 2, got {k}")
    mm = m % k
    if mm == 0:
        raise PreconditionError(
            f"k divides m (k={k}, m={m}): the identity requires a nontrivial frequency"
        )
    return mm


def prop1_residual_cyclo(p: int, k: int, m: int) -> CyclotomicElement:
    """f(p) minus its positive-frequency expansion, exactly in Q[x]/Phi_k.

    Zero residue for every k that does not divide m; k | m is rejected (there
    g(0) = k - 1 instead of -1 and the identity breaks).
    """
    mm = _require_nondivisible(p, k, m)
    lhs = exp_power_sum_cyclo(ExpSumQuery(p, k, mm, -1))
    rhs = CyclotomicElement(k, -(k**p))
    for a in range(p):
        g = exp_power_sum_cyclo(ExpSumQuery(p - a, k, mm, +1))
        rhs = rhs + g * ((-1) ** (p - a) * binomial(p, a) * k**a)
    return lhs - rhs


class FloatResidual(NamedTuple):
    """Absolute residual plus the same normalized by max(|lhs|, 1)."""

    absolute: float
    relative: float


def _g_values_complex(p: int, k: int, m: int) -> list[complex]:
    # One pass over s accumulating g(j) for all j = 0..p.
    w = cmath.exp(2j * cmath.pi * m / k)
    g = [0j] * (p + 1)
    ws = 1 + 0j
    for s in range(1, k):
        ws *= w
        term = ws
        fs = float(s)
        for j in range(p + 1):
            g[j] += term
            term *= fs
    return g


def prop1_residual_complex(p: int, k: int, m: int) -> FloatResidual:
    """Floating cross-check of the same identity in complex doubles."""
    mm = _require_nondivisible(p, k, m)
    lhs = exp_power_sum_complex(ExpSumQuery(p, k, mm, -1))
    g = _g_values_complex(p, k, mm)
    rhs = complex(-(float(k) ** p))
    for a in range(p):
        rhs += (-1) ** (p - a) * binomial(p, a) * float(k) ** a * g[p - a]
    absolute = abs(lhs - rhs)
    return FloatResidual(absolute, absolute / max(abs(lhs), 1.0))


def float_tolerance_ok(res: FloatResidual, p: int, k: int, rel_tol: float = 1e-8) -> bool:
    """Pass rule for floating sweeps: absolute 1e-9 scaled by k^(p+1), or the
    relative tolerance, whichever is looser."""
    return res.absolute <= 1e-9 * float(k) ** (p + 1) or res.relative <= rel_tol


def eq3_residual_poly(p: int, k: int) -> Polynomial:
    """Residual of the reflection identity in Q[x]/(x^k - 1), worst case over
    every frequency m in 0..k-1.

    Only periodicity x^k = 1 enters the identity's derivation, so it holds at
    every k-th root of unity including 1; the returned polynomial is zero when
    all k residuals vanish, otherwise the largest one.
    """
    if p < 1:
        raise ValueError(f"exponent p must be >= 1, got {p}")
    if k < 2:
        raise ValueError(f"modulus k must be >= 2, got {k}")
    spow = [[s**j for s in range(k)] for j in range(p + 1)]
    worst = [0] * k
    worst_norm = -1
    for m in range(k):
        def fvec(j: int) -> list[int]:
            v = [0] * k
            row = spow[j]
            for s in range(1, k):
                v[(-m * s) % k] += row[s]
            return v

        res = fvec(p)
        gp = [0] * k
        row = spow[p]
        for s in range(1, k):
            gp[(m * s) % k] += row[s]
        sign_p = (-1) ** p
        for i in range(k):
            res[i] -= sign_p * gp[i]
        for a in range(p):
            c = (-1) ** (p + a + 1) * binomial(p, a) * k ** (p - a)
            fa = fvec(a)
            for i in range(k):
                res[i] -= c * fa[i]
        norm = max(abs(c) for c in res)
        if norm > worst_norm:
            worst_norm = norm
            worst = res
    return Polynomial(worst)


def chain_coefficient_sum(p: int, a: int) -> int:
    """Signed binomial products over strictly decreasing chains in the open
    interval (p-a, p), empty chain included:

        sum (-1)^(p+r+1) C(p, i_1) C(i_1, i_2) ... C(i_r, p-a).

    This is the accumulated coefficient of k^a g(p-a) in the recursive
    expansion of f(p); it collapses to (-1)^(p-a) C(p, a), which is 1 at
    a = p.  At a = 0 no substitution step occurs and the direct leading term
    (-1)^p is the (degenerate, empty-product) value.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if a < 0 or a > p:
        raise ValueError(f"need 0 <= a <= p, got a={a}, p={p}")
    if a == 0:
        return (-1) ** p
    total = 0
    for chain in enumerate_chains(p, p - a):
        seq = (p,) + chain.indices + (p - a,)
        prod = 1
        for hi, lo in zip(seq, seq[1:]):
            prod *= binomial(hi, lo)
        total += (-1) ** (p + chain.length + 1) * prod
    return total


@dataclass(frozen=True)
class SweepResult:
    """Outcome of one verification sweep: case count and failing records."""

    name: str
    cases: int
    failures: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def run_prop1_exact(pmax: int, kmax: int, m_span: int = 3) -> SweepResult:
    """Exact sweep: residual must be the zero residue for all 1 <= p <= pmax,
    2 <= k <= kmax, 1 <= m <= m_span*k with k not dividing m."""
    cases = 0
    failures = []
    for p in range(1, pmax + 1):
        for k in range(2, kmax + 1):
            for m in range(1, m_span * k + 1):
                if m % k == 0:
                    continue
                cases += 1
                res = prop1_residual_cyclo(p, k, m)
                if not res.is_zero:
                    failures.append(
                        {
                            "case": f"p={p} k={k} m={m}",
                            "status": "FAIL",
                            "detail": f"nonzero residue {res.residue}",
                        }
                    )
    return SweepResult("prop1-exact", cases, tuple(failures))


def run_prop1_float(pmax: int, kmax: int, tol: float = 1e-8) -> SweepResult:
    """Floating sweep over m in {1, k-1, floor(k/2) when admissible}."""
    cases = 0
    failures = []
    for p in range(1, pmax + 1):
        for k in range(2, kmax + 1):
            ms = {1, k - 1}
            if (k // 2) % k != 0:
                ms.add(k // 2)
            for m in sorted(ms):
                cases += 1
                res = prop1_residual_complex(p, k, m)
                if not float_tolerance_ok(res, p, k, tol):
                    failures.append(
                        {
                            "case": f"p={p} k={k} m={m}",
                            "status": "FAIL",
                            "detail": f"abs={res.absolute:.3e} rel={res.relative:.3e}",
                        }
                    )
    return SweepResult("prop1-float", cases, tuple(failures))


def run_eq3(pmax: int, kmax: int) -> SweepResult:
    """Exact reflection sweep mod x^k - 1, all frequencies per modulus."""
    cases = 0
    failures = []
    for p in range(1, pmax + 1):
        for k in range(2, kmax + 1):
            cases += k
            res = eq3_residual_poly(p, k)
            if not res.is_zero:
                failures.append(
                    {
                        "case": f"p={p} k={k}",
                        "status": "FAIL",
                        "detail": f"nonzero residual {res}",
                    }
                )
    return SweepResult("eq3", cases, tuple(failures))


def run_coefficient_check(pmax: int) -> SweepResult:
    """Chain-sum sweep: value (-1)^(p-a) C(p, a) for a < p, exactly 1 at a = p,
    and 2^(p-1) chains enumerated at a = p."""
    cases = 0
    failures = []
    for p in range(1, pmax + 1):
        for a in range(p + 1):
            cases += 1
            got = chain_coefficient_sum(p, a)
            want = (-1) ** (p - a) * binomial(p, a)
            if got != want:
                failures.append(
                    {
                        "case": f"p={p} a={a}",
                        "status": "FAIL",
                        "detail": f"chain sum {got}, closed form {want}",
                    }
                )
        cases += 1
        n_chains = len(enumerate_chains(p, 0))
        if n_chains != 2 ** (p - 1):
            failures.append(
                {
                    "case": f"p={p} chain count",
                    "status": "FAIL",
                    "detail": f"{n_chains} chains, expected {2 ** (p - 1)}",
                }
            )
    return SweepResult("coeffs", cases, tuple(failures))
