"""Exact arithmetic substrate: rationals, dense polynomials, cyclotomic residues.

Rationals are stdlib ``fractions.Fraction`` (always canonical: positive
denominator, reduced).  Polynomials are dense ascending coefficient lists over
exact scalars (int or Fraction); the zero polynomial has an empty coefficient
tuple and degree ``None``.  ``CyclotomicElement`` is a residue in
Q[x]/Phi_k(x), the exact stand-in for expressions in a primitive k-th root of
unity.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ConsistencyError

Rational = Fraction
Scalar = Union[int, Fraction]


def format_rational(q: Scalar) -> str:
    """Serialize an exact scalar as "a/b", or "a" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    """Inverse of :func:`format_rational`."""
    return Fraction(s)


def binomial(n: int, r: int) -> int:
    """Binomial coefficient C(n, r); 0 when r < 0 or r > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Multinomial coefficient n! / (parts_1! * ... * parts_m!).

    The parts must be non-negative and sum to n.
    """
    if n < 0:
        raise ValueError(f"multinomial requires n >= 0, got n={n}")
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be non-negative, got {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {list(parts)} do not sum to n={n}")
    out = 1
    remaining = n
    for p in parts:
        out *= math.comb(remaining, p)
        remaining -= p
    return out


class Polynomial:
    """Dense univariate polynomial over exact scalars.

    Coefficients are stored ascending by degree with trailing zeros trimmed,
    so representations are canonical.  ``var`` is a display label only; it is
    ignored by arithmetic and equality.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "x"):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, var: str = "x") -> "Polynomial":
        return cls((), var=var)

    @classmethod
    def one(cls, var: str = "x") -> "Polynomial":
        return cls((1,), var=var)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1, var: str = "x") -> "Polynomial":
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls([0] * degree + [coeff], var=var)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree as int, or None for the zero polynomial (never -1)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, d: int) -> Scalar:
        """Coefficient of degree d; 0 beyond the stored length."""
        if d < 0:
            raise ValueError("coefficient degree must be non-negative")
        if d >= len(self.coeffs):
            return 0
        return self.coeffs[d]

    def evaluate(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,), var=self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial((-c for c in self.coeffs), var=self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial((), var=self.var)
            return Polynomial((c * other for c in self.coeffs), var=self.var)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial((), var=self.var)
        out: list = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out, var=self.var)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        inv = Fraction(1) / Fraction(scalar)
        return self * inv

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a non-negative integer")
        result = Polynomial.one(var=self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, den: "Polynomial"):
        """Long division; quotient and remainder with deg(rem) < deg(den)."""
        if not isinstance(den, Polynomial):
            return NotImplemented
        if den.is_zero:
            raise ZeroDivisionError("polynomial division by zero polynomial")
        ddeg = den.degree
        rem = list(self.coeffs)
        if len(rem) <= ddeg:
            return Polynomial((), var=self.var), Polynomial(rem, var=self.var)
        lead = den.coeffs[-1]
        quot: list = [0] * (len(rem) - ddeg)
        for i in range(len(rem) - 1, ddeg - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            factor = c if lead == 1 else Fraction(c) / Fraction(lead)
            quot[i - ddeg] = factor
            for j, dc in enumerate(den.coeffs):
                rem[i - ddeg + j] = rem[i - ddeg + j] - factor * dc
        return Polynomial(quot, var=self.var), Polynomial(rem, var=self.var)

    def __mod__(self, den: "Polynomial"):
        return divmod(self, den)[1]

    def exact_div(self, den: "Polynomial") -> "Polynomial":
        """Division that must be remainder-free; raises ConsistencyError otherwise."""
        q, r = divmod(self, den)
        if not r.is_zero:
            raise ConsistencyError(f"expected exact polynomial division, remainder {r!r}")
        return q

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == (() if other == 0 else (other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_json_coeffs(self) -> list[str]:
        """Ascending-degree coefficient strings; the shared wire format."""
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json_coeffs(cls, items: Sequence[str], var: str = "x") -> "Polynomial":
        return cls((parse_rational(s) for s in items), var=var)

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = format_rational(abs(Fraction(c)))
            if d == 0:
                body = mag
            else:
                x = self.var if d == 1 else f"{self.var}^{d}"
                body = x if mag == "1" else f"{mag}*{x}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r}, var={self.var!r})"


def poly_coefficient(p: Polynomial, d: int) -> Fraction:
    """Coefficient of degree d as a canonical Rational (0 beyond the degree)."""
    return Fraction(p.coefficient(d))


def polynomial_from_points(points: Sequence[tuple[Scalar, Scalar]], var: str = "x") -> Polynomial:
    """Lagrange interpolation through distinct exact points."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must have distinct abscissae")
    total = Polynomial.zero(var=var)
    for i, (xi, yi) in enumerate(points):
        yi = Fraction(yi)
        if yi == 0:
            continue
        basis = Polynomial.one(var=var)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * Polynomial((-xj, 1), var=var)
            denom *= Fraction(xi) - xj
        total = total + basis * (yi / denom)
    return total


_CYCLOTOMIC_CACHE: dict[int, Polynomial] = {}


def _divisors(k: int) -> list[int]:
    out = [d for d in range(1, k + 1) if k % d == 0]
    return out


def cyclotomic_polynomial(k: int) -> Polynomial:
    """The k-th cyclotomic polynomial Phi_k, monic with integer coefficients.

    Computed by exact division Phi_k = (x^k - 1) / prod_{d|k, d<k} Phi_d; the
    division being remainder-free is a built-in self-check.  Results are
    cached in divisor order.
    """
    if k < 1:
        raise ValueError(f"cyclotomic_polynomial requires k >= 1, got {k}")
    cached = _CYCLOTOMIC_CACHE.get(k)
    if cached is not None:
        return cached
    if k == 1:
        result = Polynomial((-1, 1))
    else:
        num = Polynomial([-1] + [0] * (k - 1) + [1])
        den = Polynomial.one()
        for d in _divisors(k)[:-1]:
            den = den * cyclotomic_polynomial(d)
        result = num.exact_div(den)
    _CYCLOTOMIC_CACHE[k] = result
    return result


class CyclotomicElement:
    """Residue in Q[x]/Phi_k(x); x stands for a primitive k-th root of unity.

    The residue polynomial is always fully reduced (degree < deg Phi_k), so
    x^k collapses to 1 and equality is literal.
    """

    __slots__ = ("modulus_k", "residue")

    def __init__(self, modulus_k: int, value: Polynomial | Scalar = 0):
        if modulus_k < 1:
            raise ValueError(f"cyclotomic modulus must be >= 1, got {modulus_k}")
        poly = value if isinstance(value, Polynomial) else Polynomial((value,))
        reduced = poly % cyclotomic_polynomial(modulus_k)
        object.__setattr__(self, "modulus_k", modulus_k)
        object.__setattr__(self, "residue", reduced)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @property
    def is_zero(self) -> bool:
        return self.residue.is_zero

    def _check(self, other: "CyclotomicElement"):
        if self.modulus_k != other.modulus_k:
            raise ValueError(
                f"mixed cyclotomic moduli {self.modulus_k} and {other.modulus_k}"
            )

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement(self.modulus_k, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.modulus_k, self.residue + o.residue)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.modulus_k, -self.residue)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.modulus_k, self.residue - o.residue)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.modulus_k, o.residue - self.residue)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement(self.modulus_k, self.residue * other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        self._check(other)
        return CyclotomicElement(self.modulus_k, self.residue * other.residue)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("cyclotomic power must be a non-negative integer")
        result = CyclotomicElement(self.modulus_k, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return self.modulus_k == other.modulus_k and self.residue == other.residue
        if isinstance(other, (int, Fraction)):
            return self.residue == other
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus_k, self.residue))

    def __repr__(self):
        return f"CyclotomicElement(k={self.modulus_k}, residue={self.residue})"


def cyclo_root_power(k: int, e: int) -> CyclotomicElement:
    """x^(e mod k) as a reduced residue mod Phi_k.

    The exponent is reduced into [0, k) first, so construction is total for
    any integer exponent.
    """
    if k < 1:
        raise ValueError(f"cyclo_root_power requires k >= 1, got {k}")
    return CyclotomicElement(k, Polynomial.monomial(e % k))
