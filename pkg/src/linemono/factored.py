"""Exact algebra of products of (t^m - 1) factors.

Every characteristic polynomial and zeta function in this package is a
finite product prod_m (t^m - 1)^{c_m} with integer exponents c_m, stored
sparsely as a map {m: c_m}.  Negative exponents are first class: zeta
functions are rational functions.  Because t^m - 1 = prod_{N | m} Phi_N(t)
(Phi_N the N-th cyclotomic polynomial), refactoring over the cyclotomic
basis turns root-multiplicity questions into exact integer divisor sums,
which is how all multiplicity counting is done here.  Dense expansion to
integer coefficient lists exists as an explicit oracle path, not as the
working representation.

Dense polynomials, where they appear, are ascending integer coefficient
lists: [c0, c1, ...] means c0 + c1*t + ...
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .errors import NegativeExponent, NotPolynomial
from .exact import RootOfUnity


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    """Euler's totient, by trial-division factorization."""
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    """Dense product of two ascending integer coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division by a monic divisor; remainder must vanish."""
    num = list(num)
    deg_q = len(num) - len(den)
    if deg_q < 0:
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (deg_q + 1)
    for i in range(deg_q, -1, -1):
        coeff = num[i + len(den) - 1]
        quot[i] = coeff
        if coeff:
            for j, d in enumerate(den):
                num[i + j] -= coeff * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly = _poly_div_exact(poly, list(_cyclotomic(d)))
    return tuple(poly)


def cyclotomic_poly(n: int) -> list[int]:
    """The n-th cyclotomic polynomial as a dense ascending coefficient list.

    Computed by exactly dividing t^n - 1 by the cyclotomic polynomials of
    the proper divisors of n.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    return list(_cyclotomic(n))


class FactoredUnityPoly:
    """A product prod_m (t^m - 1)^{c_m}, exponents possibly negative.

    Values are immutable; all operations return new objects.  The degree
    sum(m * c_m) may be negative for proper rational functions.
    """

    __slots__ = ("_items",)

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = factors.items() if isinstance(factors, Mapping) else factors
        merged: dict[int, int] = {}
        for m, c in pairs:
            if m < 1:
                raise ValueError(f"factor index must be >= 1, got {m}")
            merged[m] = merged.get(m, 0) + c
        self._items = tuple(sorted((m, c) for m, c in merged.items() if c != 0))

    @classmethod
    def one(cls) -> "FactoredUnityPoly":
        return cls()

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._items)

    @property
    def is_one(self) -> bool:
        return not self._items

    def __eq__(self, other) -> bool:
        return isinstance(other, FactoredUnityPoly) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __mul__(self, other: "FactoredUnityPoly") -> "FactoredUnityPoly":
        return FactoredUnityPoly(list(self._items) + list(other._items))

    def __pow__(self, exponent: int) -> "FactoredUnityPoly":
        return FactoredUnityPoly((m, c * exponent) for m, c in self._items)

    def degree(self) -> int:
        """sum(m * c_m); the polynomial degree when all exponents are >= 0."""
        return sum(m * c for m, c in self._items)

    def has_negative_exponent(self) -> bool:
        return any(c < 0 for _, c in self._items)

    def to_cyclotomic(self) -> "CyclotomicExponents":
        """Refactor over the cyclotomic basis: t^m - 1 = prod_{N|m} Phi_N."""
        eps: dict[int, int] = {}
        for m, c in self._items:
            for n in divisors(m):
                eps[n] = eps.get(n, 0) + c
        return CyclotomicExponents(eps)

    def root_multiplicity(self, root: RootOfUnity) -> int:
        """Multiplicity of the given root of unity, as a divisor sum.

        Equals the actual root multiplicity whenever all exponents are
        nonnegative; for rational functions it is the order of vanishing
        (negative at poles).
        """
        n = root.order
        return sum(c for m, c in self._items if m % n == 0)

    def expand(self) -> list[int]:
        """Dense ascending integer coefficients of the expanded product.

        Requires the value to be an honest polynomial: every cyclotomic
        exponent must be nonnegative (individual factor exponents may
        still be negative, e.g. {2: 1, 1: -1} expands to t + 1).
        """
        return self.to_cyclotomic().expand()

    def __str__(self) -> str:
        if not self._items:
            return "1"
        parts = []
        for m, c in self._items:
            base = "(t-1)" if m == 1 else f"(t^{m}-1)"
            parts.append(base if c == 1 else f"{base}^{c}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"FactoredUnityPoly({dict(self._items)!r})"

    def to_json(self) -> dict[str, int]:
        return {str(m): c for m, c in self._items}


class CyclotomicExponents:
    """A product prod_N Phi_N(t)^{eps_N} over cyclotomic polynomials."""

    __slots__ = ("_items",)

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: dict[int, int] = {}
        for n, e in pairs:
            if n < 1:
                raise ValueError(f"cyclotomic index must be >= 1, got {n}")
            merged[n] = merged.get(n, 0) + e
        self._items = tuple(sorted((n, e) for n, e in merged.items() if e != 0))

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self._items)

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicExponents) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def degree(self) -> int:
        return sum(euler_phi(n) * e for n, e in self._items)

    def multiplicity(self, root: RootOfUnity) -> int:
        """Exponent of the cyclotomic factor whose roots include `root`."""
        return dict(self._items).get(root.order, 0)

    def has_negative_exponent(self) -> bool:
        return any(e < 0 for _, e in self._items)

    def expand(self) -> list[int]:
        if self.has_negative_exponent():
            raise NotPolynomial(f"{self} has a pole; cannot expand")
        out = [1]
        for n, e in self._items:
            phi = cyclotomic_poly(n)
            for _ in range(e):
                out = poly_mul(out, phi)
        return out

    def __str__(self) -> str:
        if not self._items:
            return "1"
        return "".join(
            f"Phi_{n}" + (f"^{e}" if e != 1 else "") for n, e in self._items
        )

    def __repr__(self) -> str:
        return f"CyclotomicExponents({dict(self._items)!r})"

    def to_json(self) -> dict[str, int]:
        return {str(n): e for n, e in self._items}


def gcd_factored(a: FactoredUnityPoly, b: FactoredUnityPoly) -> CyclotomicExponents:
    """Greatest common divisor of two factored polynomials.

    Both inputs must have nonnegative factor exponents; the gcd is the
    entrywise minimum of their cyclotomic exponent vectors.
    """
    if a.has_negative_exponent() or b.has_negative_exponent():
        raise NegativeExponent("gcd requires nonnegative exponents")
    ea = a.to_cyclotomic().exponents
    eb = b.to_cyclotomic().exponents
    return CyclotomicExponents(
        {n: min(ea[n], eb[n]) for n in ea.keys() & eb.keys()}
    )
