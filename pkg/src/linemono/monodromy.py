"""Characteristic polynomials of the monodromy and the stratified zeta pipeline.

Two independent routes to the characteristic polynomial of the monodromy
about the zero fiber exist side by side:

* the closed product formula over lines and vertices, and
* the zeta-function route: the stratified product of local zeta functions
  over the vertices and open line pieces of the zero fiber, divided into
  (1 - t).

Both land in the same factored carrier and must agree after cyclotomic
refactoring; the verification battery checks this on every input.  Zeta
factors are read as (1 - t^m) and characteristic polynomials as (t^m - 1);
the global unit sign this suppresses is invisible to root multiplicities,
which is all that is ever consumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .arrangement import CombinatorialSummary
from .errors import NotEssential, NotPolynomial
from .factored import FactoredUnityPoly


def charpoly_infinity(cs: CombinatorialSummary) -> FactoredUnityPoly:
    """Characteristic polynomial of the monodromy at infinity.

    (t - 1) (t^{d_e} - 1)^{p-2} prod_j (t^{d_e - d_j} - 1)^{k_j - 1},
    of degree b_1 of the general fiber.
    """
    if cs.p < 2:
        raise NotEssential("monodromy at infinity needs two direction classes")
    factors = [(1, 1), (cs.d_e, cs.p - 2)]
    factors += [(cs.d_e - g.weight_sum, g.count - 1) for g in cs.directions]
    return FactoredUnityPoly(factors)


def charpoly_zero_closed(cs: CombinatorialSummary) -> FactoredUnityPoly:
    """Characteristic polynomial of the monodromy about the zero fiber.

    (t - 1) prod_lines (t^{e_j} - 1)^{v_j - 1}
            prod_vertices (t^{d(I_v)} - 1)^{m_v - 2}.
    """
    factors = [(1, 1)]
    factors += [
        (e, count - 1)
        for e, count in zip(cs.weights, cs.line_vertex_counts)
    ]
    factors += [(v.weight_sum, v.multiplicity - 2) for v in cs.vertices]
    return FactoredUnityPoly(factors)


@dataclass(frozen=True)
class StratumDescriptor:
    """One stratum of the zero fiber: a vertex or an open line piece.

    Vertices carry their weight sum and line multiplicity with Euler
    characteristic 1; the open piece of a line carries its weight (a
    one-branch "vertex") with Euler characteristic 1 - v_j.
    """

    kind: str  # "vertex" or "open_line_piece"
    weight_sum: int
    multiplicity: int
    euler: int


def strata(cs: CombinatorialSummary) -> Iterator[StratumDescriptor]:
    """The stratification of the zero fiber the zeta product runs over."""
    for v in cs.vertices:
        yield StratumDescriptor(
            kind="vertex",
            weight_sum=v.weight_sum,
            multiplicity=v.multiplicity,
            euler=1,
        )
    for e, count in zip(cs.weights, cs.line_vertex_counts):
        yield StratumDescriptor(
            kind="open_line_piece",
            weight_sum=e,
            multiplicity=1,
            euler=1 - count,
        )


@dataclass(frozen=True)
class ZetaFunction:
    """Alternating product of det(Id - t*monodromy) over cohomology degrees.

    The carrier's factors are read as (1 - t^m); negative exponents are
    poles of the rational function.
    """

    value: FactoredUnityPoly

    def numerator(self) -> FactoredUnityPoly:
        return FactoredUnityPoly(
            {m: c for m, c in self.value.factors.items() if c > 0}
        )

    def denominator(self) -> FactoredUnityPoly:
        return FactoredUnityPoly(
            {m: -c for m, c in self.value.factors.items() if c < 0}
        )

    def __str__(self) -> str:
        def fmt(poly: FactoredUnityPoly) -> str:
            if poly.is_one:
                return "1"
            return "".join(
                ("(1-t)" if m == 1 else f"(1-t^{m})") + (f"^{c}" if c != 1 else "")
                for m, c in sorted(poly.factors.items())
            )

        num, den = self.numerator(), self.denominator()
        if den.is_one:
            return fmt(num)
        return f"{fmt(num)} / {fmt(den)}"

    def to_json(self) -> dict:
        return {
            "denominator": self.denominator().to_json(),
            "numerator": self.numerator().to_json(),
        }


def local_zeta(s: StratumDescriptor) -> ZetaFunction:
    """Local zeta function of the defining polynomial at a point of the stratum.

    At an ordinary point where branches of total weight D and multiplicity
    m meet, the Milnor fiber is a degree-D cyclic cover of a sphere minus
    m points with the deck rotation as monodromy, giving (1 - t^D)^{2-m}.
    A smooth point of a weight-e line is the m = 1 case, (1 - t^e).
    """
    return ZetaFunction(FactoredUnityPoly({s.weight_sum: 2 - s.multiplicity}))


def zeta_at_zero(cs: CombinatorialSummary) -> ZetaFunction:
    """Global zeta function about the zero fiber as the stratified product.

    Product over strata of the local zeta raised to the stratum's Euler
    characteristic; only the vertices and open line pieces contribute.
    """
    total = FactoredUnityPoly.one()
    for s in strata(cs):
        total = total * (local_zeta(s).value ** s.euler)
    return ZetaFunction(total)


def charpoly_zero_from_zeta(z: ZetaFunction) -> FactoredUnityPoly:
    """Recover det(Id - t*M^1) = (1 - t) / Z from the zeta function.

    The general fiber is connected, so degree 0 contributes exactly
    (1 - t).  The result must be an honest polynomial; a pole here means
    the pipeline is inconsistent.
    """
    result = FactoredUnityPoly({1: 1}) * (z.value ** -1)
    if result.to_cyclotomic().has_negative_exponent():
        raise NotPolynomial(
            f"(1 - t)/Z = {result} has a pole; zeta pipeline inconsistent"
        )
    return result
