"""Self-verification battery: the identities every valid arrangement satisfies.

Each check recomputes both sides of an identity through independent code
paths and compares exactly.  The battery runs in the `verify` command, on
every census draw, and (with an injected summary) as a negative control
in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import CombinatorialSummary, WeightedArrangement, compute_combinatorics
from .errors import InputError, InternalCheckError
from .exact import RootOfUnity
from .factored import FactoredUnityPoly
from .invariants import betti1_general_fiber, genus_general_fiber, mu_arrangement
from .monodromy import (
    charpoly_infinity,
    charpoly_zero_closed,
    charpoly_zero_from_zeta,
    zeta_at_zero,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"detail": self.detail, "name": self.name, "passed": self.passed}


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, passed, "" if passed else detail)


def run_battery(
    arr: WeightedArrangement, summary: CombinatorialSummary | None = None
) -> list[CheckResult]:
    """Run every identity check; pass a doctored summary to provoke failures."""
    cs = compute_combinatorics(arr) if summary is None else summary
    results: list[CheckResult] = []

    incidence = sum(v.multiplicity for v in cs.vertices)
    by_lines = sum(cs.line_vertex_counts)
    by_hist = sum(m * n for m, n in cs.histogram.items())
    results.append(
        _check(
            "incidence-count",
            by_lines == incidence == by_hist,
            f"per-line {by_lines}, per-vertex {incidence}, histogram {by_hist}",
        )
    )

    members: list[int] = []
    for g in cs.directions:
        members.extend(g.members)
    results.append(
        _check(
            "direction-partition",
            sorted(members) == list(range(cs.d))
            and sum(g.weight_sum for g in cs.directions) == cs.d_e,
            "direction classes do not partition the lines",
        )
    )

    try:
        d_zero = charpoly_zero_closed(cs)
        d_inf = charpoly_infinity(cs)
        b1 = betti1_general_fiber(cs)
        results.append(
            _check(
                "degree-identity",
                d_zero.degree() == d_inf.degree() == b1,
                f"deg zero {d_zero.degree()}, deg infinity {d_inf.degree()}, b1 {b1}",
            )
        )
        results.append(
            _check(
                "charpoly-exponents-nonnegative",
                not d_zero.has_negative_exponent()
                and not d_inf.has_negative_exponent(),
                f"zero {d_zero}, infinity {d_inf}",
            )
        )
        mult_one = d_inf.root_multiplicity(RootOfUnity(0, 1))
        results.append(
            _check(
                "root-one-multiplicity",
                mult_one == cs.d - 1,
                f"multiplicity of 1 at infinity is {mult_one}, expected {cs.d - 1}",
            )
        )
        via_zeta = charpoly_zero_from_zeta(zeta_at_zero(cs)).to_cyclotomic()
        closed = d_zero.to_cyclotomic()
        results.append(
            _check(
                "zeta-agreement",
                via_zeta == closed,
                f"zeta route {via_zeta}, closed form {closed}",
            )
        )
    except (InputError, InternalCheckError) as exc:
        results.append(_check("charpoly-computable", False, str(exc)))

    lhs = 1 - cs.d + sum(n * (m - 1) * m for m, n in cs.histogram.items())
    rhs = (cs.d - 1) ** 2 - sum(g.count * (g.count - 1) for g in cs.directions)
    results.append(
        _check("numbers-identity", lhs == rhs, f"vertex side {lhs}, direction side {rhs}")
    )

    mu = mu_arrangement(cs)
    chi_fiber_zero = cs.d - sum(v.multiplicity - 1 for v in cs.vertices)
    results.append(
        _check(
            "euler-consistency",
            mu == 1 - chi_fiber_zero and mu >= 0,
            f"mu {mu} vs 1 - chi(zero fiber) {1 - chi_fiber_zero}",
        )
    )

    if cs.is_unweighted:
        reduced_form = FactoredUnityPoly(
            [(1, mu + sum(cs.histogram.values()))]
            + [(m, n * (m - 2)) for m, n in cs.histogram.items()]
        )
        results.append(
            _check(
                "unweighted-specialization",
                reduced_form.to_cyclotomic() == charpoly_zero_closed(cs).to_cyclotomic(),
                f"vertex-histogram form {reduced_form}, line-vertex form "
                f"{charpoly_zero_closed(cs)}",
            )
        )
        try:
            genus = genus_general_fiber(cs)
            results.append(_check("genus-nonnegative", genus >= 0, f"genus {genus}"))
        except (InputError, InternalCheckError) as exc:
            results.append(_check("genus-nonnegative", False, str(exc)))

    return results


def battery_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)
