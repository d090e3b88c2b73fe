"""Exact monodromy invariants of weighted affine line arrangements.

From the coefficients and integer multiplicities of an affine line
arrangement over the Gaussian rationals, compute (all in exact integer
arithmetic): the combinatorial summary, the closed-form topological
invariants, the characteristic polynomials of the monodromy of the
defining polynomial about the zero fiber and at infinity, the stratified
zeta function, and upper bounds on twisted first cohomology of the
complement with rank-one local-system coefficients.
"""

from .arrangement import (
    CombinatorialSummary,
    DirectionClass,
    Line,
    Vertex,
    WeightedArrangement,
    compute_combinatorics,
    intersect,
    load_arrangement,
    parse_arrangement,
)
from .census import (
    DIRECTIONS,
    CensusRow,
    RunConfig,
    SplitMix64,
    draw_arrangement,
    generate_arrangements,
    random_weights,
    run_census,
    summarize,
)
from .checks import CheckResult, battery_passed, run_battery
from .errors import (
    BadGcd,
    BadWeight,
    DuplicateLine,
    InfinityMonodromyTrivial,
    InputError,
    InternalCheckError,
    LengthMismatch,
    NegativeExponent,
    NotEssential,
    NotPolynomial,
    ParseError,
    TrivialMonodromy,
    WeightedNotSupported,
)
from .exact import GaussianRational, RootOfUnity, parse_coefficient, parse_rational
from .factored import (
    CyclotomicExponents,
    FactoredUnityPoly,
    cyclotomic_poly,
    divisors,
    euler_phi,
    gcd_factored,
    poly_mul,
)
from .invariants import (
    InvariantReport,
    betti1_general_fiber,
    genus_general_fiber,
    infinity_singularity_mu,
    invariant_report,
    mu_arrangement,
)
from .localsys import (
    BoundReport,
    LocalSystem,
    bound_from_summary,
    canonical_local_system,
    delta_f,
    h1_upper_bound,
    vertex_mult_infinity,
    vertex_mult_zero,
)
from .monodromy import (
    StratumDescriptor,
    ZetaFunction,
    charpoly_infinity,
    charpoly_zero_closed,
    charpoly_zero_from_zeta,
    local_zeta,
    strata,
    zeta_at_zero,
)

__version__ = "0.1.0"

__all__ = [
    "BadGcd",
    "BadWeight",
    "BoundReport",
    "CensusRow",
    "CheckResult",
    "CombinatorialSummary",
    "CyclotomicExponents",
    "DIRECTIONS",
    "DirectionClass",
    "DuplicateLine",
    "FactoredUnityPoly",
    "GaussianRational",
    "InfinityMonodromyTrivial",
    "InputError",
    "InternalCheckError",
    "InvariantReport",
    "LengthMismatch",
    "Line",
    "LocalSystem",
    "NegativeExponent",
    "NotEssential",
    "NotPolynomial",
    "ParseError",
    "RootOfUnity",
    "RunConfig",
    "SplitMix64",
    "StratumDescriptor",
    "TrivialMonodromy",
    "Vertex",
    "WeightedArrangement",
    "WeightedNotSupported",
    "ZetaFunction",
    "battery_passed",
    "betti1_general_fiber",
    "bound_from_summary",
    "canonical_local_system",
    "charpoly_infinity",
    "charpoly_zero_closed",
    "charpoly_zero_from_zeta",
    "compute_combinatorics",
    "cyclotomic_poly",
    "delta_f",
    "divisors",
    "draw_arrangement",
    "euler_phi",
    "gcd_factored",
    "generate_arrangements",
    "genus_general_fiber",
    "h1_upper_bound",
    "infinity_singularity_mu",
    "intersect",
    "invariant_report",
    "load_arrangement",
    "local_zeta",
    "mu_arrangement",
    "parse_arrangement",
    "parse_coefficient",
    "parse_rational",
    "poly_mul",
    "random_weights",
    "run_battery",
    "run_census",
    "strata",
    "summarize",
    "vertex_mult_infinity",
    "vertex_mult_zero",
    "zeta_at_zero",
]
