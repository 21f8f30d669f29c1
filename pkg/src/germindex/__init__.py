"""germindex: exact fixed-point indices and periodic-point counts for
planar map germs and the surface models built from them."""

from .errors import (
    FieldMismatch,
    GermIndexError,
    IdentityGerm,
    MissingIndexData,
    NonIsolated,
    NonLocalSubstitution,
    NonPolynomialGerm,
    NotACurveFixingGerm,
    NotAlgebraicallyStable,
    NotAUnit,
    NotCoprime,
    NotDivisible,
    NotInvertible,
    ParseError,
    PrecisionExhausted,
    ScenarioError,
    ShearExhausted,
    TypeICurvePresent,
    UnsupportedSingularBranch,
)
from .germs import (
    TYPE_I,
    TYPE_II,
    BranchRecord,
    DifferentialPair,
    GermDecomposition,
    IndexReport,
    MapGerm,
    branches,
    classify_branch,
    decompose,
    decompose_iterate_guided,
    delta,
    delta_resultant,
    invert,
    iterate,
    local_index,
    omega_sigma,
)
from .polys import Poly1, Poly2, factor_list2, gcd2, resultant_z1
from .series import (
    DEFAULT_PRECISION,
    AboveDegree,
    Rational,
    SeriesPair,
    TruncatedSeries1,
    TruncatedSeries2,
)

__version__ = "0.1.0"
