"""Exception taxonomy for the germindex package.

Every domain error derives from GermIndexError so callers (and the CLI)
can distinguish domain failures (exit code 1) from input/parse failures
(exit code 2, see ParseError / ScenarioError).
"""


class GermIndexError(Exception):
    """Base class for all domain errors raised by this package."""


class NonLocalSubstitution(GermIndexError):
    """Substitution image has a nonzero constant term, so it does not
    define a continuous local substitution."""


class NotAUnit(GermIndexError):
    """Series inversion requested for a series with zero constant term."""


class NotDivisible(GermIndexError):
    """Exact division impossible at the working precision."""


class PrecisionExhausted(GermIndexError):
    """A verdict could not be certified: recomputation at increased
    truncation order disagreed, or needed data lies above the cutoff."""


class IdentityGerm(GermIndexError):
    """The germ is the identity (up to precision); no decomposition exists."""


class NonPolynomialGerm(GermIndexError):
    """Operation needs exact polynomial images (gcd extraction, resultants)."""


class NotCoprime(GermIndexError):
    """The cofactor pair shares a factor through the origin; the local
    quotient is infinite-dimensional."""


class ShearExhausted(GermIndexError):
    """No shear in the deterministic sequence put the system in general
    position for elimination."""


class UnsupportedSingularBranch(GermIndexError):
    """A curve factor is singular at the origin and no parametrization
    was supplied (or mu-extraction for it is unsupported)."""


class NotInvertible(GermIndexError):
    """Germ has singular linear part; no local inverse exists."""


class NotACurveFixingGerm(GermIndexError):
    """The germ does not fix the curve z1 = 0 pointwise."""


class NotAlgebraicallyStable(GermIndexError):
    """Operation requires the algebraic-stability assertion on the model."""


class TypeICurvePresent(GermIndexError):
    """Isolated-point counting refused: the model contains a type I curve."""


class MissingIndexData(GermIndexError):
    """A fixed point on a periodic curve carries neither a declared index
    nor a germ to compute one from."""


class FieldMismatch(GermIndexError):
    """Arithmetic attempted between quadratic extensions of different
    discriminants."""


class NonIsolated(GermIndexError):
    """A curve of fixed points passes through the point (or the fixed-point
    system has a one-dimensional solution set)."""


class ParseError(GermIndexError):
    """Expression text is outside the grammar. Carries the 0-based
    position of the offending token."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ScenarioError(GermIndexError):
    """Scenario document is malformed or internally inconsistent."""
