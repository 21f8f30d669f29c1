"""Brute-force verification paths that avoid the truncated-series code.

Everything here works on exact global polynomial data: fixed-point
multiplicities via resultant elimination with a deterministic shear
fallback, total affine fixed-point counts from resultant degrees, a
positivity test for indices at points lying on fixed curves, and the
determinant form of the torus Lefschetz number.
"""

from __future__ import annotations

from .errors import NonIsolated, ShearExhausted, UnsupportedSingularBranch
from .polys import Poly2, factor_list2, gcd1, gcd2, resultant_z1, root_multiplicity
from .series import rat
from .surd import Surd


class PolynomialMap:
    """A global polynomial self-map of the affine plane."""

    __slots__ = ("p1", "p2")

    def __init__(self, p1: Poly2, p2: Poly2):
        self.p1 = p1
        self.p2 = p2

    def iterate(self, n: int) -> "PolynomialMap":
        if n < 1:
            raise ValueError("iterate needs n >= 1")
        q1, q2 = self.p1, self.p2
        for _ in range(n - 1):
            q1, q2 = self.p1.compose(q1, q2), self.p2.compose(q1, q2)
        return PolynomialMap(q1, q2)

    def fixed_system(self, n: int = 1) -> tuple[Poly2, Poly2]:
        fn = self.iterate(n)
        return fn.p1 - Poly2.variable(1), fn.p2 - Poly2.variable(2)

    def __repr__(self):
        return f"PolynomialMap({self.p1!r}, {self.p2!r})"


_SHEARS = [0]
for _k in range(1, 25):
    _SHEARS += [_k, -_k]


def _local_multiplicity_origin(P: Poly2, Q: Poly2) -> int:
    """Intersection multiplicity of two coprime polynomials at the origin.

    Deterministic shears z2 -> z2 + c*z1 are tried until P is z1-regular
    and the univariate gcd along z2 = 0 certifies that the origin is the
    only common zero on its level; the z2-order of the resultant is then
    the local multiplicity.
    """
    if P.constant_term() != 0 or Q.constant_term() != 0:
        return 0
    dP = P.total_degree()
    for c in _SHEARS:
        Pc = P.shear_z2(c)
        Qc = Q.shear_z2(c)
        if Pc[(dP, 0)] == 0:
            continue
        u1 = Pc.restrict_z2_zero()
        u2 = Qc.restrict_z2_zero()
        if u1.is_zero() or u2.is_zero():
            continue
        g = gcd1(u1, u2)
        if sum(1 for co in g.coeff if co != 0) != 1:
            continue
        res = resultant_z1(Pc, Qc)
        if res.is_zero():
            raise NonIsolated("system has a common component")
        return root_multiplicity(res, 0)
    raise ShearExhausted("no shear isolated the point for elimination")


def fixed_multiplicity(pmap: PolynomialMap, point, n: int = 1) -> int:
    """Multiplicity of `point` as a solution of f^n(z) = z.

    The point must be isolated: a fixed-curve component through it raises
    NonIsolated.  Points that are not fixed at all report 0.
    """
    a, b = (rat(point[0]), rat(point[1]))
    P, Q = pmap.fixed_system(n)
    common = gcd2(P, Q)
    if not common.is_constant() and common.evaluate(a, b) == 0:
        raise NonIsolated(f"a curve of fixed points passes through {point}")
    return _local_multiplicity_origin(P.translate(a, b), Q.translate(a, b))


def affine_fixed_count(pmap: PolynomialMap, n: int = 1) -> int:
    """Total number of affine solutions of f^n(z) = z with multiplicity.

    With the sheared first equation z1-regular, every z2-level of the
    resultant carries exactly the sum of the local multiplicities on it,
    so the resultant degree is the global count.
    """
    P, Q = pmap.fixed_system(n)
    if P.is_zero() and Q.is_zero():
        raise NonIsolated("every point is fixed")
    if P.is_zero() or Q.is_zero():
        other = Q if P.is_zero() else P
        if other.is_constant():
            return 0
        raise NonIsolated("solution set contains a curve")
    if P.is_constant() or Q.is_constant():
        return 0
    common = gcd2(P, Q)
    if not common.is_constant():
        raise NonIsolated("a curve of fixed points exists")
    dP = P.total_degree()
    for c in _SHEARS:
        Pc = P.shear_z2(c)
        if Pc[(dP, 0)] == 0:
            continue
        res = resultant_z1(Pc, Q.shear_z2(c))
        if res.is_zero():
            raise NonIsolated("system has a common component")
        return res.degree()
    raise ShearExhausted("no shear made the system z1-regular")


def fixed_index_positive(pmap: PolynomialMap, point, n: int = 1) -> bool:
    """Is the local index of f^n at `point` positive?

    Works at points lying on fixed curves, where fixed_multiplicity refuses.
    Writing the fixed-point system as (G*h1, G*h2) with G the global curve
    factor, the index is positive iff h1 and h2 both vanish at the point or
    some type I curve branch through it is tangent to (h2, -h1) there, i.e.
    h1 * dp/dz1 + h2 * dp/dz2 vanishes at the point.
    """
    a, b = (rat(point[0]), rat(point[1]))
    P, Q = pmap.fixed_system(n)
    G = gcd2(P, Q)
    if G.is_constant():
        return fixed_multiplicity(pmap, point, n) > 0
    h1 = P.exact_div(G)
    h2 = Q.exact_div(G)
    if h1.evaluate(a, b) == 0 and h2.evaluate(a, b) == 0:
        return True
    for factor, _mult in factor_list2(G)[1]:
        if factor.evaluate(a, b) != 0:
            continue
        gx = factor.derivative(1)
        gy = factor.derivative(2)
        if gx.evaluate(a, b) == 0 and gy.evaluate(a, b) == 0:
            raise UnsupportedSingularBranch(
                f"curve factor {factor!r} is singular at {point}"
            )
        e = h1 * gx + h2 * gy
        if factor.divides(e):
            # the restricted form vanishes identically on this branch
            # (type II); its order contributes only where h1, h2 vanish,
            # which was already tested
            continue
        if e.evaluate(a, b) == 0:
            return True
    return False


def torus_lefschetz_oracle(delta1: Surd, delta2: Surd, n: int = 1) -> Surd:
    """(1 - d1^n)(1 - d2^n)(1 - conj(d1)^n)(1 - conj(d2)^n), exactly.

    This is the determinant form |det(I - A^n)|^2 of the Lefschetz number
    of a torus map with linear-part eigenvalues d1, d2; requires
    |d1 * d2| = 1 exactly.
    """
    prod = delta1 * delta2
    if prod.norm_squared() != Surd.rational(1):
        raise ValueError("eigenvalue product must have modulus one")
    one = Surd.rational(1)
    value = (one - delta1**n) * (one - delta2**n) \
        * (one - delta1.conjugate()**n) * (one - delta2.conjugate()**n)
    return value
