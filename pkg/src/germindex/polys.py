"""Exact bivariate and univariate polynomials over Q.

Poly2 is the workhorse for germ decomposition and the elimination oracle:
a sparse dict of exponent pairs with Fraction coefficients.  Heavy
computer-algebra steps (multivariate gcd, irreducible factorization over Q,
resultants) are delegated to sympy; everything else (arithmetic, exact
division, composition, shears) is done directly on the dicts, which is much
faster in the tight loops.
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

from .errors import NotDivisible
from .series import TruncatedSeries1, TruncatedSeries2, rat

Z1, Z2 = sp.symbols("z1 z2")


class Poly2:
    """Exact polynomial in z1, z2 with rational coefficients."""

    __slots__ = ("coeff",)

    def __init__(self, coeff):
        self.coeff = {e: c for e, c in coeff.items() if c != 0}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly2":
        return cls({})

    @classmethod
    def constant(cls, value) -> "Poly2":
        return cls({(0, 0): rat(value)})

    @classmethod
    def variable(cls, index: int) -> "Poly2":
        if index not in (1, 2):
            raise ValueError("variable index must be 1 or 2")
        return cls({(1, 0) if index == 1 else (0, 1): Fraction(1)})

    @classmethod
    def from_terms(cls, terms) -> "Poly2":
        return cls({tuple(e): rat(c) for e, c in terms.items()})

    @classmethod
    def from_sympy(cls, expr) -> "Poly2":
        p = sp.Poly(expr, Z1, Z2, domain="QQ")
        return cls({m: Fraction(c.p, c.q) for m, c in zip(p.monoms(), p.coeffs())})

    def to_sympy(self):
        return sp.Add(
            *(sp.Rational(c.numerator, c.denominator) * Z1**i * Z2**j
              for (i, j), c in self.coeff.items())
        )

    def to_series(self, precision: int) -> TruncatedSeries2:
        return TruncatedSeries2(dict(self.coeff), precision)

    # -- queries ----------------------------------------------------------

    def __getitem__(self, exps) -> Fraction:
        return self.coeff.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeff

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.coeff)

    def constant_term(self) -> Fraction:
        return self.coeff.get((0, 0), Fraction(0))

    def vanishes_at_origin(self) -> bool:
        return self.constant_term() == 0

    def total_degree(self) -> int:
        if not self.coeff:
            return -1
        return max(i + j for i, j in self.coeff)

    def order(self) -> int:
        """Least total degree of a term; raises on the zero polynomial."""
        if not self.coeff:
            raise ValueError("zero polynomial has no order")
        return min(i + j for i, j in self.coeff)

    def z1_order(self) -> int:
        if not self.coeff:
            raise ValueError("zero polynomial has no order")
        return min(i for i, _ in self.coeff)

    def degree_in(self, index: int) -> int:
        if not self.coeff:
            return -1
        return max(e[0] if index == 1 else e[1] for e in self.coeff)

    def linear_part(self) -> tuple[Fraction, Fraction]:
        """Coefficients of (z1, z2) in the degree-1 part."""
        return (self.coeff.get((1, 0), Fraction(0)), self.coeff.get((0, 1), Fraction(0)))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.coeff == other.coeff

    def __hash__(self):
        return hash(frozenset(self.coeff.items()))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.constant(other)
        out = dict(self.coeff)
        for e, c in other.coeff.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2({e: -c for e, c in self.coeff.items()})

    def __sub__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly2":
        return (-self) + other

    def __mul__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return Poly2({e: c * v for e, v in self.coeff.items()})
        out: dict = {}
        for (i1, j1), c1 in self.coeff.items():
            for (i2, j2), c2 in other.coeff.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly2":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly2.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- substitution -----------------------------------------------------

    def evaluate(self, a, b) -> Fraction:
        a, b = rat(a), rat(b)
        pow_a: dict[int, Fraction] = {0: Fraction(1)}
        pow_b: dict[int, Fraction] = {0: Fraction(1)}

        def pw(table, base, k):
            while len(table) <= k:
                table[len(table)] = table[len(table) - 1] * base
            return table[k]

        total = Fraction(0)
        for (i, j), c in self.coeff.items():
            total += c * pw(pow_a, a, i) * pw(pow_b, b, j)
        return total

    def compose(self, im1: "Poly2", im2: "Poly2") -> "Poly2":
        """Exact substitution z1 -> im1, z2 -> im2."""
        pow1: dict[int, Poly2] = {0: Poly2.constant(1)}
        pow2: dict[int, Poly2] = {0: Poly2.constant(1)}

        def pw(table, base, k):
            while len(table) <= k:
                table[len(table)] = table[len(table) - 1] * base
            return table[k]

        out = Poly2.zero()
        for (i, j), c in sorted(self.coeff.items()):
            out = out + pw(pow1, im1, i) * pw(pow2, im2, j) * c
        return out

    def derivative(self, index: int) -> "Poly2":
        out = {}
        for (i, j), c in self.coeff.items():
            if index == 1 and i > 0:
                out[(i - 1, j)] = c * i
            elif index == 2 and j > 0:
                out[(i, j - 1)] = c * j
        return Poly2(out)

    def shear_z2(self, c) -> "Poly2":
        """Substitute z2 -> z2 + c*z1 (moves points between z2-levels)."""
        c = rat(c)
        if c == 0:
            return self
        return self.compose(Poly2.variable(1), Poly2.variable(2) + Poly2.variable(1) * c)

    def translate(self, a, b) -> "Poly2":
        """Substitute z -> z + (a, b), i.e. recenter the point (a,b) at 0."""
        a, b = rat(a), rat(b)
        if a == 0 and b == 0:
            return self
        return self.compose(Poly2.variable(1) + a, Poly2.variable(2) + b)

    def restrict_z2_zero(self) -> "Poly1":
        return Poly1.from_coeff_map({i: c for (i, j), c in self.coeff.items() if j == 0})

    def eval_on_parametrization(self, x: TruncatedSeries1, y: TruncatedSeries1) -> TruncatedSeries1:
        """Substitute a univariate parametrization (x(t), y(t))."""
        n = min(x.precision, y.precision)
        one = TruncatedSeries1.constant(1, n)
        pow_x: dict[int, TruncatedSeries1] = {0: one}
        pow_y: dict[int, TruncatedSeries1] = {0: one}

        def pw(table, base, k):
            while len(table) <= k:
                table[len(table)] = table[len(table) - 1] * base
            return table[k]

        out = TruncatedSeries1.zero(n)
        for (i, j), c in sorted(self.coeff.items()):
            out = out + pw(pow_x, x, i) * pw(pow_y, y, j) * c
        return out

    # -- division and normalization ----------------------------------------

    def exact_div(self, b: "Poly2") -> "Poly2":
        """Exact quotient self / b; raises NotDivisible if it does not divide."""
        if b.is_zero():
            raise NotDivisible("division by the zero polynomial")
        if self.is_zero():
            return Poly2.zero()
        # division by the minimal graded-lex term; sound because that term
        # of a product is the product of minimal terms
        pe = min(b.coeff, key=lambda e: (e[0] + e[1], e))
        pc = b.coeff[pe]
        quot: dict = {}
        rem = dict(self.coeff)
        while rem:
            e = min(rem, key=lambda x: (x[0] + x[1], x))
            c = rem.pop(e)
            qe = (e[0] - pe[0], e[1] - pe[1])
            if qe[0] < 0 or qe[1] < 0:
                raise NotDivisible("polynomial does not divide exactly")
            quot[qe] = quot.get(qe, Fraction(0)) + c / pc
            qc = c / pc
            for be, bc in b.coeff.items():
                if be == pe:
                    continue
                te = (qe[0] + be[0], qe[1] + be[1])
                rem[te] = rem.get(te, Fraction(0)) - qc * bc
                if rem[te] == 0:
                    del rem[te]
        return Poly2(quot)

    def divides(self, other: "Poly2") -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisible:
            return False

    def normalized(self) -> "Poly2":
        """Canonical scalar multiple: integer, content 1, graded-lex
        leading coefficient positive.  Used to compare branch factors."""
        if self.is_zero():
            return self
        from math import gcd, lcm

        den = lcm(*(c.denominator for c in self.coeff.values()))
        num = gcd(*(abs(c.numerator) for c in self.coeff.values()))
        scale = Fraction(den, num)
        lead = max(self.coeff, key=lambda e: (e[0] + e[1], e))
        if self.coeff[lead] < 0:
            scale = -scale
        return self * scale

    def __repr__(self):
        if not self.coeff:
            return "0"
        parts = []
        for (i, j), c in sorted(self.coeff.items(), key=lambda t: (t[0][0] + t[0][1], t[0])):
            mono = "".join(
                f"*{v}^{e}" if e > 1 else (f"*{v}" if e == 1 else "")
                for v, e in (("z1", i), ("z2", j))
            )
            parts.append(f"{c}{mono}")
        return " + ".join(parts)


# -- computer-algebra services (sympy-backed) -------------------------------


def gcd2(a: Poly2, b: Poly2) -> Poly2:
    """Polynomial gcd over Q (primitive, sign-normalized by sympy)."""
    if a.is_zero():
        return b.normalized() if not b.is_zero() else Poly2.zero()
    if b.is_zero():
        return a.normalized()
    g = sp.gcd(a.to_sympy(), b.to_sympy())
    return Poly2.from_sympy(g).normalized()


def factor_list2(p: Poly2) -> tuple[Fraction, list[tuple[Poly2, int]]]:
    """Irreducible factorization over Q: (constant, [(factor, multiplicity)])."""
    const, factors = sp.factor_list(p.to_sympy(), Z1, Z2)
    out = []
    for f, mult in factors:
        out.append((Poly2.from_sympy(f).normalized(), int(mult)))
    return Fraction(sp.Rational(const).p, sp.Rational(const).q), out


def resultant_z1(f: Poly2, g: Poly2) -> "Poly1":
    """Resultant eliminating z1; a univariate polynomial in z2."""
    r = sp.resultant(sp.Poly(f.to_sympy(), Z1, Z2), sp.Poly(g.to_sympy(), Z1, Z2), Z1)
    rp = sp.Poly(r, Z2) if r != 0 else None
    if rp is None:
        return Poly1([])
    return Poly1([Fraction(c.p, c.q) for c in reversed(rp.all_coeffs())])


class Poly1:
    """Dense univariate polynomial over Q; coeff[k] multiplies t^k."""

    __slots__ = ("coeff",)

    def __init__(self, coeff):
        coeff = [rat(c) for c in coeff]
        while coeff and coeff[-1] == 0:
            coeff.pop()
        self.coeff = coeff

    @classmethod
    def from_coeff_map(cls, m) -> "Poly1":
        if not m:
            return cls([])
        out = [Fraction(0)] * (max(m) + 1)
        for e, c in m.items():
            out[e] = rat(c)
        return cls(out)

    def degree(self) -> int:
        return len(self.coeff) - 1

    def is_zero(self) -> bool:
        return not self.coeff

    def order(self) -> int:
        if not self.coeff:
            raise ValueError("zero polynomial has no order")
        return next(i for i, c in enumerate(self.coeff) if c != 0)

    def evaluate(self, x) -> Fraction:
        x = rat(x)
        total = Fraction(0)
        for c in reversed(self.coeff):
            total = total * x + c
        return total

    def derivative(self) -> "Poly1":
        return Poly1([c * k for k, c in enumerate(self.coeff)][1:])

    def __eq__(self, other):
        if not isinstance(other, Poly1):
            return NotImplemented
        return self.coeff == other.coeff

    def __add__(self, other) -> "Poly1":
        n = max(len(self.coeff), len(other.coeff))
        return Poly1(
            [
                (self.coeff[i] if i < len(self.coeff) else 0)
                + (other.coeff[i] if i < len(other.coeff) else 0)
                for i in range(n)
            ]
        )

    def __neg__(self) -> "Poly1":
        return Poly1([-c for c in self.coeff])

    def __sub__(self, other) -> "Poly1":
        return self + (-other)

    def __mul__(self, other) -> "Poly1":
        if isinstance(other, (int, Fraction)):
            return Poly1([c * rat(other) for c in self.coeff])
        out = [Fraction(0)] * (len(self.coeff) + len(other.coeff) - 1) if self.coeff and other.coeff else []
        for i, a in enumerate(self.coeff):
            if a == 0:
                continue
            for j, b in enumerate(other.coeff):
                out[i + j] += a * b
        return Poly1(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly1":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly1([Fraction(1)])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def divmod(self, other: "Poly1") -> tuple["Poly1", "Poly1"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeff) - len(other.coeff) + 1, 0)
        r = list(self.coeff)
        d = other.degree()
        lc = other.coeff[-1]
        while len(r) - 1 >= d and any(c != 0 for c in r):
            k = len(r) - 1 - d
            f = r[-1] / lc
            if f != 0:
                q[k] = f
                for i, c in enumerate(other.coeff):
                    r[k + i] -= f * c
            r.pop()
        return Poly1(q), Poly1(r)

    def monic(self) -> "Poly1":
        if self.is_zero():
            return self
        lc = self.coeff[-1]
        return Poly1([c / lc for c in self.coeff])


def gcd1(a: Poly1, b: Poly1) -> Poly1:
    """Monic gcd over Q via the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def squarefree_decomposition(p: Poly1) -> list[tuple[Poly1, int]]:
    """Yun's algorithm: p = const * prod a_i^i with the a_i squarefree
    and pairwise coprime.  Returns the nontrivial (a_i, i)."""
    if p.is_zero() or p.degree() <= 0:
        return []
    dp = p.derivative()
    a = gcd1(p, dp)
    b = p.divmod(a)[0]
    c = dp.divmod(a)[0]
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree() > 0:
        a = gcd1(b, d)
        if a.degree() > 0:
            out.append((a, i))
        b = b.divmod(a)[0]
        c = d.divmod(a)[0]
        d = c - b.derivative()
        i += 1
    return out


def root_multiplicity(p: Poly1, r) -> int:
    """Multiplicity of the rational root r in p, via the squarefree
    decomposition (0 when r is not a root)."""
    r = rat(r)
    if p.is_zero():
        raise ValueError("every value is a root of the zero polynomial")
    total = 0
    for part, mult in squarefree_decomposition(p):
        if part.evaluate(r) == 0:
            total += mult
    return total
