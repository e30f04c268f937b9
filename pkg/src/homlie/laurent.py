"""The commutative algebra A = Q(p,q)[t, t^-1].

Provides exact ring arithmetic, exact division, a canonical gcd up to
unit, and the monomial endomorphisms t -> c*t^k that cover every algebra
endomorphism of the Laurent ring (t must map to a unit, and the units are
exactly the nonzero monomials).

The gcd is computed over the integral layer Q[p^+-1, q^+-1][t^+-1]: the
scalar content of the inputs (a gcd of bivariate parameter polynomials)
is kept, not discarded, so that e.g. the common factor p - q of the set
{(p^n - q^n) t^n} survives.  Euclid over the fraction field Q(p,q) alone
would normalize that content away.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DivisionByZero, NotDivisible, NotInvertible, NotAUnit
from .scalar import ParamPoly, Scalar, _normalize_param, param_gcd, param_lcm


class LaurentPoly:
    """Sparse Laurent polynomial in t with Scalar coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Scalar] | None = None):
        self.coeffs: dict[int, Scalar] = {}
        if coeffs:
            for k, c in coeffs.items():
                if not c.is_zero():
                    self.coeffs[k] = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: Scalar.one()})

    @staticmethod
    def t(power: int = 1) -> "LaurentPoly":
        return LaurentPoly({power: Scalar.one()})

    @staticmethod
    def monomial(c: Scalar, k: int) -> "LaurentPoly":
        return LaurentPoly({k: c})

    @staticmethod
    def from_scalar(c: Scalar) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def from_int(n: int) -> "LaurentPoly":
        return LaurentPoly({0: Scalar.from_int(n)})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """Units of A are exactly the single-term polynomials c*t^k."""
        return len(self.coeffs) == 1

    def is_scalar(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {0}

    def scalar_value(self) -> Scalar:
        if self.is_zero():
            return Scalar.zero()
        if not self.is_scalar():
            raise ValueError("not a scalar element")
        return self.coeffs[0]

    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("degree of zero")
        return max(self.coeffs)

    def valuation(self) -> int:
        if self.is_zero():
            raise ValueError("valuation of zero")
        return min(self.coeffs)

    def coeff(self, k: int) -> Scalar:
        return self.coeffs.get(k, Scalar.zero())

    def terms(self):
        return sorted(self.coeffs.items())

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, Scalar):
            return LaurentPoly.from_scalar(x)
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.from_scalar(Scalar.from_fraction(x))
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        r = LaurentPoly()
        r.coeffs = out
        return r

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        r = LaurentPoly()
        r.coeffs = {k: -c for k, c in self.coeffs.items()}
        return r

    def __sub__(self, other) -> "LaurentPoly":
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Scalar] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                v = c1 * c2
                s = out.get(k)
                s = v if s is None else s + v
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        r = LaurentPoly()
        r.coeffs = out
        return r

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "LaurentPoly":
        if c.is_zero():
            return LaurentPoly.zero()
        r = LaurentPoly()
        r.coeffs = {k: co * c for k, co in self.coeffs.items()}
        return r

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by t^d."""
        r = LaurentPoly()
        r.coeffs = {k + d: c for k, c in self.coeffs.items()}
        return r

    def __pow__(self, n: int) -> "LaurentPoly":
        if len(self.coeffs) == 1:
            ((k, c),) = self.coeffs.items()
            return LaurentPoly.monomial(c ** n, k * n)
        if n < 0:
            raise NotAUnit("negative power of a non-unit")
        r = LaurentPoly.one()
        for _ in range(n):
            r = r * self
        return r

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit of the Laurent ring")
        ((k, c),) = self.coeffs.items()
        return LaurentPoly.monomial(c.inverse(), -k)

    def __eq__(self, other) -> bool:
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[k] == other.coeffs[k] for k in self.coeffs)

    __hash__ = None

    def __str__(self) -> str:
        return render_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """The cofactor c with b*c = a, or NotDivisible.

    Shifts both arguments to ordinary polynomials and performs long
    division over the coefficient field Q(p,q); the t-shift difference is
    restored afterwards (units t^k divide everything).
    """
    if b.is_zero():
        raise DivisionByZero("exact division by zero")
    if a.is_zero():
        return LaurentPoly.zero()
    offset = a.valuation() - b.valuation()
    ra = a.shift(-a.valuation())
    rb = b.shift(-b.valuation())
    deg_b = rb.degree()
    lead_b = rb.coeff(deg_b)
    out: dict[int, Scalar] = {}
    rem = ra
    while not rem.is_zero() and rem.degree() >= deg_b:
        k = rem.degree() - deg_b
        c = rem.coeff(rem.degree()) / lead_b
        out[k] = c
        rem = rem - rb.shift(k).scale(c)
    if not rem.is_zero():
        raise NotDivisible(f"({a}) is not divisible by ({b})")
    q = LaurentPoly()
    q.coeffs = {k: c for k, c in out.items() if not c.is_zero()}
    return q.shift(offset)


def divides(b: LaurentPoly, a: LaurentPoly) -> bool:
    try:
        exact_div(a, b)
        return True
    except NotDivisible:
        return False


# -- monomial endomorphisms --------------------------------------------------


class Endo:
    """The algebra endomorphism of A determined by t -> c * t^k."""

    __slots__ = ("c", "k", "_pows")

    def __init__(self, c: Scalar, k: int):
        if c.is_zero():
            raise ValueError("endomorphism must send t to a unit")
        self.c = c
        self.k = k
        self._pows: dict[int, Scalar] = {0: Scalar.one(), 1: c}

    def coefficient_power(self, n: int) -> Scalar:
        got = self._pows.get(n)
        if got is None:
            got = self.c ** n
            self._pows[n] = got
        return got

    @staticmethod
    def identity() -> "Endo":
        return Endo(Scalar.one(), 1)

    @staticmethod
    def dilation(c: Scalar) -> "Endo":
        return Endo(c, 1)

    @staticmethod
    def inversion() -> "Endo":
        return Endo(Scalar.one(), -1)

    def is_identity(self) -> bool:
        return self.k == 1 and self.c.is_one()

    def __call__(self, f: LaurentPoly) -> LaurentPoly:
        return apply_endo(self, f)

    def __eq__(self, other) -> bool:
        return isinstance(other, Endo) and self.k == other.k and self.c == other.c

    __hash__ = None

    def __str__(self) -> str:
        t_part = "t" if self.k == 1 else f"t^{self.k}"
        if self.c.is_one():
            return f"t -> {t_part}"
        return f"t -> ({self.c})*{t_part}"

    def __repr__(self) -> str:
        return f"Endo({self})"


def apply_endo(e: Endo, f: LaurentPoly) -> LaurentPoly:
    """Substitute t -> c*t^k, i.e. t^n -> c^n t^(k n)."""
    out: dict[int, Scalar] = {}
    for n, a in f.coeffs.items():
        k = e.k * n
        v = a * e.coefficient_power(n)
        s = out.get(k)
        s = v if s is None else s + v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    r = LaurentPoly()
    r.coeffs = out
    return r


def compose_endo(e1: Endo, e2: Endo) -> Endo:
    """(e1 . e2)(t) = e1(c2 t^k2) = c2 * c1^k2 * t^(k1 k2)."""
    return Endo(e2.c * (e1.c ** e2.k), e1.k * e2.k)


def invert_endo(e: Endo) -> Endo:
    if e.k not in (1, -1):
        raise NotInvertible(f"t -> c*t^{e.k} has no inverse")
    return Endo(e.c ** (-e.k), e.k)


# -- gcd up to unit -----------------------------------------------------------
#
# The parameter-polynomial gcd (scalar content layer) lives in .scalar;
# here the t-direction is handled by Euclid over the field Q(p,q).


def _t_euclid(a: dict[int, ParamPoly], b: dict[int, ParamPoly]) -> dict[int, ParamPoly]:
    """Euclid in t over Q(p,q); inputs/outputs are integral coefficient maps
    with nonnegative t-exponents."""

    def to_scalar(poly: dict[int, ParamPoly]) -> dict[int, Scalar]:
        return {k: Scalar(c) for k, c in poly.items()}

    fa, fb = to_scalar(a), to_scalar(b)

    def degree(x):
        return max(x) if x else -1

    def mod(x, y):
        dy = degree(y)
        ly = y[dy]
        rem = dict(x)
        while rem and degree(rem) >= dy:
            dr = degree(rem)
            c = rem[dr] / ly
            for i, co in y.items():
                k = i + dr - dy
                v = rem.get(k, Scalar.zero()) - c * co
                if v.is_zero():
                    rem.pop(k, None)
                else:
                    rem[k] = v
            rem.pop(dr, None)
        return rem

    while fb:
        fa, fb = fb, mod(fa, fb)
    # back to integral coefficients: clear denominators, strip content
    common = ParamPoly.one()
    for c in fa.values():
        common = common * c.den
    cleared = {k: c.num * common.exact_div(c.den) for k, c in fa.items()}
    cont = ParamPoly.zero()
    for c in cleared.values():
        cont = c if cont.is_zero() else param_gcd(cont, c)
    return {k: c.exact_div(cont) for k, c in cleared.items()}


def gcd_up_to_unit(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Canonical gcd of a nonempty family, determined up to Q* t^Z p^Z q^Z.

    The result splits as (scalar content) * (primitive t-part): the
    content is the bivariate gcd of all coefficient polynomials, the
    t-part comes from Euclid over Q(p,q) followed by content stripping.
    Normalization: lowest t-exponent 0, coefficients with joint content 1,
    and the leading t-coefficient's leading graded-lex coefficient +1.
    """
    items = [f for f in polys if not f.is_zero()]
    if not items:
        raise ValueError("gcd of an empty or all-zero family")

    # one common multiple for every non-monomial coefficient denominator
    dens = [c.den for f in items for c in f.coeffs.values() if len(c.den.terms) > 1]
    common = ParamPoly.one()
    for d in dens:
        common = param_lcm(common, d)

    integral: list[dict[int, ParamPoly]] = []
    for f in items:
        shifted = f.shift(-f.valuation())
        entry = {k: c.num * common.exact_div(c.den) for k, c in shifted.coeffs.items()}
        integral.append(entry)

    content = ParamPoly.zero()
    for entry in integral:
        for c in entry.values():
            content = c if content.is_zero() else param_gcd(content, c)
    content = _normalize_param(content)

    prim = integral[0]
    cont0 = ParamPoly.zero()
    for c in prim.values():
        cont0 = c if cont0.is_zero() else param_gcd(cont0, c)
    prim = {k: c.exact_div(cont0) for k, c in prim.items()}
    for entry in integral[1:]:
        if len(prim) == 1 and 0 in prim:
            break
        cont = ParamPoly.zero()
        for c in entry.values():
            cont = c if cont.is_zero() else param_gcd(cont, c)
        stripped = {k: c.exact_div(cont) for k, c in entry.items()}
        prim = _t_euclid(prim, stripped)

    # sign/scale normalization of the primitive part
    lead = prim[max(prim)]
    lead_sign = 1 if lead.leading()[1] > 0 else -1
    result = LaurentPoly()
    for k, c in prim.items():
        coeff = Scalar(content * c.scale(lead_sign))
        if not coeff.is_zero():
            result.coeffs[k] = coeff
    return result


def render_laurent(f: LaurentPoly) -> str:
    from .scalar import render_scalar, _atomic

    if f.is_zero():
        return "0"
    parts = []
    for k in sorted(f.coeffs, reverse=True):
        c = f.coeffs[k]
        t_part = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        neg = False
        body = render_scalar(c)
        if body.startswith("-") and "+" not in body and " - " not in body:
            neg = True
            body = body[1:]
        simple = c.den == ParamPoly.one() and (_atomic(c.num) or _atomic((-c).num))
        if t_part:
            if body == "1":
                body = t_part
            else:
                if not simple or "/" in body:
                    body = f"({body})"
                body = f"{body}*{t_part}"
        elif " " in body and parts:
            body = f"({body})"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
