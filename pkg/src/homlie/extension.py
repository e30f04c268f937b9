"""One-dimensional central extensions of Hom-Lie algebras at window scale.

The center is span{c} with identity action; a 2-cocycle is an
alternating Scalar-valued form g on the generators satisfying the
twisted cyclic condition

    cyc_{x,y,z}  g(alpha(x), [y, z]) = 0.

The extended bracket is [x, y]^ = [x, y] + g(x, y) c with c central and
the twist extended by c -> c.  The deformed Virasoro algebra arises this
way from the (p,q)-Witt algebra and the cocycle supported on n + m = 0
with value

    g(n, -n) = (q/p)^(-n) / (6 (1 + (q/p)^n)) * [n-1]/p^(n-1)
               * [n]/p^n * [n+1]/p^(n+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .algebra import Combo, GradedAlgebra, Key
from .errors import CocycleConditionFailed, PoleAtPoint, PoleAtSpecialization
from .report import Report
from .scalar import ONE, P, Q, Scalar, pq_number

CENTRAL = "c"


class Cocycle:
    """Alternating Scalar-valued 2-form given by a closure on indices."""

    def __init__(
        self,
        value: Callable[[int, int], Scalar],
        zero_sum_supported: bool = False,
        specialization_guard: Callable[[int, int, Fraction, Fraction], None] | None = None,
    ):
        self._value = value
        self.zero_sum_supported = zero_sum_supported
        self._guard = specialization_guard

    def value(self, i: int, j: int) -> Scalar:
        return self._value(i, j)

    def bilinear(self, x: Combo, y: Combo) -> Scalar:
        total = Scalar.zero()
        for i, a in x.terms.items():
            if i == CENTRAL:
                continue
            for j, b in y.terms.items():
                if j == CENTRAL:
                    continue
                total = total + a * b * self._value(i, j)
        return total

    @staticmethod
    def zero() -> "Cocycle":
        return Cocycle(lambda i, j: Scalar.zero(), zero_sum_supported=True)

    def perturbed(self, at: tuple[int, int], delta: Scalar) -> "Cocycle":
        def value(i: int, j: int) -> Scalar:
            base = self._value(i, j)
            if (i, j) == at:
                return base + delta
            return base

        return Cocycle(value, zero_sum_supported=self.zero_sum_supported,
                       specialization_guard=self._guard)

    def specialize(self, n: int, m: int, p0, q0) -> Fraction:
        p0, q0 = Fraction(p0), Fraction(q0)
        if self._guard is not None:
            self._guard(n, m, p0, q0)
        try:
            return self._value(n, m).specialize(p0, q0)
        except PoleAtPoint as exc:
            raise PoleAtSpecialization(str(exc)) from exc


def virasoro_cocycle() -> Cocycle:
    """The central term of the deformed Virasoro bracket.

    Supported on n + m = 0; the value at (n, -n) vanishes for |n| <= 1
    through the [n-1], [n], [n+1] factors.  The denominator 1 + (q/p)^n
    never vanishes for generic parameters; specializing at a point where
    q0/p0 is a root of unity raises PoleAtSpecialization.
    """
    r = Q / P

    def value(n: int, m: int) -> Scalar:
        if n + m != 0:
            return Scalar.zero()
        head = r ** (-n) / (Scalar.from_int(6) * (ONE + r ** n))
        tail = (
            (pq_number(n - 1) / P ** (n - 1))
            * (pq_number(n) / P ** n)
            * (pq_number(n + 1) / P ** (n + 1))
        )
        return head * tail

    def guard(n: int, m: int, p0: Fraction, q0: Fraction) -> None:
        # the construction assumes q/p is not a root of unity; at a
        # rational point this reduces to 1 + (q0/p0)^n != 0
        if p0 == 0 or q0 == 0:
            raise PoleAtSpecialization("parameters must be nonzero")
        if 1 + (q0 / p0) ** n == 0:
            raise PoleAtSpecialization(
                f"1 + (q/p)^{n} vanishes at ({p0}, {q0}); q/p is a root of unity"
            )

    return Cocycle(value, zero_sum_supported=True, specialization_guard=guard)


def verify_cocycle_condition(
    g: Cocycle,
    alg: GradedAlgebra,
    triples: Iterable[tuple[int, int, int]] | None = None,
    window: int = 6,
) -> Report:
    """Exact cyclic check of the 2-cocycle condition on the window.

    For cocycles supported on i + j = 0 only triples with n + m + k = 0
    contribute, and the default sweep restricts to them.
    """
    report = Report(suite="cocycle-condition", window=window)
    if triples is None:
        rng = range(-window, window + 1)
        if g.zero_sum_supported:
            triples = [
                (n, m, -n - m) for n in rng for m in rng if abs(n + m) <= window
            ]
        else:
            triples = [(n, m, k) for n in rng for m in rng for k in rng]

    for (n, m, k) in triples:
        residue = Scalar.zero()
        for x, y, z in ((n, m, k), (m, k, n), (k, n, m)):
            residue = residue + g.bilinear(
                alg.twist_gen(x), alg.bracket_gen(y, z)
            )
        ok = residue.is_zero()
        report.check(
            f"triple-({n},{m},{k})",
            "cocycle-condition",
            ok,
            witness=None if ok else f"residue = {residue}",
        )
    return report


def verify_alternating(g: Cocycle, window: int = 6) -> Report:
    report = Report(suite="cocycle-alternating", window=window)
    rng = range(-window, window + 1)
    for n in rng:
        ok = g.value(n, n).is_zero()
        report.check(f"diagonal-{n}", "alternating", ok,
                     witness=None if ok else f"g({n},{n}) = {g.value(n, n)}")
        for m in rng:
            ok = g.value(n, m) == -g.value(m, n)
            report.check(
                f"skew-({n},{m})", "alternating", ok,
                witness=None if ok else f"g({n},{m}) != -g({m},{n})",
            )
    return report


@dataclass
class CentralExtension:
    """Basis {d_n} + {c}; bracket extended by the cocycle, c central."""

    base: GradedAlgebra
    cocycle: Cocycle
    algebra: GradedAlgebra

    def bracket_gen(self, i: Key, j: Key) -> Combo:
        return self.algebra.bracket_gen(i, j)

    def twist_gen(self, i: Key) -> Combo:
        return self.algebra.twist_gen(i)


def make_central_extension(
    base: GradedAlgebra, g: Cocycle, window: int = 6
) -> CentralExtension:
    """Adjoin the central element and the cocycle term; the cocycle
    condition is verified first and the Hom-Jacobi identity of the
    extension is re-checked on the window."""
    pre = verify_cocycle_condition(g, base, window=window)
    if not pre.ok:
        first = pre.first_failure()
        raise CocycleConditionFailed(f"{first.id}: {first.witness}")

    def bracket_gen(i: Key, j: Key) -> Combo:
        if i == CENTRAL or j == CENTRAL:
            return Combo.zero()
        out = base.bracket_gen(i, j)
        central = g.value(i, j)
        if not central.is_zero():
            out = out + Combo.basis(CENTRAL, central)
        return out

    def twist_gen(i: Key) -> Combo:
        if i == CENTRAL:
            return Combo.basis(CENTRAL)
        return base.twist_gen(i)

    ext_alg = GradedAlgebra(
        f"{base.name}^", bracket_gen, twist_gen, provenance={"base": base.name}
    )
    ext = CentralExtension(base=base, cocycle=g, algebra=ext_alg)

    from .bracket import verify_hom_jacobi

    small = min(window, 3)
    keys = list(range(-small, small + 1)) + [CENTRAL]
    rep = verify_hom_jacobi(ext_alg, [(i, j, k) for i in keys for j in keys for k in keys])
    if not rep.ok:
        raise CocycleConditionFailed(
            f"extension fails Hom-Jacobi: {rep.first_failure().witness}"
        )
    return ext


def verify_centrality(ext: CentralExtension, window: int = 6) -> Report:
    report = Report(suite="centrality", window=window)
    for n in list(range(-window, window + 1)) + [CENTRAL]:
        ok = (
            ext.bracket_gen(CENTRAL, n).is_zero()
            and ext.bracket_gen(n, CENTRAL).is_zero()
        )
        report.check(f"central-{n}", "centrality", ok,
                     witness=None if ok else f"[c, {n}] != 0")
    ok = ext.twist_gen(CENTRAL) == Combo.basis(CENTRAL)
    report.check("twist-fixes-c", "centrality", ok)
    return report


def virasoro_pq(window: int = 6) -> CentralExtension:
    """The deformed Virasoro algebra: central extension of the
    (p,q)-Witt algebra by the cocycle above."""
    from .families import witt_pq

    return make_central_extension(witt_pq(), virasoro_cocycle(), window=window)


def verify_f_compatibility(
    ext: CentralExtension,
    f: Callable[[Combo, Scalar], Scalar],
    window: int = 4,
    samples: tuple[Scalar, ...] = (),
) -> Report:
    """Check the compatibility equations a caller-supplied factor map f
    must satisfy against the extension's cocycle:

        f(0, a) = a            (the center carries the identity twist)
        g(alpha(x), alpha(y)) = f([x, y], g(x, y))

    The outcome is computed, not asserted; no particular f is built in.
    """
    report = Report(suite="f-compatibility", window=window)
    g = ext.cocycle
    base = ext.base
    sample_values = samples or (ONE, P, Q, P + Q)
    for idx, a in enumerate(sample_values):
        got = f(Combo.zero(), a)
        ok = got == a
        report.check(f"identity-on-center-{idx}", "center-twist", ok,
                     witness=None if ok else f"f(0, {a}) = {got}")
    rng = range(-window, window + 1)
    for n in rng:
        for m in rng:
            lhs = g.bilinear(base.twist_gen(n), base.twist_gen(m))
            rhs = f(base.bracket_gen(n, m), g.value(n, m))
            ok = lhs == rhs
            report.check(
                f"pair-({n},{m})", "factor-compatibility", ok,
                witness=None if ok else f"g(a(x),a(y)) = {lhs} != f([x,y], g(x,y)) = {rhs}",
            )
    return report
