"""Fock-Bargmann realizations on polynomials in ``alpha``.

Operators are assembled from four primitives (multiply by ``alpha``,
``d/dalpha``, ``exp(c z alpha)`` and the shift ``exp(c z d/dalpha)``) applied
to exact polynomials, then recorded as matrices on ``{alpha^n : n <= deg}``.
``z`` stays formal throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable

from .fock import H6_RAISE, MatrixRep, SeriesMatrix, commutator_residuals
from .ncalg import (
    Element,
    _acc,
    automorphism_table,
    automorphism_data,
    build_presentation,
)
from .report import VerificationReport

Poly = dict[tuple[int, int], Fraction]   # (alpha power, z power) -> coeff
Op = Callable[[Poly], Poly]

# grading: alpha -> +1, d/dalpha -> -1; z -> -1 (primary) or +1 (dual)
GRADE = {"B+": 2, "A+": 1, "N": 0, "M": 0, "A-": -1, "B-": -2}


class PolyOperator(SeriesMatrix):
    """Matrix on the monomials ``alpha^0 .. alpha^deg`` (``dim = deg + 1``)."""

    @property
    def degree_bound(self) -> int:
        return self.dim - 1


# -- primitives -----------------------------------------------------------------------


def _trunc(order: int) -> Callable[[Poly], Poly]:
    return lambda f: {key: c for key, c in f.items() if key[1] <= order and c}


def mul_alpha(f: Poly) -> Poly:
    return {(n + 1, k): c for (n, k), c in f.items()}


def d_alpha(f: Poly) -> Poly:
    return {(n - 1, k): c * n for (n, k), c in f.items() if n}


def exp_alpha(c, order: int, minus_one_over_z: bool = False) -> Op:
    """``exp(c z alpha)`` or ``(exp(c z alpha) - 1)/z`` as a multiplication operator."""
    c = Fraction(c)
    shift = 1 if minus_one_over_z else 0

    def op(f: Poly) -> Poly:
        out: Poly = {}
        for (n, k), v in f.items():
            for j in range(shift, order + 1 + shift):
                kk = k + j - shift
                if kk <= order:
                    _acc(out, (n + j, kk), v * c**j / factorial(j))
        return out

    return op


def exp_shift(c, order: int, minus_one_over_z: bool = False) -> Op:
    """``exp(c z d/dalpha)`` (so ``f(alpha) -> f(alpha + c z)``), or that minus 1 over ``z``."""
    c = Fraction(c)
    shift = 1 if minus_one_over_z else 0

    def op(f: Poly) -> Poly:
        out: Poly = {}
        for (n, k), v in f.items():
            for j in range(shift, n + 1):
                kk = k + j - shift
                if kk <= order:
                    _acc(out, (n - j, kk), v * c**j * comb(n, j))
        return out

    return op


def compose(*ops: Op) -> Op:
    """``compose(f, g)(x) == f(g(x))``."""
    def op(x: Poly) -> Poly:
        for o in reversed(ops):
            x = o(x)
        return x
    return op


def add(*ops: Op) -> Op:
    def op(x: Poly) -> Poly:
        out: Poly = {}
        for o in ops:
            for key, c in o(x).items():
                _acc(out, key, c)
        return out
    return op


def times_z(order: int) -> Op:
    return lambda f: {(n, k + 1): c for (n, k), c in f.items() if k + 1 <= order}


def negate(op: Op) -> Op:
    return lambda f: {key: -c for key, c in op(f).items()}


def identity(f: Poly) -> Poly:
    return dict(f)


# -- realizations ------------------------------------------------------------------------


def fb_operator_map(variant: str, order: int) -> dict[str, Op]:
    if variant == "primary":
        f = negate(exp_alpha(-1, order, minus_one_over_z=True))   # (1 - e^{-z alpha})/z
        return {
            "N": compose(exp_alpha(1, order, True), d_alpha),
            "A+": mul_alpha,
            "A-": compose(exp_alpha(1, order), d_alpha),
            "M": identity,
            "B+": compose(f, f),
            "B-": compose(exp_alpha(1, order), d_alpha, d_alpha),
        }
    if variant == "dual":
        g = negate(exp_shift(-1, order, minus_one_over_z=True))   # (1 - e^{-z d})/z
        shift = exp_shift(1, order)
        return {
            "N": compose(mul_alpha, exp_shift(1, order, True)),
            "A+": compose(mul_alpha, shift),
            "A-": d_alpha,
            "M": identity,
            "B+": compose(add(compose(mul_alpha, mul_alpha), compose(times_z(order), mul_alpha)), shift),
            "B-": compose(g, g),
        }
    raise ValueError(f"unknown variant {variant!r}")


def build_fb(g: str, variant: str, degree: int, order: int = 4) -> PolyOperator:
    op = compose(_trunc(order), fb_operator_map(variant, order)[g])
    return PolyOperator.from_columns(degree + 1, order, lambda n: op({(n, 0): Fraction(1)}))


def discrete_derivative_check(degree: int) -> VerificationReport:
    """``((e^{z d} - 1)/z) alpha^n == ((alpha + z)^n - alpha^n)/z`` for ``n <= degree``.

    ``z`` is kept to full order so this is an identity of polynomials in
    ``alpha`` and ``z``.
    """
    order = max(degree, 1)
    op = exp_shift(1, order, minus_one_over_z=True)
    rep = VerificationReport("discrete-derivative")
    for n in range(degree + 1):
        def residual(n=n):
            lhs = op({(n, 0): Fraction(1)})
            # binomial expansion of (alpha+z)^n - alpha^n, then divide by z
            rhs = {(n - j, j - 1): Fraction(comb(n, j)) for j in range(1, n + 1)}
            out = dict(lhs)
            for key, c in rhs.items():
                _acc(out, key, -c)
            return out

        rep.check(f"discrete-derivative[alpha^{n}]",
                  "(e^{z d}-1)/z f(alpha) = (f(alpha+z)-f(alpha))/z", residual)
    return rep


def fb_rep(variant: str, degree: int, order: int) -> MatrixRep:
    name = "h6_jordanian" if variant == "primary" else "h6_jordanian_dual"
    p = build_presentation(name, order)
    return MatrixRep(p, {s: build_fb(s, variant, degree, order) for s in p.symbols})


def fb_rep_check(variant: str, degree: int, order: int = 4) -> VerificationReport:
    rep = fb_rep(variant, degree, order)
    # dual operators never raise the degree through z
    return commutator_residuals(rep, H6_RAISE, z_growth=(variant == "primary"),
                                name=f"fb-{variant}")


def grading_violations(op: PolyOperator, g: str, variant: str) -> list[tuple[int, int, int]]:
    """Entries breaking homogeneity ``i - j -/+ k == grade(g)``."""
    zsign = -1 if variant == "primary" else 1
    return [(i, j, k) for (i, j, k) in op.data if i - j + zsign * k != GRADE[g]]


def automorphism_transport_check(order: int = 4) -> VerificationReport:
    """Transport of the h6 table through the automorphism equals the dual table."""
    rep = VerificationReport("automorphism")
    src = build_presentation("h6_jordanian", order)
    dst = build_presentation("h6_jordanian_dual", order)
    image = automorphism_table(src, dst)
    for (i, j), data in sorted(dst.table.items()):
        x, y = dst.symbols[i], dst.symbols[j]
        rep.check(f"transport[{x},{y}]", "[phi X, phi Y] = phi([X,Y]) with z -> -z",
                  lambda i=i, j=j, data=data: Element(dst, image[(i, j)]) - Element(dst, data))
    back = automorphism_table(dst, src)
    for (i, j), data in sorted(src.table.items()):
        x, y = src.symbols[i], src.symbols[j]
        rep.check(f"involution[{x},{y}]", "phi o phi = id",
                  lambda i=i, j=j, data=data:
                  Element(src, automorphism_data(automorphism_data(data))) - Element(src, data))
    for (i, j), data in sorted(src.table.items()):
        x, y = src.symbols[i], src.symbols[j]
        rep.check(f"back-transport[{x},{y}]", "phi maps the dual table back to the h6 table",
                  lambda i=i, j=j, data=data: Element(src, back[(i, j)]) - Element(src, data))
    return rep


def fock_agreement(degree: int, order: int) -> bool:
    """The primary realization is the Fock one with alpha = a+, d/dalpha = a-."""
    from .fock import fock_matrix

    for s in GRADE:
        a = build_fb(s, "primary", degree, order)
        b = fock_matrix(s, degree + 1, "unnormalized", order)
        if a.data != b.data:
            return False
    return True
