from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from jordeform.fb import (
    GRADE,
    automorphism_transport_check,
    build_fb,
    discrete_derivative_check,
    exp_shift,
    fb_rep_check,
    fock_agreement,
    grading_violations,
)
from jordeform.ncalg import Element, build_presentation, expm1_over_z

alpha, z = sympy.symbols("alpha z")
ORDER = 4


def truncate(expr, order):
    expr = sympy.expand(expr)
    return sum(expr.coeff(z, k) * z**k for k in range(order + 1))


def sympy_primary(g, f, order):
    """Apply the primary realization to ``f(alpha)`` with sympy, series in z."""
    e = lambda c: sympy.exp(c * z * alpha)
    d = lambda h: sympy.diff(h, alpha)
    expr = {
        "A+": alpha * f,
        "A-": e(1) * d(f),
        "N": (e(1) - 1) / z * d(f),
        "M": f,
        "B+": ((1 - e(-1)) / z) ** 2 * f,
        "B-": e(1) * d(d(f)),
    }[g]
    return truncate(sympy.series(expr, z, 0, order + 1).removeO(), order)


def sympy_dual(g, f, order):
    shift = lambda h, c=1: h.subs(alpha, alpha + c * z)       # e^{c z d}
    d = lambda h: sympy.diff(h, alpha)
    diff_q = lambda h: (h - shift(h, -1)) / z                  # (1 - e^{-z d})/z
    expr = {
        "A+": alpha * shift(f),
        "A-": d(f),
        "N": alpha * (shift(f) - f) / z,
        "M": f,
        "B+": (alpha**2 + z * alpha) * shift(f),
        "B-": diff_q(diff_q(f)),
    }[g]
    return truncate(sympy.simplify(sympy.expand(expr)), order)


def from_op(mat, n):
    col = [(i, k, c) for (i, j, k), c in mat.data.items() if j == n]
    return sum(sympy.Rational(c.numerator, c.denominator) * alpha**i * z**k for i, k, c in col)


@pytest.mark.parametrize("g", GRADE)
def test_primary_against_sympy(g):
    deg = 6
    mat = build_fb(g, "primary", deg + ORDER + 2, ORDER)
    for n in range(deg + 1):
        assert sympy.expand(from_op(mat, n) - sympy_primary(g, alpha**n, ORDER)) == 0


@pytest.mark.parametrize("g", GRADE)
def test_dual_against_sympy(g):
    deg = 6
    mat = build_fb(g, "dual", deg + 2, ORDER)
    for n in range(deg + 1):
        assert sympy.expand(from_op(mat, n) - sympy_dual(g, alpha**n, ORDER)) == 0


def test_examples():
    ap = build_fb("A+", "primary", 5, ORDER)
    assert all(ap.entry(n + 1, n) == 1 for n in range(5))
    am = build_fb("A-", "dual", 5, ORDER)
    assert all(am.entry(n - 1, n) == n for n in range(1, 6))
    n1 = build_fb("N", "primary", 3, 1)
    # ((e^{z alpha}-1)/z) d(alpha) = alpha + (z/2) alpha^2 at order 1
    z1 = build_presentation("h6_jordanian", 1).z()
    assert n1.entry(1, 1) == 1 and n1.entry(2, 1) == z1 * Fraction(1, 2)
    assert n1.entry(0, 1) == 0


def test_discrete_derivative():
    rep = discrete_derivative_check(12)
    assert len(rep) == 13 and rep.passed
    op = exp_shift(1, 3, minus_one_over_z=True)
    assert op({(0, 0): Fraction(1)}) == {}
    assert op({(1, 0): Fraction(1)}) == {(0, 0): 1}
    assert op({(2, 0): Fraction(1)}) == {(1, 0): 2, (0, 1): 1}


@pytest.mark.parametrize("variant", ["primary", "dual"])
def test_fb_presentations(variant):
    rep = fb_rep_check(variant, 12, ORDER)
    assert len(rep) == 15 and rep.passed, [r.identity for r in rep.failures()]


def test_dual_a_plus_b_plus():
    p = build_presentation("h6_jordanian_dual", ORDER)
    Ap, Bp = p.gens("A+", "B+")
    assert Ap * Bp - Bp * Ap == p.z() * Ap * Ap
    A, B = build_fb("A+", "dual", 14, ORDER), build_fb("B+", "dual", 14, ORDER)
    AA = A @ A
    assert (A @ B - B @ A - AA.scale(1, 1)).block(10).is_zero()


@pytest.mark.parametrize("variant", ["primary", "dual"])
def test_grading(variant):
    for g in GRADE:
        assert grading_violations(build_fb(g, variant, 10, ORDER), g, variant) == []


def test_primary_equals_fock():
    assert fock_agreement(12, ORDER)
    assert fock_agreement(8, 0)


def test_automorphism_transport():
    assert automorphism_transport_check(ORDER).passed
    d = build_presentation("h6_jordanian_dual", ORDER)
    N, Am = d.gens("N", "A-")
    assert N * Am - Am * N == -expm1_over_z("A-", 1, d).scale(1)
    assert Element(d, d.bracket_data(d.index("A+"), d.index("B+"))) == d.z() * d.gen("A+") ** 2


@given(st.sampled_from(list(GRADE)), st.sampled_from(["primary", "dual"]), st.integers(0, 3))
def test_classical_limit_is_undeformed(g, variant, n):
    op = build_fb(g, variant, 8, 0)
    col = {i: c for (i, j, k), c in op.data.items() if j == n}
    undeformed = {"A+": {n + 1: 1}, "A-": {n - 1: n} if n else {}, "N": {n: n} if n else {},
                  "M": {n: 1}, "B+": {n + 2: 1}, "B-": {n - 2: n * (n - 1)} if n >= 2 else {}}[g]
    assert col == undeformed
