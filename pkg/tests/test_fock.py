from fractions import Fraction
from math import factorial

import pytest
import sympy

from jordeform.fock import (
    H6_RAISE,
    BosonWord,
    FockMatrix,
    boson_rep_check,
    commutator_residuals,
    compare_with_printed_matrices,
    fock_matrix,
    fock_rep,
    pair_guard,
    realize_boson,
    rep_check,
    word_guard,
)
from jordeform.ncalg import Element, build_presentation, normal_order
from jordeform.scalars import Radical

GENS = ("B-", "A-", "N", "M", "A+", "B+")


def entry(g, i, j, order=4, D=6):
    return fock_matrix(g, D, "normalized", order).entry(i, j)


def test_printed_entries():
    assert entry("A-", 1, 1) == {1: Radical(1)}
    assert entry("B+", 3, 0) == {1: -Radical.sqrt(6)}
    assert entry("B+", 4, 0) == {2: Radical(Fraction(7, 6), 6)}
    assert entry("N", 2, 1) == {1: Radical.sqrt(Fraction(1, 2))}
    assert entry("B-", 1, 2) == {1: Radical.sqrt(2)}
    assert entry("A-", 4, 1) == {4: Radical.sqrt(Fraction(1, 24))}


def test_golden_blocks():
    rep = compare_with_printed_matrices()
    assert len(rep) == 6 * 25
    assert rep.passed, [r.identity for r in rep.failures()]


def test_boson_realization():
    assert realize_boson("A+", 4) == BosonWord.creation(4)
    assert realize_boson("B+", 4).classical_limit() == BosonWord.creation(4) * BosonWord.creation(4)
    ap = realize_boson("A+", 4)
    assert realize_boson("B+", 4) != ap * ap
    with pytest.raises(KeyError):
        realize_boson("H", 2)


def test_b_plus_series_coefficient():
    """The printed closed-form B+ coefficient against a sympy expansion of ((1-e^{-x})/x)^2."""
    x = sympy.Symbol("x")
    expansion = sympy.series(((1 - sympy.exp(-x)) / x) ** 2, x, 0, 9).removeO()
    for k in range(1, 9):
        closed = sympy.Rational((-2 + 2 ** (k + 2)) * (-1) ** k, factorial(k + 2))
        assert expansion.coeff(x, k) == closed


@pytest.mark.parametrize("order", range(0, 7))
def test_constructions_agree(order):
    for g in GENS:
        assert fock_matrix(g, 24, "unnormalized", order, "boson") == \
            fock_matrix(g, 24, "unnormalized", order, "closed")


def test_classical_ladder():
    D = 8
    for g in GENS:
        mat = fock_matrix(g, D, "normalized", 0)
        for (i, j, k), r in mat.data.items():
            assert k == 0
            want = {"A+": (j + 1, j + 1), "A-": (j - 1, j), "N": (j, j), "M": (j, 1),
                    "B+": (j + 2, (j + 1) * (j + 2)), "B-": (j - 2, j * (j - 1))}[g]
            row, square = want
            if g in ("N", "M"):
                assert i == row and r == Radical({"N": j, "M": 1}[g])
            else:
                assert i == row and r == Radical.sqrt(square)
    assert fock_matrix("M", D, "unnormalized", 4) == FockMatrix.identity(D, 4)


def test_normalized_entries_rationalize():
    for g in GENS:
        mat = fock_matrix(g, 10, "normalized", 5)
        for (i, j, k), r in mat.data.items():
            back = r * Radical.sqrt(Fraction(factorial(j), factorial(i)))
            assert back.r == 1
            assert back.squared() == r.squared() * Fraction(factorial(j), factorial(i))
        assert mat.unnormalized() == fock_matrix(g, 10, "unnormalized", 5)
        for c in fock_matrix(g, 10, "unnormalized", 5).data.values():
            assert isinstance(c, Fraction)


def test_rep_check_full():
    rep = rep_check(build_presentation("h6_jordanian", 4), 16)
    assert rep.passed, [r.identity for r in rep.failures()]
    assert len(rep) == 2 * 15 + 6


def test_weyl_algebra_check():
    assert boson_rep_check(build_presentation("h6_jordanian", 5)).passed


def test_guard_is_sound_and_needed():
    p = build_presentation("h6_jordanian", 4)
    D = 14
    small, big = fock_rep(p, D), fock_rep(p, D + 4)
    needed = False
    for i in range(p.n):
        for j in range(i):
            x, y = p.symbols[i], p.symbols[j]
            G = pair_guard(p, i, j, H6_RAISE)
            L = max([2] + [sum(m) for m, _ in p.bracket_data(i, j)])
            assert G <= 2 * L + p.order   # never looser than the uniform 2L + M rule
            size = D - G
            a = (small.mats[x] @ small.mats[y]).block(size)
            b = (big.mats[x] @ big.mats[y]).block(size)
            assert a == b
            # without the guard, truncation artefacts leak into the residual
            full = small.mats[x] @ small.mats[y] - small.mats[y] @ small.mats[x] \
                - small.of(Element(p, p.bracket_data(i, j)))
            needed = needed or not full.is_zero()
    assert needed


def test_word_guard_rule():
    assert word_guard([(("B+", "B-"), 0)], H6_RAISE, 4) == 2 + 4
    assert word_guard([(("A+",), 3)], H6_RAISE, 4) == 1 + 1
    assert word_guard([(("B+", "B+"), 0)], H6_RAISE, 4, z_growth=False) == 4


def test_word_normal_form_matches_matrix_product():
    p = build_presentation("h6_jordanian", 4)
    rep = fock_rep(p, 20)
    nf = normal_order(["B+", "B-", "B+"], None, p)
    G = word_guard([(("B+", "B-", "B+"), 0)], H6_RAISE, p.order)
    prod = rep.mats["B+"] @ rep.mats["B-"] @ rep.mats["B+"]
    assert (rep.of(nf) - prod).block(20 - G).is_zero()


def test_empty_guarded_block_is_reported():
    rep = commutator_residuals(fock_rep(build_presentation("h6_jordanian", 4), 6), H6_RAISE)
    assert not rep.passed
    assert any("guarded block empty" in str(r.residual) for r in rep.failures())


def test_bad_dimension():
    with pytest.raises(ValueError):
        fock_matrix("A+", 0)
