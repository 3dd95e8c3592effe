from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordeform.liebialg import h6_algebra, schrodinger_algebra
from jordeform.ncalg import (
    PRESENTATIONS,
    Element,
    UnknownPresentationError,
    apply_automorphism_element,
    build_presentation,
    classical_limit,
    commutator,
    exp_primitive,
    expm1_over_z,
    multiply,
    normal_order,
    word_element,
)
from jordeform.scalars import ZSeries

M = 4


@pytest.fixture(params=PRESENTATIONS)
def p(request):
    return build_presentation(request.param, M)


def entry(p, x, y):
    return Element(p, p.bracket_data(p.index(x), p.index(y)))


def test_printed_table_entries():
    h = build_presentation("h6_jordanian", M)
    s = build_presentation("schrodinger_jordanian", M)
    assert str(entry(h, "A-", "B-")) == "-z*A-^2"
    assert str(entry(h, "N", "B-")) == "-2*B- - z*A-*N"
    assert str(entry(s, "K", "C")) == "-(z/2)*K^2"
    # [A-, A+] = M e^{zA+}
    assert entry(h, "A-", "A+") == h.gen("M") * exp_primitive("A+", 1, h)
    # [N, A+] = (e^{zA+} - 1)/z
    assert entry(h, "N", "A+") == expm1_over_z("A+", 1, h)
    h0 = build_presentation("h6_jordanian", 0)
    assert entry(h0, "B-", "B+") == 4 * h0.gen("N") + 2 * h0.gen("M")


def test_unknown_presentation():
    with pytest.raises(UnknownPresentationError):
        build_presentation("sl2", 3)


def test_mixing_algebras_is_rejected():
    a = build_presentation("h6_jordanian", 2).gen("N")
    b = build_presentation("h6_jordanian", 3).gen("N")
    with pytest.raises(ValueError):
        a * b


def test_multiply_examples():
    h = build_presentation("h6_jordanian", M)
    Ap, N = h.gens("A+", "N")
    assert multiply(Ap, h.one()) == Ap
    assert multiply(Ap, N) == N * Ap - expm1_over_z("A+", 1, h)
    assert commutator(Ap, Ap) == h.zero()
    assert commutator(h.gen("A-"), h.gen("B-")) == -h.z() * h.gen("A-") ** 2


def test_exp_primitive():
    h = build_presentation("h6_jordanian", 2)
    Ap = h.gen("A+")
    assert exp_primitive("A+", 1, h) == h.one() + h.z() * Ap + h.z(Fraction(1, 2), 2) * Ap * Ap
    h = build_presentation("h6_jordanian", M)
    assert exp_primitive("A+", 1, h) * exp_primitive("A+", -1, h) == h.one()
    assert classical_limit(exp_primitive("A+", 1, h)) == h.one()
    assert classical_limit(h.z() * h.gen("A-") ** 2) == h.zero()
    assert classical_limit(entry(h, "N", "A+")) == h.gen("A+")
    assert classical_limit(entry(h, "B-", "B+")) == 4 * h.gen("N") + 2 * h.gen("M")


def test_centrality(p):
    for x in p.symbols:
        assert commutator(p.gen("M"), p.gen(x)) == p.zero()


def test_quantum_jacobi(p):
    gens = [p.gen(x) for x in p.symbols]
    for a, b, c in combinations(gens, 3):
        total = (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a))
                 + commutator(c, commutator(a, b)))
        assert total == p.zero()


def test_classical_tables():
    for name, g in (("h6_jordanian", h6_algebra()), ("h6_jordanian_dual", h6_algebra()),
                    ("schrodinger_jordanian", schrodinger_algebra())):
        p = build_presentation(name, 0)
        for x in p.symbols:
            for y in p.symbols:
                want = p.zero()
                for h, c in g.bracket_gen(x, y).items():
                    want = want + p.gen(h).scale(c)
                assert commutator(p.gen(x), p.gen(y)) == want


def test_ordered_word_is_fixed():
    h = build_presentation("h6_jordanian", M)
    word = ["B-", "A-", "N", "M", "A+", "B+"]
    assert normal_order(word, None, h) == h.monomial((1, 1, 1, 1, 1, 1))


def test_rewrite_of_am_ap():
    h = build_presentation("h6_jordanian", M)
    Am, Ap = h.gens("A-", "A+")
    assert normal_order(["A-", "A+"], None, h) == Ap * Am + h.gen("M") * exp_primitive("A+", 1, h)


def test_dual_table_is_automorphic_image():
    src = build_presentation("h6_jordanian", M)
    dst = build_presentation("h6_jordanian_dual", M)
    for x in src.symbols:
        for y in src.symbols:
            lhs = apply_automorphism_element(commutator(src.gen(x), src.gen(y)), dst)
            phx = apply_automorphism_element(src.gen(x), dst)
            phy = apply_automorphism_element(src.gen(y), dst)
            assert lhs == commutator(phx, phy)
    a = src.gen("B-") * src.gen("A+") + src.z() * src.gen("N")
    assert apply_automorphism_element(apply_automorphism_element(a, dst), src) == a


names = st.sampled_from(PRESENTATIONS)


@st.composite
def words(draw):
    name = draw(names)
    p = build_presentation(name, 3)
    w = draw(st.lists(st.sampled_from(p.symbols), min_size=0, max_size=6))
    c = ZSeries(draw(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=1, max_size=2)), 3)
    return p, w, c


@given(words())
def test_confluence(args):
    p, w, c = args
    left = normal_order(w, c, p, "leftmost")
    right = normal_order(w, c, p, "rightmost")
    assert left == right == word_element(w, p, c)


@st.composite
def elements(draw, p, n=3):
    out = p.zero()
    for _ in range(draw(st.integers(1, n))):
        w = draw(st.lists(st.sampled_from(p.symbols), max_size=3))
        k = draw(st.integers(0, 1))
        c = draw(st.fractions(-2, 2, max_denominator=3))
        out = out + word_element(w, p, p.z(c, k))
    return out


@given(st.data())
def test_associativity(data):
    p = build_presentation(data.draw(names), 3)
    a, b, c = (data.draw(elements(p)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_unknown_strategy():
    h = build_presentation("h6_jordanian", 2)
    with pytest.raises(ValueError):
        normal_order(["A-"], None, h, "middle")
