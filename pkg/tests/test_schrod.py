from fractions import Fraction

import pytest

from jordeform.hopf import (
    HopfStructure,
    build_hopf,
    build_universal_R,
    coproduct,
    tensor,
)
from jordeform.ncalg import Element, build_presentation, commutator, exp_primitive, expm1_over_z
from jordeform.schrod import (
    H6_TO_SCHRODINGER,
    IsoMap,
    check_iso_is_hopf_morphism,
    subalgebra_survey,
    survey_witnesses,
    transport_element,
    transport_tensor,
)

M = 4
h6 = build_presentation("h6_jordanian", M)
sc = build_presentation("schrodinger_jordanian", M)
half = Fraction(1, 2)


def test_generator_images():
    assert transport_element(h6.gen("A+")) == sc.gen("P")
    assert transport_element(h6.gen("N")) == -sc.gen("D") - half * sc.gen("M")
    assert transport_element(sc.gen("H"), direction="inverse") == half * h6.gen("B+")


def test_transport_respects_brackets():
    Bm, Bp = h6.gens("B-", "B+")
    C2, H2 = 2 * sc.gen("C"), 2 * sc.gen("H")
    assert transport_element(commutator(Bm, Bp)) == commutator(C2, H2)
    # [D,P] = (1 - e^{zP})/z, i.e. -[N + M/2, A+] carried over
    D, P = sc.gens("D", "P")
    assert commutator(D, P) == -expm1_over_z("P", 1, sc)
    N, Mc, Ap = h6.gens("N", "M", "A+")
    assert transport_element(-commutator(N + half * Mc, Ap)) == commutator(D, P)


def test_round_trip():
    a = h6.gen("B-") * h6.gen("A+") + h6.z(3, 2) * h6.gen("N") * h6.gen("N")
    assert transport_element(transport_element(a), direction="inverse") == a
    assert H6_TO_SCHRODINGER.is_inverse_pair()


def test_wrong_source_rejected():
    with pytest.raises(ValueError):
        transport_element(sc.gen("P"))
    with pytest.raises(ValueError):
        H6_TO_SCHRODINGER.table("sideways")


def test_coproduct_of_h():
    s = build_hopf("schrodinger_jordanian", M)
    H = sc.gen("H")
    assert coproduct(H, s) == tensor(sc.one(), H) + tensor(H, exp_primitive("P", -2, sc))
    h = build_hopf("h6_jordanian", M)
    assert transport_tensor(h.coproduct_table["B+"]).scale(half) == coproduct(H, s)


def test_r_matrix_transport():
    R = transport_tensor(build_universal_R(build_hopf("h6_jordanian", M)))
    assert R == build_universal_R(build_hopf("schrodinger_jordanian", M))


def test_full_morphism_report():
    rep = check_iso_is_hopf_morphism(M)
    assert rep.passed, [r.identity for r in rep.failures()]
    # inverse pair + 2 directions x (15 brackets + 3*6 maps + R)
    assert len(rep) == 1 + 2 * (15 + 18 + 1)


def test_mistyped_schrodinger_table_is_detected(monkeypatch):
    """A sign flip in the typed-in Delta(K) shows up as a coproduct mismatch."""
    s = build_hopf("schrodinger_jordanian", M)
    K, D, Mc = sc.gens("K", "D", "M")
    E = exp_primitive("P", 1, sc)
    bad = dict(s.coproduct_table)
    bad["K"] = tensor(sc.one(), K) + tensor(K, E) + tensor(D + half * Mc, E * Mc).scale(sc.z())
    broken = HopfStructure(sc, bad, s.counit_table, s.antipode_table)
    import jordeform.schrod as mod

    real = mod.build_hopf
    monkeypatch.setattr(mod, "build_hopf",
                        lambda name, order: broken if name == "schrodinger_jordanian" else real(name, order))
    rep = check_iso_is_hopf_morphism(M, both_directions=False)
    assert {r.identity for r in rep.failures()} == {"iso-coproduct[A-]"}


def test_subalgebra_survey():
    rep = subalgebra_survey(M)
    assert rep.passed and len(rep) == 6
    w = survey_witnesses(M)
    assert w["Hopf-closed{D,P,K,M}"] is None and w["Hopf-closed{N,A+,A-,M}"] is None
    assert "Delta(K)" in w["Hopf-closed{H,P,K,M}"]
    assert w["Hopf-closed{D,C,H}"] is not None


def test_survey_at_order_zero():
    assert subalgebra_survey(0).passed
    assert all(v is None for v in survey_witnesses(0).values())


def test_custom_iso_failing_inverse():
    broken = IsoMap({"A+": {"P": Fraction(2)}}, {"P": {"A+": Fraction(1)}})
    assert not broken.is_inverse_pair()
