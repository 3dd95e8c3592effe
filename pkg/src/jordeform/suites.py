"""Named verification suites, grouped the way the command line exposes them."""

from __future__ import annotations

from fractions import Fraction

from . import fb, fock, hopf, liebialg, schrod
from .ncalg import Element, build_presentation
from .report import VerificationReport

ALGEBRAS = ("h6", "h6-dual", "schrodinger")
SUITES = ("classical", "bialgebra", "hopf", "rmatrix", "fock", "fb", "iso")
PRESENTATION_NAME = {
    "h6": "h6_jordanian",
    "h6-dual": "h6_jordanian_dual",
    "schrodinger": "schrodinger_jordanian",
}

# suites that only make sense for some algebras
APPLICABLE = {
    "fock": ("h6",),
    "fb": ("h6", "h6-dual"),
    "iso": ("schrodinger",),
}


def applicable(suite: str, algebra: str) -> bool:
    return algebra in APPLICABLE.get(suite, ALGEBRAS)


def _classical(algebra: str):
    if algebra == "schrodinger":
        g = liebialg.schrodinger_algebra()
        return g, liebialg.schrodinger_r_matrix(g), liebialg.schrodinger_cocommutators(g)
    g = liebialg.h6_algebra()
    if algebra == "h6":
        return g, liebialg.h6_r_matrix(g), liebialg.h6_cocommutators(g)
    return g, liebialg.h6_dual_r_matrix(g), liebialg.h6_dual_cocommutators(g)


def classical_suite(algebra: str) -> VerificationReport:
    g, r, table = _classical(algebra)
    rep = VerificationReport(f"classical:{algebra}")
    rep.extend(liebialg.jacobi_check(g))
    rep.extend(liebialg.cybe_check(g, r))
    rep.extend(liebialg.compare_tables(liebialg.cocommutator_from_r(g, r), table, "cocommutators"))
    rep.extend(liebialg.cojacobi_and_cocycle_check(g, table))
    return _retag(rep)


def bialgebra_suite(algebra: str, order: int) -> VerificationReport:
    """Order-``z`` antisymmetric part of the quantum coproduct against the cocommutators."""
    g, _, table = _classical(algebra)
    rep = VerificationReport(f"bialgebra:{algebra}")
    if order < 1:
        # nothing deformed survives; the coproduct must be cocommutative
        h = hopf.build_hopf(PRESENTATION_NAME[algebra], order)
        for x in h.presentation.symbols:
            d = h.coproduct_table[x]
            rep.check(f"cocommutative[{x}]", "Delta(X) = flip(Delta(X)) at z = 0",
                      lambda d=d: d - hopf.flip(d))
        return _retag(rep)
    h = hopf.build_hopf(PRESENTATION_NAME[algebra], order)
    rep.extend(liebialg.compare_tables(liebialg.first_order_table(h, g), table, "first-order"))
    return _retag(rep)


def hopf_suite(algebra: str, order: int) -> VerificationReport:
    rep = VerificationReport(f"hopf:{algebra}")
    rep.extend(hopf.check_hopf_axioms(hopf.build_hopf(PRESENTATION_NAME[algebra], order)))
    return _retag(rep)


def rmatrix_suite(algebra: str, order: int) -> VerificationReport:
    h = hopf.build_hopf(PRESENTATION_NAME[algebra], order)
    R = hopf.build_universal_R(h)
    rep = VerificationReport(f"rmatrix:{algebra}")
    rep.extend(hopf.check_R_intertwining(h, R))
    rep.extend(hopf.check_qybe(R))
    rep.extend(hopf.check_triangularity(R))
    return _retag(rep)


def fock_suite(order: int, dim: int) -> VerificationReport:
    rep = VerificationReport("fock:h6")
    rep.extend(fock.rep_check(build_presentation("h6_jordanian", order), dim))
    rep.extend(fock.boson_rep_check(build_presentation("h6_jordanian", order)))
    rep.extend(fock.compare_with_printed_matrices())
    return _retag(rep)


def fb_suite(algebra: str, order: int, degree: int) -> VerificationReport:
    variant = "primary" if algebra == "h6" else "dual"
    rep = VerificationReport(f"fb:{algebra}")
    rep.extend(fb.fb_rep_check(variant, degree, order))
    for s in fb.GRADE:
        rep.expect(f"grading[{s}]", "alpha-degree shift equals the generator grade",
                   lambda s=s: not fb.grading_violations(fb.build_fb(s, variant, degree, order), s, variant))
    if variant == "primary":
        rep.extend(fb.discrete_derivative_check(degree))
    else:
        rep.extend(fb.automorphism_transport_check(order))
    return _retag(rep)


def iso_suite(order: int) -> VerificationReport:
    rep = VerificationReport("iso:schrodinger")
    rep.extend(schrod.check_iso_is_hopf_morphism(order))
    rep.extend(schrod.subalgebra_survey(order))
    return _retag(rep)


def run_suite(suite: str, algebra: str, order: int = 4, dim: int = 16,
              degree: int = 12) -> VerificationReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if algebra not in ALGEBRAS:
        raise ValueError(f"unknown algebra {algebra!r}")
    if not applicable(suite, algebra):
        raise ValueError(f"suite {suite!r} does not apply to {algebra!r}")
    if suite == "classical":
        return classical_suite(algebra)
    if suite == "bialgebra":
        return bialgebra_suite(algebra, order)
    if suite == "hopf":
        return hopf_suite(algebra, order)
    if suite == "rmatrix":
        return rmatrix_suite(algebra, order)
    if suite == "fock":
        return fock_suite(order, dim)
    if suite == "fb":
        return fb_suite(algebra, order, degree)
    return iso_suite(order)


def _retag(rep: VerificationReport) -> VerificationReport:
    for r in rep.records:
        r.suite = rep.name
    return rep


# -- classical limit -------------------------------------------------------------------------


def ladder_matrices(dim: int) -> dict[str, fock.SeriesMatrix]:
    """Undeformed boson realization in the ``e_m`` basis, built directly."""
    up = {(m + 1, m, 0): Fraction(1) for m in range(dim - 1)}
    down = {(m - 1, m, 0): Fraction(m) for m in range(1, dim)}
    a_p = fock.SeriesMatrix(dim, 0, up)
    a_m = fock.SeriesMatrix(dim, 0, down)
    return {
        "A+": a_p, "A-": a_m, "N": a_p @ a_m, "M": fock.SeriesMatrix.identity(dim, 0),
        "B+": a_p @ a_p, "B-": a_m @ a_m,
    }


def classical_limit_suite(dim: int = 8) -> VerificationReport:
    """Every deformed structure at ``order = 0`` against its undeformed counterpart."""
    rep = VerificationReport("classical-limit")
    pairs = (("h6_jordanian", liebialg.h6_algebra()),
             ("h6_jordanian_dual", liebialg.h6_algebra()),
             ("schrodinger_jordanian", liebialg.schrodinger_algebra()))
    for name, g in pairs:
        p = build_presentation(name, 0)
        for i in range(p.n):
            for j in range(p.n):
                x, y = p.symbols[i], p.symbols[j]
                want = g.bracket_gen(x, y)

                def residual(i=i, j=j, want=want, p=p):
                    got = Element(p, p.bracket_data(i, j)) if i != j else p.zero()
                    expect = p.zero()
                    for h, c in want.items():
                        expect = expect + p.gen(h).scale(c)
                    return got - expect

                rep.check(f"{name}:[{x},{y}]", "deformed bracket at z = 0 is the Lie bracket", residual)
        h = hopf.build_hopf(name, 0)
        for x in p.symbols:
            rep.check(f"{name}:primitive[{x}]", "Delta(X) = 1 x X + X x 1 at z = 0",
                      lambda x=x, h=h, p=p: h.coproduct_table[x]
                      - hopf.tensor(p.one(), p.gen(x)) - hopf.tensor(p.gen(x), p.one()))
            rep.check(f"{name}:antipode[{x}]", "S(X) = -X at z = 0",
                      lambda x=x, h=h, p=p: h.antipode_table[x] + p.gen(x))
        rep.check(f"{name}:R", "R = 1 x 1 at z = 0",
                  lambda h=h, p=p: hopf.build_universal_R(h) - hopf.tensor_one(p))
    ladder = ladder_matrices(dim)
    for s in ladder:
        rep.check(f"fock:{s}", "deformed Fock matrix at z = 0 is the boson ladder form",
                  lambda s=s: fock.fock_matrix(s, dim, "unnormalized", 0) - ladder[s])
        rep.check(f"fb:{s}", "primary FB operator at z = 0 is the boson ladder form",
                  lambda s=s: fb.build_fb(s, "primary", dim - 1, 0) - ladder[s])
    # automorphism: presentation to presentation, and an involution
    rep.extend(fb.automorphism_transport_check(4))
    g = liebialg.h6_algebra()
    rep.expect("automorphism-lie-morphism", "phi([X,Y]) = [phi X, phi Y] at z = 0",
               lambda: liebialg.is_lie_morphism(g, g, liebialg.apply_automorphism))
    rep.expect("automorphism-involution", "phi o phi = id on generators",
               lambda: all(liebialg.apply_automorphism(liebialg.apply_automorphism({x: Fraction(1)}))
                           == {x: Fraction(1)} for x in g.generators))
    return _retag(rep)
