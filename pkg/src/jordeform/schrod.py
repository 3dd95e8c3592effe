"""Quantum Schrodinger algebra obtained by transport from the deformed h6.

The Schrodinger Hopf structure in :mod:`jordeform.hopf` is typed in
independently; here the h6 structure is pushed through the linear
isomorphism and the two are compared term by term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .hopf import (
    HopfStructure,
    TData,
    TensorElement,
    antipode,
    build_hopf,
    build_universal_R,
    coproduct,
    counit,
    hopf_subalgebra_witness,
)
from .liebialg import ISO_FORWARD, ISO_INVERSE, h6_algebra, schrodinger_algebra
from .ncalg import Element, Monomial, Presentation, _acc, build_presentation
from .report import VerificationReport

H6 = "h6_jordanian"
SCHRODINGER = "schrodinger_jordanian"


@dataclass
class IsoMap:
    """Rational linear map on generators, in both directions."""

    forward: dict[str, dict[str, Fraction]]
    inverse: dict[str, dict[str, Fraction]]
    _images: dict = field(default_factory=dict, repr=False)

    def table(self, direction: str) -> dict[str, dict[str, Fraction]]:
        if direction not in ("forward", "inverse"):
            raise ValueError(f"direction must be 'forward' or 'inverse', not {direction!r}")
        return self.forward if direction == "forward" else self.inverse

    def generator_image(self, g: str, target: Presentation, direction: str) -> Element:
        out = target.zero()
        for h, c in self.table(direction)[g].items():
            out = out + target.gen(h).scale(c)
        return out

    def monomial_image(self, m: Monomial, src: Presentation, target: Presentation,
                       direction: str) -> Element:
        key = (m, src.name, target.name, target.order, direction)
        hit = self._images.get(key)
        if hit is None:
            hit = target.one()
            for i, e in enumerate(m):
                if e:
                    hit = hit * self.generator_image(src.symbols[i], target, direction) ** e
            self._images[key] = hit
        return hit

    def is_inverse_pair(self) -> bool:
        """``forward`` composed with ``inverse`` is the identity, both ways round."""
        for a, b in ((self.forward, self.inverse), (self.inverse, self.forward)):
            for g, img in a.items():
                out: dict[str, Fraction] = {}
                for h, c in img.items():
                    for k, ck in b[h].items():
                        _acc(out, k, c * ck)
                if out != {g: Fraction(1)}:
                    return False
        return True


H6_TO_SCHRODINGER = IsoMap(ISO_FORWARD, ISO_INVERSE)


def _target(direction: str, order: int) -> Presentation:
    return build_presentation(SCHRODINGER if direction == "forward" else H6, order)


def transport_element(a: Element, m: IsoMap = H6_TO_SCHRODINGER,
                      direction: str = "forward") -> Element:
    """Substitute generator images and re-order in the target; ``z`` is untouched."""
    src = a.algebra
    target = _target(direction, src.order)
    expected = H6 if direction == "forward" else SCHRODINGER
    if src.name != expected:
        raise ValueError(f"{direction} transport needs an element of {expected}, got {src.name}")
    out = target.zero()
    for (mono, k), c in a.data.items():
        out = out + m.monomial_image(mono, src, target, direction).scale(target.z(c, k))
    return out


def transport_tensor(t: TensorElement, m: IsoMap = H6_TO_SCHRODINGER,
                     direction: str = "forward") -> TensorElement:
    src = t.algebra
    target = _target(direction, src.order)
    M = target.order
    out: TData = {}
    for (ms, k), c in t.data.items():
        partial = {((), k): c}
        for mono in ms:
            img = m.monomial_image(mono, src, target, direction)
            new: dict = {}
            for (pref, kk), cc in partial.items():
                for (tm, kt), ct in img.data.items():
                    if kk + kt <= M:
                        _acc(new, (pref + (tm,), kk + kt), cc * ct)
            partial = new
        for key, c2 in partial.items():
            _acc(out, key, c2)
    return TensorElement(target, t.rank, out)


def check_iso_is_hopf_morphism(order: int = 4, m: IsoMap = H6_TO_SCHRODINGER,
                               both_directions: bool = True) -> VerificationReport:
    """Transported h6 data against the independently typed Schrodinger data."""
    rep = VerificationReport("iso")
    rep.expect("iso-inverse-pair", "forward o inverse = id", m.is_inverse_pair)
    directions = ("forward", "inverse") if both_directions else ("forward",)
    for direction in directions:
        src_name = H6 if direction == "forward" else SCHRODINGER
        hs = build_hopf(src_name, order)
        ht = build_hopf(SCHRODINGER if direction == "forward" else H6, order)
        _check_direction(rep, hs, ht, m, direction)
    return rep


def _check_direction(rep: VerificationReport, hs: HopfStructure, ht: HopfStructure,
                     m: IsoMap, direction: str) -> None:
    ps = hs.presentation
    tag = "" if direction == "forward" else "-inverse"
    img = {s: transport_element(ps.gen(s), m, direction) for s in ps.symbols}
    for i in range(ps.n):
        for j in range(i):
            x, y = ps.symbols[i], ps.symbols[j]
            rep.check(
                f"iso{tag}-commutator[{x},{y}]", "T([X,Y]) = [T X, T Y]",
                lambda i=i, j=j, x=x, y=y: transport_element(Element(ps, ps.bracket_data(i, j)), m, direction)
                - (img[x] * img[y] - img[y] * img[x]),
            )
    for s in ps.symbols:
        g = ps.gen(s)
        rep.check(f"iso{tag}-coproduct[{s}]", "(T x T) Delta(X) = Delta(T X)",
                  lambda s=s: transport_tensor(hs.coproduct_table[s], m, direction)
                  - coproduct(img[s], ht))
        rep.check(f"iso{tag}-antipode[{s}]", "T S(X) = S(T X)",
                  lambda s=s: transport_element(hs.antipode_table[s], m, direction)
                  - antipode(img[s], ht))
        rep.check(f"iso{tag}-counit[{s}]", "eps(X) = eps(T X)",
                  lambda s=s, g=g: (counit(g, hs) - counit(img[s], ht)).as_dict())
    rep.check(f"iso{tag}-R-matrix", "(T x T) R = R'",
              lambda: transport_tensor(build_universal_R(hs), m, direction) - build_universal_R(ht))


SURVEY = (
    # (label, algebra, generators, expected Hopf closure)
    ("Hopf-closed{D,P,K,M}", SCHRODINGER, ("D", "P", "K", "M"), True),
    ("Hopf-closed{N,A+,A-,M}", H6, ("N", "A+", "A-", "M"), True),
    ("Hopf-closed{H,P,K,M}", SCHRODINGER, ("H", "P", "K", "M"), False),
    ("Hopf-closed{D,C,H}", SCHRODINGER, ("D", "C", "H"), False),
)
LIE_SURVEY = (
    ("Lie-closed{H,P,K,M}", ("H", "P", "K", "M")),   # extended Galilei
    ("Lie-closed{D,C,H}", ("D", "C", "H")),          # sl(2,R)
)


def subalgebra_survey(order: int = 4) -> VerificationReport:
    """Which generator sets close as Hopf subalgebras, and which only classically."""
    rep = VerificationReport("subalgebras")
    for label, name, gens, expected in SURVEY:
        # every obstruction is O(z): at order 0 all of these sets close
        expected = expected or order == 0
        witness = hopf_subalgebra_witness(build_hopf(name, order), gens)
        closed = witness is None
        rep.record(label, "closed under product, coproduct and antipode",
                   closed == expected, None if closed == expected else witness)
    g = schrodinger_algebra()
    for label, gens in LIE_SURVEY:
        rep.expect(label, "closed under the undeformed bracket", lambda gens=gens: g.closes(gens))
    return rep


def survey_witnesses(order: int = 4) -> dict[str, str | None]:
    return {label: hopf_subalgebra_witness(build_hopf(name, order), gens)
            for label, name, gens, _ in SURVEY}


def h6_lie_closure(gens) -> bool:
    return h6_algebra().closes(gens)
