"""Classical layer: structure constants, r-matrices and cocommutators.

Everything here is rational.  Classical r-matrices and cocommutators are
linear in ``z``; rather than carrying series, a :class:`WedgeElement` stores a
rational antisymmetric tensor together with the power of ``z`` it multiplies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Mapping

from .report import VerificationReport

Lin = dict[str, Fraction]                   # linear combination of generators
Tensor = dict[tuple[str, ...], Fraction]    # full (not antisymmetrized) tensor


def _acc(out: dict, key, c) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def lin(*pairs) -> Lin:
    """``lin((2, "N"), (1, "M"))`` -> ``{"N": 2, "M": 1}``."""
    out: Lin = {}
    for c, g in pairs:
        _acc(out, g, Fraction(c))
    return out


class LieAlgebra:
    def __init__(self, name: str, generators: Iterable[str], brackets: Mapping[tuple[str, str], Lin]):
        self.name = name
        self.generators = tuple(generators)
        self._pos = {g: i for i, g in enumerate(self.generators)}
        sc: dict[tuple[str, str], Lin] = {}
        for (x, y), v in brackets.items():
            if (y, x) in sc and sc[(y, x)] != {g: -c for g, c in v.items()}:
                raise ValueError(f"bracket [{x},{y}] given twice, inconsistently")
            sc[(x, y)] = {g: Fraction(c) for g, c in v.items() if c}
            sc[(y, x)] = {g: -Fraction(c) for g, c in v.items() if c}
        self.structure_constants = sc

    def pos(self, g: str) -> int:
        return self._pos[g]

    def bracket_gen(self, x: str, y: str) -> Lin:
        if x == y:
            return {}
        return self.structure_constants.get((x, y), {})

    def bracket(self, a: Lin, b: Lin) -> Lin:
        out: Lin = {}
        for x, cx in a.items():
            for y, cy in b.items():
                for g, c in self.bracket_gen(x, y).items():
                    _acc(out, g, cx * cy * c)
        return out

    def with_constant(self, x: str, y: str, value: Lin) -> "LieAlgebra":
        """Copy with one bracket replaced (for negative controls)."""
        br = {k: v for k, v in self.structure_constants.items() if k not in ((x, y), (y, x))}
        br[(x, y)] = value
        keep = {}
        for (a, b), v in br.items():
            if (b, a) not in keep:
                keep[(a, b)] = v
        return LieAlgebra(self.name + "*", self.generators, keep)

    def ad(self, x: str, t: Tensor) -> Tensor:
        """Adjoint action of a generator on every leg of a tensor."""
        out: Tensor = {}
        for key, c in t.items():
            for slot, g in enumerate(key):
                for h, ch in self.bracket_gen(x, g).items():
                    _acc(out, key[:slot] + (h,) + key[slot + 1:], c * ch)
        return out

    def closes(self, gens: Iterable[str]) -> bool:
        gens = set(gens)
        return all(set(self.bracket_gen(x, y)) <= gens for x in gens for y in gens)


@dataclass
class WedgeElement:
    """``z**zpow * sum_t c_t (t_0 ^ t_1 [^ t_2])`` with increasing tuples ``t``."""

    algebra: LieAlgebra
    rank: int
    terms: dict[tuple[str, ...], Fraction] = field(default_factory=dict)
    zpow: int = 1

    def __post_init__(self):
        self.terms = {t: Fraction(c) for t, c in self.terms.items() if c}
        for t in self.terms:
            pos = [self.algebra.pos(g) for g in t]
            if len(t) != self.rank or pos != sorted(set(pos)):
                raise ValueError(f"wedge index {t} is not strictly increasing")

    @classmethod
    def from_pairs(cls, g: LieAlgebra, pairs: Iterable[tuple], zpow: int = 1) -> "WedgeElement":
        """Build from ``(c, x, y)`` meaning ``c x^y``, antisymmetrizing as needed."""
        terms: dict = {}
        rank = None
        for c, *gens in pairs:
            rank = len(gens)
            perm = sorted(range(rank), key=lambda i: g.pos(gens[i]))
            key = tuple(gens[i] for i in perm)
            if len(set(key)) < rank:
                continue
            _acc(terms, key, Fraction(c) * _sign(perm))
        return cls(g, rank or 2, terms, zpow)

    @classmethod
    def from_tensor(cls, g: LieAlgebra, t: Tensor, rank: int, zpow: int) -> "WedgeElement":
        w = cls(g, rank, {k: c for k, c in t.items()
                         if [g.pos(x) for x in k] == sorted({g.pos(x) for x in k})
                         and len(set(k)) == rank}, zpow)
        if w.to_tensor() != {k: c for k, c in t.items() if c}:
            raise ValueError("tensor is not totally antisymmetric")
        return w

    def to_tensor(self) -> Tensor:
        out: Tensor = {}
        for key, c in self.terms.items():
            for perm in permutations(range(self.rank)):
                _acc(out, tuple(key[i] for i in perm), c * _sign(list(perm)))
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, WedgeElement):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.rank == other.rank and self.zpow == other.zpow and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        zs = "z" if self.zpow == 1 else f"z^{self.zpow}"
        body = " + ".join(f"{c}*{'^'.join(t)}" for t, c in self.terms.items())
        return f"{zs}*({body})"


def _sign(perm: list[int]) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


CocommutatorTable = dict[str, WedgeElement]


# -- the classical algebras -------------------------------------------------------

H6_GENERATORS = ("B-", "A-", "N", "M", "A+", "B+")
SCHRODINGER_GENERATORS = ("C", "K", "D", "M", "P", "H")


def h6_algebra() -> LieAlgebra:
    return LieAlgebra("h6", H6_GENERATORS, {
        ("N", "A+"): lin((1, "A+")),
        ("N", "A-"): lin((-1, "A-")),
        ("A-", "A+"): lin((1, "M")),
        ("N", "B+"): lin((2, "B+")),
        ("N", "B-"): lin((-2, "B-")),
        ("B-", "B+"): lin((4, "N"), (2, "M")),
        ("A+", "B-"): lin((-2, "A-")),
        ("A+", "B+"): {},
        ("A-", "B+"): lin((2, "A+")),
        ("A-", "B-"): {},
    })


def schrodinger_algebra() -> LieAlgebra:
    return LieAlgebra("schrodinger", SCHRODINGER_GENERATORS, {
        ("D", "P"): lin((-1, "P")),
        ("D", "K"): lin((1, "K")),
        ("K", "P"): lin((1, "M")),
        ("D", "H"): lin((-2, "H")),
        ("D", "C"): lin((2, "C")),
        ("H", "C"): lin((1, "D")),
        ("K", "H"): lin((1, "P")),
        ("K", "C"): {},
        ("P", "C"): lin((-1, "K")),
        ("P", "H"): {},
    })


def h6_r_matrix(g: LieAlgebra | None = None) -> WedgeElement:
    g = g or h6_algebra()
    return WedgeElement.from_pairs(g, [(1, "N", "A+")])


def h6_dual_r_matrix(g: LieAlgebra | None = None) -> WedgeElement:
    """Image of the h6 r-matrix under the automorphism: ``z A- ^ N``."""
    g = g or h6_algebra()
    return WedgeElement.from_pairs(g, [(1, "A-", "N")])


def schrodinger_r_matrix(g: LieAlgebra | None = None) -> WedgeElement:
    g = g or schrodinger_algebra()
    return WedgeElement.from_pairs(g, [(1, "P", "D"), (Fraction(1, 2), "P", "M")])


def h6_cocommutators(g: LieAlgebra | None = None) -> CocommutatorTable:
    g = g or h6_algebra()
    W = lambda *pairs: WedgeElement.from_pairs(g, pairs)
    return {
        "A+": W(), "M": W(),
        "N": W((1, "N", "A+")),
        "B+": W((-2, "B+", "A+")),
        "A-": W((1, "A-", "A+"), (1, "N", "M")),
        "B-": W((2, "B-", "A+"), (2, "N", "A-")),
    }


def h6_dual_cocommutators(g: LieAlgebra | None = None) -> CocommutatorTable:
    g = g or h6_algebra()
    W = lambda *pairs: WedgeElement.from_pairs(g, pairs)
    return {
        "A-": W(), "M": W(),
        "N": W((1, "N", "A-")),
        "B-": W((-2, "B-", "A-")),
        "A+": W((1, "A+", "A-"), (1, "N", "M")),
        "B+": W((2, "B+", "A-"), (2, "N", "A+")),
    }


def schrodinger_cocommutators(g: LieAlgebra | None = None) -> CocommutatorTable:
    g = g or schrodinger_algebra()
    W = lambda *pairs: WedgeElement.from_pairs(g, pairs)
    h = Fraction(1, 2)
    return {
        "P": W(), "M": W(),
        "H": W((-2, "H", "P")),
        "K": W((1, "K", "P"), (-1, "D", "M")),
        "D": W((1, "D", "P"), (h, "M", "P")),
        "C": W((2, "C", "P"), (1, "K", "D"), (h, "K", "M")),
    }


# -- checks -----------------------------------------------------------------------


def jacobi_check(g: LieAlgebra) -> VerificationReport:
    rep = VerificationReport(f"jacobi:{g.name}")
    for x, y, w in combinations(g.generators, 3):
        X, Y, Z = {x: Fraction(1)}, {y: Fraction(1)}, {w: Fraction(1)}

        def residual(X=X, Y=Y, Z=Z):
            out: Lin = {}
            for a, b, c in ((X, Y, Z), (Y, Z, X), (Z, X, Y)):
                for gg, cc in g.bracket(g.bracket(a, b), c).items():
                    _acc(out, gg, cc)
            return out

        rep.check(f"jacobi[{x},{y},{w}]", "[[X,Y],Z] + cyclic = 0", residual)
    return rep


def cocommutator_from_r(g: LieAlgebra, r: WedgeElement) -> CocommutatorTable:
    """``delta(X) = [1 (x) X + X (x) 1, r]`` for every generator."""
    if r.rank != 2:
        raise ValueError("r must have rank 2")
    rt = r.to_tensor()
    return {x: WedgeElement.from_tensor(g, g.ad(x, rt), 2, r.zpow) for x in g.generators}


def schouten(g: LieAlgebra, r: WedgeElement) -> Tensor:
    """``[r12, r13] + [r12, r23] + [r13, r23]`` as a rank-3 tensor."""
    rt = list(r.to_tensor().items())
    out: Tensor = {}
    for (a, b), c1 in rt:
        for (x, y), c2 in rt:
            c = c1 * c2
            for h, ch in g.bracket_gen(a, x).items():
                _acc(out, (h, b, y), c * ch)
            for h, ch in g.bracket_gen(b, x).items():
                _acc(out, (a, h, y), c * ch)
            for h, ch in g.bracket_gen(b, y).items():
                _acc(out, (a, x, h), c * ch)
    return out


def cybe_check(g: LieAlgebra, r: WedgeElement) -> VerificationReport:
    rep = VerificationReport(f"cybe:{g.name}")
    rep.check(f"cybe[{r}]", "[[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] = 0",
              lambda: schouten(g, r))
    return rep


def _delta_tensor(d: CocommutatorTable, x: str) -> Tensor:
    return d[x].to_tensor() if x in d else {}


def cojacobi_and_cocycle_check(g: LieAlgebra, d: CocommutatorTable) -> VerificationReport:
    rep = VerificationReport(f"bialgebra:{g.name}")
    for x in g.generators:
        def cojacobi(x=x):
            t: Tensor = {}
            for (a, b), c in _delta_tensor(d, x).items():
                for (p, q), cc in _delta_tensor(d, a).items():
                    _acc(t, (p, q, b), c * cc)
            out: Tensor = {}
            for (p, q, r), c in t.items():
                for key in ((p, q, r), (q, r, p), (r, p, q)):
                    _acc(out, key, c)
            return out

        rep.check(f"co-jacobi[{x}]", "Alt((delta x id)delta(X)) = 0", cojacobi)
    for x, y in combinations(g.generators, 2):
        def cocycle(x=x, y=y):
            lhs: Tensor = {}
            for h, c in g.bracket_gen(x, y).items():
                for key, cc in _delta_tensor(d, h).items():
                    _acc(lhs, key, c * cc)
            for key, c in g.ad(x, _delta_tensor(d, y)).items():
                _acc(lhs, key, -c)
            for key, c in g.ad(y, _delta_tensor(d, x)).items():
                _acc(lhs, key, c)
            return lhs

        rep.check(f"cocycle[{x},{y}]", "delta([X,Y]) = ad_X delta(Y) - ad_Y delta(X)", cocycle)
    return rep


def compare_tables(a: CocommutatorTable, b: CocommutatorTable, name: str) -> VerificationReport:
    rep = VerificationReport(name)
    for x in sorted(set(a) | set(b)):
        wa, wb = a.get(x), b.get(x)
        rep.expect(f"delta[{x}]", "delta(X) = [1 x X + X x 1, r]",
                   lambda wa=wa, wb=wb: (wa is None or wa.is_zero()) and (wb is None or wb.is_zero())
                   or (wa is not None and wb is not None and wa == wb))
    return rep


# -- automorphism and isomorphism ---------------------------------------------------

# N -> -N, A+ -> -A-, A- -> -A+, M -> -M, B+ -> -B-, B- -> -B+ (and z -> -z).
AUTOMORPHISM = {"N": "N", "A+": "A-", "A-": "A+", "M": "M", "B+": "B-", "B-": "B+"}


def apply_automorphism(x):
    """Image under the h6 automorphism with ``z -> -z``.

    Accepts a linear combination (dict), a :class:`WedgeElement` or a
    cocommutator table.
    """
    if isinstance(x, WedgeElement):
        zsign = (-1) ** x.zpow
        gsign = (-1) ** x.rank
        return WedgeElement.from_pairs(
            x.algebra,
            [(c * zsign * gsign, *(AUTOMORPHISM[g] for g in t)) for t, c in x.terms.items()],
            x.zpow,
        )
    if isinstance(x, dict) and x and all(isinstance(v, WedgeElement) for v in x.values()):
        # delta'(phi X) = (phi ^ phi) delta(X); phi X = -X'
        return {AUTOMORPHISM[g]: _negate(apply_automorphism(w)) for g, w in x.items()}
    return {AUTOMORPHISM[g]: -Fraction(c) for g, c in x.items()}


def _negate(w: WedgeElement) -> WedgeElement:
    return WedgeElement(w.algebra, w.rank, {t: -c for t, c in w.terms.items()}, w.zpow)


_FORWARD = {  # h6 generator -> Schrodinger combination
    "N": lin((-1, "D"), (Fraction(-1, 2), "M")),
    "A+": lin((1, "P")),
    "A-": lin((1, "K")),
    "B+": lin((2, "H")),
    "B-": lin((2, "C")),
    "M": lin((1, "M")),
}
_INVERSE = {  # Schrodinger generator -> h6 combination
    "D": lin((-1, "N"), (Fraction(-1, 2), "M")),
    "P": lin((1, "A+")),
    "K": lin((1, "A-")),
    "H": lin((Fraction(1, 2), "B+")),
    "C": lin((Fraction(1, 2), "B-")),
    "M": lin((1, "M")),
}
ISO_FORWARD = _FORWARD
ISO_INVERSE = _INVERSE


def iso_h6_schrodinger(x: Lin, direction: str = "forward") -> Lin:
    table = {"forward": _FORWARD, "inverse": _INVERSE}[direction]
    out: Lin = {}
    for g, c in x.items():
        for h, ch in table[g].items():
            _acc(out, h, Fraction(c) * ch)
    return out


def iso_wedge(w: WedgeElement, target: LieAlgebra, direction: str = "forward") -> WedgeElement:
    out: Tensor = {}
    for key, c in w.to_tensor().items():
        parts: list[tuple[tuple[str, ...], Fraction]] = [((), c)]
        for g in key:
            parts = [(pre + (h,), cc * ch) for pre, cc in parts
                     for h, ch in iso_h6_schrodinger({g: Fraction(1)}, direction).items()]
        for k, cc in parts:
            _acc(out, k, cc)
    return WedgeElement.from_tensor(target, out, w.rank, w.zpow)


def is_lie_morphism(src: LieAlgebra, dst: LieAlgebra, f) -> bool:
    """``f([x,y]) == [f(x), f(y)]`` on all generator pairs."""
    for x in src.generators:
        for y in src.generators:
            lhs = f(src.bracket_gen(x, y))
            rhs = dst.bracket(f({x: Fraction(1)}), f({y: Fraction(1)}))
            if lhs != rhs:
                return False
    return True


# -- link with the quantum coproducts ---------------------------------------------------


def first_order_table(h, g: LieAlgebra) -> CocommutatorTable:
    """Order-``z`` part of ``Delta - flip(Delta)`` for each generator of a Hopf structure."""
    from .hopf import order_one_antisymmetric

    p = h.presentation
    out: CocommutatorTable = {}
    for x in p.symbols:
        t: Tensor = {}
        for ((m1, m2), k), c in order_one_antisymmetric(h, x).data.items():
            if sum(m1) != 1 or sum(m2) != 1:
                raise ValueError(f"order-z part of Delta({x}) has a nonlinear leg")
            t[(p.symbols[m1.index(1)], p.symbols[m2.index(1)])] = c
        out[x] = WedgeElement.from_tensor(g, t, 2, 1)
    return out
