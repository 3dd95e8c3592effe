"""Tensor powers, Hopf structures and universal R-matrices.

Coproducts, counits and antipodes are given on generators and extended
(anti-)multiplicatively.  Every axiom is checked as an exact identity modulo
``z**(order+1)``; a failed check keeps its residual for inspection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .ncalg import (
    Data,
    Element,
    Monomial,
    Presentation,
    _acc,
    apply_automorphism_element,
    automorphism_data,
    build_presentation,
    exp_primitive,
    format_terms,
)
from .report import VerificationReport
from .scalars import ZSeries

TData = dict[tuple[tuple[Monomial, ...], int], Fraction]


class RankMismatchError(ValueError):
    pass


class UnsupportedPresentationError(ValueError):
    pass


class TensorElement:
    """Element of the rank-2 or rank-3 tensor power of ``U_z(g)``."""

    __slots__ = ("algebra", "rank", "data")

    def __init__(self, algebra: Presentation, rank: int, data: TData):
        if rank not in (2, 3):
            raise ValueError("rank must be 2 or 3")
        self.algebra = algebra
        self.rank = rank
        self.data: TData = {key: c for key, c in data.items() if c}

    @property
    def terms(self) -> dict[tuple[Monomial, ...], ZSeries]:
        grouped: dict = {}
        for (ms, k), c in self.data.items():
            grouped.setdefault(ms, {})[k] = c
        return {ms: ZSeries.from_dict(d, self.algebra.order) for ms, d in grouped.items()}

    def is_zero(self) -> bool:
        return not self.data

    def __bool__(self) -> bool:
        return bool(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def _check(self, other: "TensorElement") -> None:
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")
        if other.algebra is not self.algebra:
            raise ValueError("tensor elements over different algebras")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.data)
        for key, c in other.data.items():
            _acc(out, key, c)
        return TensorElement(self.algebra, self.rank, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.algebra, self.rank, {k: -c for k, c in self.data.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, s) -> "TensorElement":
        M = self.algebra.order
        if isinstance(s, ZSeries):
            out: TData = {}
            for (ms, k), c in self.data.items():
                for j, cj in enumerate(s.coeffs):
                    if cj and k + j <= M:
                        _acc(out, (ms, k + j), c * cj)
            return TensorElement(self.algebra, self.rank, out)
        s = Fraction(s)
        return TensorElement(self.algebra, self.rank, {k: c * s for k, c in self.data.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        if isinstance(other, (int, Fraction, ZSeries)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ZSeries)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.rank == other.rank
                and self.algebra.symbols == other.algebra.symbols
                and self.data == other.data)

    __hash__ = None

    def zpart(self, k: int) -> "TensorElement":
        return TensorElement(self.algebra, self.rank,
                             {(ms, kk): c for (ms, kk), c in self.data.items() if kk == k})

    def slot_generators(self) -> set[int]:
        return {i for (ms, _) in self.data for m in ms for i, e in enumerate(m) if e}

    def __repr__(self) -> str:
        return f"<{self.algebra.name} rank-{self.rank}: {self}>"

    def __str__(self) -> str:
        p = self.algebra
        items = []
        for ms, s in sorted(self.terms.items(),
                            key=lambda it: (it[1].valuation(), sum(map(sum, it[0])), it[0])):
            items.append((" (x) ".join(p.monomial_str(m) for m in ms), s.as_dict()))
        return format_terms(items)


def tensor(*factors: Element) -> TensorElement:
    """Outer product ``a (x) b [(x) c]``."""
    p = factors[0].algebra
    M = p.order
    partial: dict = {((), 0): Fraction(1)}
    for f in factors:
        if f.algebra is not p:
            raise ValueError("factors from different algebras")
        new: dict = {}
        for (pref, k), c in partial.items():
            for (m, kk), cc in f.data.items():
                if k + kk <= M:
                    _acc(new, (pref + (m,), k + kk), c * cc)
        partial = new
    return TensorElement(p, len(factors), partial)


def tensor_one(p: Presentation, rank: int = 2) -> TensorElement:
    return TensorElement(p, rank, {((p.identity,) * rank, 0): Fraction(1)})


def tensor_multiply(a: TensorElement, b: TensorElement, p: Presentation | None = None) -> TensorElement:
    a._check(b)
    p = a.algebra if p is None else p
    M = p.order
    out: TData = {}
    for (ms1, k1), c1 in a.data.items():
        for (ms2, k2), c2 in b.data.items():
            k = k1 + k2
            if k > M:
                continue
            partial = {((), k): c1 * c2}
            for m1, m2 in zip(ms1, ms2):
                new: dict = {}
                for (pref, kk), cc in partial.items():
                    for (t, kt), ct in p._mono_mul(m1, m2, M - kk).items():
                        _acc(new, (pref + (t,), kk + kt), cc * ct)
                partial = new
            for key, c in partial.items():
                _acc(out, key, c)
    return TensorElement(p, a.rank, out)


def flip(t: TensorElement) -> TensorElement:
    if t.rank != 2:
        raise RankMismatchError("flip needs a rank-2 tensor")
    return TensorElement(t.algebra, 2, {((m2, m1), k): c for ((m1, m2), k), c in t.data.items()})


def embed(t: TensorElement, slots: tuple[int, int], rank: int = 3) -> TensorElement:
    """Place a rank-2 tensor into ``slots`` of a rank-3 tensor, identity elsewhere."""
    p = t.algebra
    out: TData = {}
    for ((m1, m2), k), c in t.data.items():
        ms = [p.identity] * rank
        ms[slots[0]], ms[slots[1]] = m1, m2
        out[(tuple(ms), k)] = c
    return TensorElement(p, rank, out)


def tensor_exp(x, y, c, p: Presentation) -> TensorElement:
    """``exp(c*z * x (x) y) = sum_k (c z)^k/k! x^k (x) y^k`` for generators x, y."""
    i, j = p.index(x), p.index(y)
    c = Fraction(c)
    out: TData = {}
    for k in range(p.order + 1):
        mx = [0] * p.n
        my = [0] * p.n
        mx[i] += k
        my[j] += k
        _acc(out, ((tuple(mx), tuple(my)), k), c**k / factorial(k))
    return TensorElement(p, 2, out)


# -- Hopf structures ----------------------------------------------------------


@dataclass
class HopfStructure:
    presentation: Presentation
    coproduct_table: dict[str, TensorElement]
    counit_table: dict[str, ZSeries]
    antipode_table: dict[str, Element]

    def __post_init__(self):
        self._delta: dict[Monomial, TensorElement] = {}
        self._gamma: dict[Monomial, Element] = {}

    @property
    def name(self) -> str:
        return self.presentation.name

    def delta_monomial(self, m: Monomial) -> TensorElement:
        hit = self._delta.get(m)
        if hit is not None:
            return hit
        p = self.presentation
        out = tensor_one(p)
        for i, e in enumerate(m):
            for _ in range(e):
                out = tensor_multiply(out, self.coproduct_table[p.symbols[i]])
        self._delta[m] = out
        return out

    def gamma_monomial(self, m: Monomial) -> Element:
        hit = self._gamma.get(m)
        if hit is not None:
            return hit
        p = self.presentation
        out = p.one()
        for i in range(p.n - 1, -1, -1):
            for _ in range(m[i]):
                out = out * self.antipode_table[p.symbols[i]]
        self._gamma[m] = out
        return out

    def epsilon_monomial(self, m: Monomial) -> ZSeries:
        p = self.presentation
        out = ZSeries.one(p.order)
        for i, e in enumerate(m):
            for _ in range(e):
                out = out * self.counit_table[p.symbols[i]]
        return out


def coproduct(a: Element, h: HopfStructure) -> TensorElement:
    p = h.presentation
    M = p.order
    out: TData = {}
    for (m, k), c in a.data.items():
        for (ms, kk), cc in h.delta_monomial(m).data.items():
            if k + kk <= M:
                _acc(out, (ms, k + kk), c * cc)
    return TensorElement(p, 2, out)


def counit(a: Element, h: HopfStructure) -> ZSeries:
    M = h.presentation.order
    out = ZSeries.zero(M)
    for (m, k), c in a.data.items():
        out = out + h.epsilon_monomial(m) * ZSeries.monomial(c, k, M)
    return out


def antipode(a: Element, h: HopfStructure) -> Element:
    p = h.presentation
    out = p.zero()
    for (m, k), c in a.data.items():
        out = out + h.gamma_monomial(m).scale(ZSeries.monomial(c, k, p.order))
    return out


def _delta_slot(t: TensorElement, h: HopfStructure, slot: int) -> TensorElement:
    """Apply the coproduct to one leg of a rank-2 tensor, giving rank 3."""
    p = h.presentation
    M = p.order
    out: TData = {}
    for ((m1, m2), k), c in t.data.items():
        target = m1 if slot == 0 else m2
        for ((a, b), kk), cc in h.delta_monomial(target).data.items():
            if k + kk <= M:
                ms = (a, b, m2) if slot == 0 else (m1, a, b)
                _acc(out, (ms, k + kk), c * cc)
    return TensorElement(p, 3, out)


def _counit_slot(t: TensorElement, h: HopfStructure, slot: int) -> Element:
    p = h.presentation
    M = p.order
    out: Data = {}
    for ((m1, m2), k), c in t.data.items():
        eps = h.epsilon_monomial(m1 if slot == 0 else m2)
        keep = m2 if slot == 0 else m1
        for j, e in enumerate(eps.coeffs):
            if e and k + j <= M:
                _acc(out, (keep, k + j), c * e)
    return Element(p, out)


def _antipode_multiply(t: TensorElement, h: HopfStructure, slot: int) -> Element:
    """``m(S (x) id)`` for slot 0, ``m(id (x) S)`` for slot 1."""
    p = h.presentation
    M = p.order
    out: Data = {}
    for ((m1, m2), k), c in t.data.items():
        if slot == 0:
            left, right = h.gamma_monomial(m1).data, {(m2, 0): Fraction(1)}
        else:
            left, right = {(m1, 0): Fraction(1)}, h.gamma_monomial(m2).data
        for key, v in p.mul_data(left, right, M - k).items():
            mm, kk = key
            _acc(out, (mm, kk + k), v * c)
    return Element(p, out)


ANCHORS = {
    "morphism": "Delta(X)Delta(Y) - Delta(Y)Delta(X) = Delta([X,Y])",
    "coassoc": "(Delta x id)Delta(X) = (id x Delta)Delta(X)",
    "counit": "(eps x id)Delta(X) = X = (id x eps)Delta(X)",
    "antipode": "m(S x id)Delta(X) = eps(X)1 = m(id x S)Delta(X)",
    "intertwining": "R Delta(X) = (flip Delta(X)) R",
    "qybe": "R12 R13 R23 = R23 R13 R12",
    "triangular": "R flip(R) = 1 x 1",
}


def check_hopf_axioms(h: HopfStructure) -> VerificationReport:
    p = h.presentation
    rep = VerificationReport(f"hopf:{p.name}")
    syms = p.symbols
    for i in range(p.n):
        for j in range(i):
            x, y = syms[i], syms[j]
            dx, dy = h.coproduct_table[x], h.coproduct_table[y]
            rep.check(
                f"morphism[{x},{y}]", ANCHORS["morphism"],
                lambda dx=dx, dy=dy, i=i, j=j: tensor_multiply(dx, dy) - tensor_multiply(dy, dx)
                - coproduct(Element(p, p.bracket_data(i, j)), h),
            )
    for x in syms:
        d = h.coproduct_table[x]
        g = p.gen(x)
        eps = h.counit_table[x]
        rep.check(f"coassociativity[{x}]", ANCHORS["coassoc"],
                  lambda d=d: _delta_slot(d, h, 0) - _delta_slot(d, h, 1))
        rep.check(f"counit-left[{x}]", ANCHORS["counit"],
                  lambda d=d, g=g: _counit_slot(d, h, 0) - g)
        rep.check(f"counit-right[{x}]", ANCHORS["counit"],
                  lambda d=d, g=g: _counit_slot(d, h, 1) - g)
        rep.check(f"antipode-left[{x}]", ANCHORS["antipode"],
                  lambda d=d, eps=eps: _antipode_multiply(d, h, 0) - p.one().scale(eps))
        rep.check(f"antipode-right[{x}]", ANCHORS["antipode"],
                  lambda d=d, eps=eps: _antipode_multiply(d, h, 1) - p.one().scale(eps))
    return rep


# -- universal R-matrices -------------------------------------------------------


def build_universal_R(h: HopfStructure) -> TensorElement:
    p = h.presentation
    half = Fraction(1, 2)
    if p.name == "h6_jordanian":
        return tensor_exp("A+", "N", -1, p) * tensor_exp("N", "A+", 1, p)
    if p.name == "h6_jordanian_dual":
        return tensor_exp("A-", "N", 1, p) * tensor_exp("N", "A-", -1, p)
    if p.name == "schrodinger_jordanian":
        return (tensor_exp("P", "D", 1, p) * tensor_exp("P", "M", half, p)
                * tensor_exp("M", "P", -half, p) * tensor_exp("D", "P", -1, p))
    raise UnsupportedPresentationError(f"no universal R-matrix known for {p.name}")


def check_R_intertwining(h: HopfStructure, R: TensorElement) -> VerificationReport:
    if R.rank != 2:
        raise RankMismatchError("R must have rank 2")
    rep = VerificationReport(f"intertwining:{h.name}")
    for x in h.presentation.symbols:
        d = h.coproduct_table[x]
        rep.check(f"intertwining[{x}]", ANCHORS["intertwining"],
                  lambda d=d: tensor_multiply(R, d) - tensor_multiply(flip(d), R))
    return rep


def check_qybe(R: TensorElement, p: Presentation | None = None) -> VerificationReport:
    if R.rank != 2:
        raise RankMismatchError("R must have rank 2")
    p = R.algebra if p is None else p
    rep = VerificationReport(f"qybe:{p.name}")
    r12, r13, r23 = embed(R, (0, 1)), embed(R, (0, 2)), embed(R, (1, 2))
    rep.check("qybe", ANCHORS["qybe"], lambda: r12 * r13 * r23 - r23 * r13 * r12)
    return rep


def check_triangularity(R: TensorElement, p: Presentation | None = None) -> VerificationReport:
    p = R.algebra if p is None else p
    rep = VerificationReport(f"triangular:{p.name}")
    rep.check("triangularity", ANCHORS["triangular"],
              lambda: tensor_multiply(R, flip(R)) - tensor_one(p))
    return rep


def hopf_subalgebra_witness(h: HopfStructure, gens: Iterable[str]) -> str | None:
    """First obstruction to Hopf closure of the span of ``gens``-monomials, or None."""
    p = h.presentation
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    allowed = {p.index(g) for g in gens}
    for g in gens:
        bad = h.coproduct_table[g].slot_generators() - allowed
        if bad:
            return f"Delta({g}) involves {sorted(p.symbols[i] for i in bad)}"
        bad = h.antipode_table[g].generators_used() - allowed
        if bad:
            return f"S({g}) involves {sorted(p.symbols[i] for i in bad)}"
    for a in gens:
        for b in gens:
            br = Element(p, p.bracket_data(p.index(a), p.index(b)))
            bad = br.generators_used() - allowed
            if bad:
                return f"[{a},{b}] involves {sorted(p.symbols[i] for i in bad)}"
    return None


def check_hopf_subalgebra(h: HopfStructure, gens: Iterable[str]) -> bool:
    return hopf_subalgebra_witness(h, gens) is None


# -- the concrete structures ----------------------------------------------------


def _zero_counits(p: Presentation) -> dict[str, ZSeries]:
    return {s: ZSeries.zero(p.order) for s in p.symbols}


def _primitive(p: Presentation, x: str) -> TensorElement:
    g = p.gen(x)
    return tensor(p.one(), g) + tensor(g, p.one())


def _h6_hopf(p: Presentation) -> HopfStructure:
    one = p.one()
    Bm, Am, N, M, Ap, Bp = p.gens("B-", "A-", "N", "M", "A+", "B+")
    z = p.z()
    E = lambda c: exp_primitive("A+", c, p)
    delta = {
        "A+": _primitive(p, "A+"),
        "M": _primitive(p, "M"),
        "N": tensor(one, N) + tensor(N, E(1)),
        "B+": tensor(one, Bp) + tensor(Bp, E(-2)),
        "A-": tensor(one, Am) + tensor(Am, E(1)) + tensor(N, E(1) * M).scale(z),
        "B-": (tensor(one, Bm) + tensor(Bm, E(2))
               + tensor(N, E(1) * (Am - z * (M * N))).scale(z)
               - tensor(Am, E(1) * N).scale(z)),
    }
    gamma = {
        "A+": -Ap,
        "M": -M,
        "N": -(N * E(-1)),
        "B+": -(Bp * E(2)),
        "A-": -(Am * E(-1)) + z * (N * M * E(-1)),
        "B-": -(Bm * E(-2)) - z * (Am * E(-2)),
    }
    return HopfStructure(p, delta, _zero_counits(p), gamma)


def _transport_tensor(t: TensorElement, target: Presentation) -> TensorElement:
    """Automorphism image of a tensor: signs from both legs and from ``z -> -z``."""
    return TensorElement(target, t.rank, {
        (ms, k): c * (-1) ** (sum(map(sum, ms)) + k) for (ms, k), c in t.data.items()
    })


def _h6_dual_hopf(p: Presentation) -> HopfStructure:
    # Delta'(phi X) = (phi x phi) Delta(X) with phi(X) = -X' (and z -> -z).
    src = build_hopf("h6_jordanian", p.order)
    from .ncalg import AUTOMORPHISM

    delta, gamma = {}, {}
    for s in src.presentation.symbols:
        t = AUTOMORPHISM[s]
        delta[t] = -_transport_tensor(src.coproduct_table[s], p)
        gamma[t] = -apply_automorphism_element(src.antipode_table[s], p)
    return HopfStructure(p, delta, _zero_counits(p), gamma)


def _schrodinger_hopf(p: Presentation) -> HopfStructure:
    one = p.one()
    C, K, D, M, P, H = p.gens("C", "K", "D", "M", "P", "H")
    z = p.z()
    half = Fraction(1, 2)
    E = lambda c: exp_primitive("P", c, p)
    Dt = D + half * M
    delta = {
        "P": _primitive(p, "P"),
        "M": _primitive(p, "M"),
        "H": tensor(one, H) + tensor(H, E(-2)),
        "K": tensor(one, K) + tensor(K, E(1)) - tensor(Dt, E(1) * M).scale(z),
        "D": tensor(one, D) + tensor(D, E(1)) + tensor(half * M, E(1) - one),
        "C": (tensor(one, C) + tensor(C, E(2))
              - tensor(Dt, E(1) * (K + z * (Dt * M))).scale(half * z)
              + tensor(K, E(1) * Dt).scale(half * z)),
    }
    # Antipode worked out by hand from the h6 one through the isomorphism
    # D = -N - M/2, P = A+, K = A-, H = B+/2, C = B-/2.
    gamma = {
        "P": -P,
        "M": -M,
        "H": -(H * E(2)),
        "K": -(K * E(-1)) - z * (Dt * M * E(-1)),
        "D": -(Dt * E(-1)) + half * M,
        "C": -(C * E(-2)) - half * z * (K * E(-2)),
    }
    return HopfStructure(p, delta, _zero_counits(p), gamma)


_HOPF = {
    "h6_jordanian": _h6_hopf,
    "h6_jordanian_dual": _h6_dual_hopf,
    "schrodinger_jordanian": _schrodinger_hopf,
}


@lru_cache(maxsize=None)
def build_hopf(name: str, M: int) -> HopfStructure:
    p = build_presentation(name, M)
    return _HOPF[name](p)


def order_one_antisymmetric(h: HopfStructure, x: str) -> TensorElement:
    """Coefficient of ``z`` in ``Delta(X) - flip(Delta(X))`` (times ``z``)."""
    d = h.coproduct_table[x]
    return (d - flip(d)).zpart(1)
