"""Noncommutative PBW algebras over truncated z-series.

An :class:`Element` of ``U_z(g)`` is stored as a flat map
``(monomial, k) -> Fraction`` meaning ``coeff * z**k * monomial``, where a
monomial is a tuple of exponents in PBW order.  Products are normal-ordered by
the rewrite ``X*Y -> Y*X + [X, Y]`` for every adjacent pair with ``X`` after
``Y``; brackets come from the presentation's commutator table.

Rewrites terminate: each step either lowers (degree, inversions) at fixed
z-order or spends at least one power of ``z``, and terms beyond ``z**order``
are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Sequence, Union

from .scalars import ZSeries, format_scaled_z, format_series

Monomial = tuple[int, ...]
Data = dict[tuple[Monomial, int], Fraction]

PRESENTATIONS = ("h6_jordanian", "h6_jordanian_dual", "schrodinger_jordanian")

_ONE = Fraction(1)


class UnknownPresentationError(KeyError):
    pass


class MissingRuleError(KeyError):
    """A reordering needed a commutator that the table does not (yet) define."""


def _acc(out: dict, key, c) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@dataclass(frozen=True)
class Generator:
    id: str
    order_index: int

    def __str__(self) -> str:
        return self.id


class Presentation:
    """Six generators in PBW order plus the bracket of every inverted pair."""

    def __init__(
        self,
        name: str,
        symbols: Sequence[str],
        order: int,
        central: Iterable[str] = (),
    ):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.name = name
        self.order = order
        self.symbols = tuple(symbols)
        self.generators = tuple(Generator(s, i) for i, s in enumerate(self.symbols))
        self._index = {s: i for i, s in enumerate(self.symbols)}
        self.n = len(self.symbols)
        self.identity: Monomial = (0,) * self.n
        self.central = frozenset(self._index[s] for s in central)
        # (i, j) with i > j  ->  normal form of [g_i, g_j]
        self.table: dict[tuple[int, int], Data] = {}
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"Presentation({self.name!r}, order={self.order})"

    # -- basic constructors ---------------------------------------------------

    def index(self, g: Union[str, int, Generator]) -> int:
        if isinstance(g, Generator):
            return g.order_index
        if isinstance(g, int):
            return g
        try:
            return self._index[g]
        except KeyError:
            raise KeyError(f"{g!r} is not a generator of {self.name}") from None

    def unit(self, i: int) -> Monomial:
        m = [0] * self.n
        m[i] = 1
        return tuple(m)

    def element(self, data: Data) -> "Element":
        return Element(self, data)

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return self.scalar(1)

    def scalar(self, c, k: int = 0) -> "Element":
        if k > self.order or not c:
            return self.zero()
        return Element(self, {(self.identity, k): Fraction(c)})

    def gen(self, g) -> "Element":
        return Element(self, {(self.unit(self.index(g)), 0): _ONE})

    def gens(self, *names: str) -> list["Element"]:
        return [self.gen(s) for s in names]

    def monomial(self, m: Monomial, c=1, k: int = 0) -> "Element":
        return Element(self, {(tuple(m), k): Fraction(c)} if k <= self.order else {})

    def z(self, c=1, k: int = 1) -> ZSeries:
        return ZSeries.monomial(c, k, self.order)

    # -- brackets and the rewrite core ----------------------------------------

    def define(self, x: str, y: str, value: "Element") -> None:
        i, j = self.index(x), self.index(y)
        if i <= j:
            raise ValueError(f"table entries are stored for X after Y; got [{x},{y}]")
        self.table[(i, j)] = dict(value.data)

    def bracket_data(self, i: int, j: int) -> Data:
        if i == j:
            return {}
        if i > j:
            try:
                return self.table[(i, j)]
            except KeyError:
                raise MissingRuleError(
                    f"[{self.symbols[i]},{self.symbols[j]}] not defined in {self.name}"
                ) from None
        return {key: -c for key, c in self.bracket_data(j, i).items()}

    def _mono_gen(self, m: Monomial, j: int, budget: int) -> Data:
        """Normal form of ``m * g_j`` keeping z-powers ``<= budget``."""
        last = -1
        for i in range(self.n - 1, -1, -1):
            if m[i]:
                last = i
                break
        if last <= j:
            mm = list(m)
            mm[j] += 1
            return {(tuple(mm), 0): _ONE}
        key = ("g", m, j, budget)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        rule = self.table.get((last, j))
        if rule is None:
            rule = self.bracket_data(last, j)
        mp = list(m)
        mp[last] -= 1
        mp = tuple(mp)
        res: Data = {}
        # m' g_last g_j = m' g_j g_last + m' [g_last, g_j]
        for (t, k), c in self._mono_gen(mp, j, budget).items():
            for (t2, k2), c2 in self._mono_gen(t, last, budget - k).items():
                _acc(res, (t2, k + k2), c * c2)
        for (t, k), c in rule.items():
            if k <= budget:
                for (t2, k2), c2 in self._mono_mul(mp, t, budget - k).items():
                    _acc(res, (t2, k + k2), c * c2)
        self._cache[key] = res
        return res

    def _mono_mul(self, m1: Monomial, m2: Monomial, budget: int) -> Data:
        """Normal form of ``m1 * m2`` keeping z-powers ``<= budget``."""
        if budget < 0:
            return {}
        if m2 == self.identity:
            return {(m1, 0): _ONE}
        key = (m1, m2, budget)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        j = next(i for i, e in enumerate(m2) if e)
        left = self._mono_gen(m1, j, budget)
        rest = list(m2)
        rest[j] -= 1
        rest = tuple(rest)
        if rest == self.identity:
            res = left
        else:
            res = {}
            for (t, k), c in left.items():
                for (t2, k2), c2 in self._mono_mul(t, rest, budget - k).items():
                    _acc(res, (t2, k + k2), c * c2)
        self._cache[key] = res
        return res

    def mul_data(self, a: Data, b: Data, budget: int | None = None) -> Data:
        top = self.order if budget is None else budget
        out: Data = {}
        for (m1, k1), c1 in a.items():
            for (m2, k2), c2 in b.items():
                k = k1 + k2
                if k > top:
                    continue
                c = c1 * c2
                for (t, kt), ct in self._mono_mul(m1, m2, top - k).items():
                    _acc(out, (t, k + kt), c * ct)
        return out

    # -- display --------------------------------------------------------------

    def monomial_str(self, m: Monomial) -> str:
        parts = []
        for s, e in zip(self.symbols, m):
            if e == 1:
                parts.append(s)
            elif e:
                parts.append(f"{s}^{e}")
        return "*".join(parts) if parts else "1"


def _sort_key(item):
    m, series = item
    return (min(series), sum(m), m)


class Element:
    """An element of ``U_z(g)`` in PBW normal form."""

    __slots__ = ("algebra", "data")

    def __init__(self, algebra: Presentation, data: Data):
        self.algebra = algebra
        self.data: Data = {key: c for key, c in data.items() if c}

    @property
    def terms(self) -> dict[Monomial, ZSeries]:
        grouped: dict[Monomial, dict[int, Fraction]] = {}
        for (m, k), c in self.data.items():
            grouped.setdefault(m, {})[k] = c
        M = self.algebra.order
        return {m: ZSeries.from_dict(d, M) for m, d in grouped.items()}

    def is_zero(self) -> bool:
        return not self.data

    def __bool__(self) -> bool:
        return bool(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def _same(self, other: "Element") -> None:
        if other.algebra is not self.algebra:
            raise ValueError(
                f"elements of different algebras: {self.algebra} vs {other.algebra}"
            )

    def _lift(self, other) -> "Element":
        if isinstance(other, Element):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.scalar(other)
        if isinstance(other, ZSeries):
            return self.algebra.one() * other
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.data)
        for key, c in other.data.items():
            _acc(out, key, c)
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.algebra, {key: -c for key, c in self.data.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "Element":
        if isinstance(s, ZSeries):
            M = self.algebra.order
            out: Data = {}
            for (m, k), c in self.data.items():
                for j, cj in enumerate(s.coeffs):
                    if cj and k + j <= M:
                        _acc(out, (m, k + j), c * cj)
            return Element(self.algebra, out)
        s = Fraction(s)
        return Element(self.algebra, {key: c * s for key, c in self.data.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ZSeries)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        return Element(self.algebra, self.algebra.mul_data(self.data, other.data))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ZSeries)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Element":
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra.symbols == other.algebra.symbols and self.data == other.data

    __hash__ = None  # mutable-looking value type; compare, don't hash

    def zorder(self) -> int | None:
        return min((k for (_, k) in self.data), default=None)

    def degree(self) -> int:
        return max((sum(m) for (m, _) in self.data), default=0)

    def generators_used(self) -> set[int]:
        return {i for (m, _) in self.data for i, e in enumerate(m) if e}

    def coefficient(self, m: Monomial) -> ZSeries:
        return ZSeries.from_dict(
            {k: c for (mm, k), c in self.data.items() if mm == tuple(m)},
            self.algebra.order,
        )

    def __repr__(self) -> str:
        return f"<{self.algebra.name}: {self}>"

    def __str__(self) -> str:
        return format_terms(
            ((self.algebra.monomial_str(m), s.as_dict()) for m, s in
             sorted(self.terms.items(), key=lambda it: _sort_key((it[0], it[1].as_dict()))))
        )


def format_term(mono: str, coeff: dict[int, Fraction]) -> str:
    if len(coeff) == 1:
        (k, c), = coeff.items()
        if mono == "1":
            return format_scaled_z(c, k)
        if k == 0 and abs(c) == 1:
            return mono if c > 0 else "-" + mono
        return f"{format_scaled_z(c, k)}*{mono}"
    body = f"({format_series(coeff)})"
    return body if mono == "1" else f"{body}*{mono}"


def format_terms(items: Iterable[tuple[str, dict[int, Fraction]]]) -> str:
    out = ""
    for mono, coeff in items:
        t = format_term(mono, coeff)
        if not out:
            out = t
        elif t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out or "0"


# -- the operations ---------------------------------------------------------


def multiply(a: Element, b: Element, p: Presentation | None = None) -> Element:
    if p is not None and a.algebra is not p:
        raise ValueError("element does not belong to the given presentation")
    return a * b


def commutator(a: Element, b: Element, p: Presentation | None = None) -> Element:
    return multiply(a, b, p) - multiply(b, a, p)


def exp_primitive(g, c, p: Presentation) -> Element:
    """``exp(c*z*g) = sum_k (c z)^k g^k / k!`` truncated at ``z**order``."""
    i = p.index(g)
    c = Fraction(c)
    data: Data = {}
    for k in range(p.order + 1):
        m = [0] * p.n
        m[i] = k
        _acc(data, (tuple(m), k), c**k / factorial(k))
    return Element(p, data)


def expm1_over_z(g, c, p: Presentation) -> Element:
    """``(exp(c*z*g) - 1)/z = sum_{k>=1} c^k z^(k-1) g^k / k!``."""
    i = p.index(g)
    c = Fraction(c)
    data: Data = {}
    for k in range(1, p.order + 2):
        m = [0] * p.n
        m[i] = k
        _acc(data, (tuple(m), k - 1), c**k / factorial(k))
    return Element(p, data)


def classical_limit(a: Element) -> Element:
    return Element(a.algebra, {(m, k): c for (m, k), c in a.data.items() if k == 0})


def word_element(word: Sequence, p: Presentation, coeff: ZSeries | None = None) -> Element:
    """Product of a generator word via the recursive multiplier."""
    out = p.one() if coeff is None else p.one().scale(coeff)
    for g in word:
        out = out * p.gen(g)
    return out


def normal_order(
    word: Sequence,
    coeff: ZSeries | None,
    p: Presentation,
    strategy: str = "leftmost",
) -> Element:
    """Normal-order a generator word by adjacent-swap rewriting.

    Works on words directly, independently of the memoized multiplier, so the
    two can be compared.  ``strategy`` picks the leftmost or rightmost
    inverted pair at every step.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    M = p.order
    w0 = tuple(p.index(g) for g in word)
    pending: dict[tuple[tuple[int, ...], int], Fraction] = {}
    cs = coeff.coeffs if coeff is not None else (_ONE,)
    for k, c in enumerate(cs):
        if c and k <= M:
            pending[(w0, k)] = Fraction(c)
    done: Data = {}
    while pending:
        (w, k), c = pending.popitem()
        inv = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not inv:
            m = [0] * p.n
            for g in w:
                m[g] += 1
            _acc(done, (tuple(m), k), c)
            continue
        i = inv[0] if strategy == "leftmost" else inv[-1]
        x, y = w[i], w[i + 1]
        _acc(pending, (w[:i] + (y, x) + w[i + 2:], k), c)
        for (t, kt), ct in p.bracket_data(x, y).items():
            if k + kt <= M:
                tw = tuple(g for g, e in enumerate(t) for _ in range(e))
                _acc(pending, (w[:i] + tw + w[i + 2:], k + kt), c * ct)
    return Element(p, done)


# -- the three presentations -------------------------------------------------

H6_ORDER = ("B-", "A-", "N", "M", "A+", "B+")
H6_DUAL_ORDER = ("B+", "A+", "N", "M", "A-", "B-")
SCHRODINGER_ORDER = ("C", "K", "D", "M", "P", "H")


def _central(p: Presentation, m: str) -> None:
    im = p.index(m)
    for i in range(p.n):
        if i > im:
            p.table[(i, im)] = {}
        elif i < im:
            p.table[(im, i)] = {}


def _h6(p: Presentation) -> None:
    Bm, Am, N, M, Ap, Bp = p.gens(*H6_ORDER)
    z = p.z()
    E = lambda c: exp_primitive("A+", c, p)
    _central(p, "M")
    p.define("A+", "N", -expm1_over_z("A+", 1, p))
    p.define("A+", "A-", -(M * E(1)))
    p.define("N", "A-", -Am)
    p.define("N", "B-", -2 * Bm - z * (Am * N))
    p.define("A-", "B-", -z * (Am * Am))
    p.define("A+", "B-", -((1 + E(1)) * Am) + z * (E(1) * M * N))
    p.define("B+", "N", -2 * Bp)
    # [A-,B+] = 2(1 - e^{-zA+})/z
    p.define("B+", "A-", 2 * expm1_over_z("A+", -1, p))
    p.define("B+", "A+", p.zero())
    # [B-,B+] = 2(1 + e^{-zA+})N + 2M - 2z A- B+
    p.define("B+", "B-", -(2 * ((1 + E(-1)) * N) + 2 * M - 2 * z * (Am * Bp)))


def _h6_dual(p: Presentation) -> None:
    Bp, Ap, N, M, Am, Bm = p.gens(*H6_DUAL_ORDER)
    z = p.z()
    E = lambda c: exp_primitive("A-", c, p)
    _central(p, "M")
    # [N,A-] = -(e^{zA-} - 1)/z
    p.define("A-", "N", expm1_over_z("A-", 1, p))
    p.define("N", "A+", Ap)
    p.define("A-", "A+", M * E(1))
    p.define("N", "B+", 2 * Bp + z * (Ap * N))
    p.define("B-", "N", 2 * Bm)
    # [B+,B-] = -2(1 + e^{-zA-})N - 2M + 2z A+ B-
    p.define("B-", "B+", 2 * ((1 + E(-1)) * N) + 2 * M - 2 * z * (Ap * Bm))
    p.define("A-", "B+", (1 + E(1)) * Ap - z * (E(1) * M * N))
    p.define("B-", "A-", p.zero())
    # [A+,B-] = -2(1 - e^{-zA-})/z
    p.define("B-", "A+", -2 * expm1_over_z("A-", -1, p))
    p.define("A+", "B+", z * (Ap * Ap))


def _schrodinger(p: Presentation) -> None:
    C, K, D, M, P, H = p.gens(*SCHRODINGER_ORDER)
    z = p.z()
    half = Fraction(1, 2)
    E = lambda c: exp_primitive("P", c, p)
    Dt = D + half * M
    _central(p, "M")
    # [D,P] = (1 - e^{zP})/z
    p.define("P", "D", expm1_over_z("P", 1, p))
    p.define("P", "K", -(M * E(1)))
    p.define("D", "K", K)
    p.define("K", "C", -half * z * (K * K))
    p.define("D", "C", 2 * C - half * z * (K * Dt))
    p.define("P", "C", -half * ((1 + E(1)) * K) - half * z * (E(1) * M * Dt))
    p.define("H", "P", p.zero())
    p.define("H", "D", 2 * H)
    # [K,H] = (1 - e^{-zP})/z
    p.define("H", "K", expm1_over_z("P", -1, p))
    p.define("H", "C", half * ((1 + E(-1)) * Dt) - half * M + z * (K * H))


_BUILDERS: dict[str, tuple[tuple[str, ...], Callable[[Presentation], None]]] = {
    "h6_jordanian": (H6_ORDER, _h6),
    "h6_jordanian_dual": (H6_DUAL_ORDER, _h6_dual),
    "schrodinger_jordanian": (SCHRODINGER_ORDER, _schrodinger),
}


@lru_cache(maxsize=None)
def build_presentation(name: str, M: int) -> Presentation:
    """Build one of the three deformed presentations at truncation order ``M``."""
    try:
        symbols, fill = _BUILDERS[name]
    except KeyError:
        raise UnknownPresentationError(
            f"unknown presentation {name!r}; expected one of {PRESENTATIONS}"
        ) from None
    p = Presentation(name, symbols, M, central=("M",))
    fill(p)
    missing = [(i, j) for i in range(p.n) for j in range(i) if (i, j) not in p.table]
    assert not missing, f"incomplete table for {name}: {missing}"
    if name == "h6_jordanian_dual":
        # the typed-in table must match the automorphic image of the h6 one
        image = automorphism_table(build_presentation("h6_jordanian", M), p)
        bad = [key for key, v in p.table.items() if image[key] != v]
        assert not bad, f"dual table disagrees with the transported h6 table at {bad}"
    return p


# -- the h6 automorphism, lifted to the deformed algebras ---------------------

# N -> -N, A+ -> -A-, A- -> -A+, M -> -M, B+ -> -B-, B- -> -B+, z -> -z.
# H6_ORDER and H6_DUAL_ORDER are matched position by position under this map.
AUTOMORPHISM = {"N": "N", "A+": "A-", "A-": "A+", "M": "M", "B+": "B-", "B-": "B+"}


def automorphism_data(data: Data) -> Data:
    """Image of normal-form data: every generator flips sign and ``z -> -z``."""
    return {
        (m, k): c * (-1) ** (sum(m) + k) for (m, k), c in data.items()
    }


def apply_automorphism_element(a: Element, target: Presentation) -> Element:
    """Map an element of one h6 variant to the other (an involution)."""
    src = a.algebra
    if [AUTOMORPHISM[s] for s in src.symbols] != list(target.symbols):
        raise ValueError(f"{src.name} and {target.name} are not automorphic images")
    if src.order != target.order:
        raise ValueError("truncation orders differ")
    return Element(target, automorphism_data(a.data))


def automorphism_table(src: Presentation, target: Presentation) -> dict[tuple[int, int], Data]:
    """Transport a full commutator table; ``[phi X, phi Y] = phi([X, Y])``.

    Both sides pick up a factor ``(-1)**2`` from the generator signs, so the
    bracket of the images is just the image of the bracket.
    """
    if [AUTOMORPHISM[s] for s in src.symbols] != list(target.symbols):
        raise ValueError(f"{src.name} and {target.name} are not automorphic images")
    return {key: automorphism_data(v) for key, v in src.table.items()}
