"""Deformed boson realization of U_z(h6) and its truncated Fock matrices.

Computation happens in the unnormalized basis ``e_m = a+^m |0>`` where every
entry is rational: ``a+ e_m = e_{m+1}`` and ``a- e_m = m e_{m-1}``.  The
normalized basis ``|m> = e_m / sqrt(m!)`` exists only to compare with
printed matrices; there entry ``(i, j)`` picks up ``sqrt(i!/j!)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable

from .ncalg import Element, Presentation, _acc, build_presentation
from .report import VerificationReport
from .scalars import Radical, ZSeries

H6 = ("B-", "A-", "N", "M", "A+", "B+")

# Index raise at z^0 (positive part); every spent power of z may raise by one more.
H6_RAISE = {"B+": 2, "A+": 1, "N": 0, "M": 0, "A-": 0, "B-": 0}


# -- boson words ------------------------------------------------------------------


class BosonWord:
    """Normal-ordered ``sum c z^k a+^p a-^q`` (creations left of annihilations)."""

    __slots__ = ("order", "data")

    def __init__(self, order: int, data: dict[tuple[int, int, int], Fraction] | None = None):
        self.order = order
        self.data = {key: c for key, c in (data or {}).items() if c and key[2] <= order}

    @classmethod
    def scalar(cls, c, order: int) -> "BosonWord":
        return cls(order, {(0, 0, 0): Fraction(c)})

    @classmethod
    def creation(cls, order: int) -> "BosonWord":
        return cls(order, {(1, 0, 0): Fraction(1)})

    @classmethod
    def annihilation(cls, order: int) -> "BosonWord":
        return cls(order, {(0, 1, 0): Fraction(1)})

    @classmethod
    def exp_creation(cls, c, order: int, minus_one_over_z: bool = False) -> "BosonWord":
        """``exp(c z a+)``, or ``(exp(c z a+) - 1)/z`` when asked."""
        c = Fraction(c)
        data = {}
        if minus_one_over_z:
            for j in range(1, order + 2):
                data[(j, 0, j - 1)] = c**j / factorial(j)
        else:
            for j in range(order + 1):
                data[(j, 0, j)] = c**j / factorial(j)
        return cls(order, data)

    def __add__(self, other: "BosonWord") -> "BosonWord":
        out = dict(self.data)
        for key, c in other.data.items():
            _acc(out, key, c)
        return BosonWord(self.order, out)

    def __neg__(self) -> "BosonWord":
        return BosonWord(self.order, {k: -c for k, c in self.data.items()})

    def __sub__(self, other: "BosonWord") -> "BosonWord":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BosonWord(self.order, {k: c * other for k, c in self.data.items()})
        out: dict = {}
        M = self.order
        for (p, q, k), c in self.data.items():
            for (r, s, kk), cc in other.data.items():
                if k + kk > M:
                    continue
                # a-^q a+^r = sum_j C(q,j) C(r,j) j! a+^(r-j) a-^(q-j)
                for j in range(min(q, r) + 1):
                    w = comb(q, j) * comb(r, j) * factorial(j)
                    _acc(out, (p + r - j, q - j + s, k + kk), c * cc * w)
        return BosonWord(M, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BosonWord):
            return NotImplemented
        return self.data == other.data

    __hash__ = None

    def __len__(self) -> int:
        return len(self.data)

    def classical_limit(self) -> "BosonWord":
        return BosonWord(self.order, {k: c for k, c in self.data.items() if k[2] == 0})

    def act(self, m: int) -> dict[tuple[int, int], Fraction]:
        """Image of ``e_m`` as ``{(index, zpow): coeff}``."""
        out: dict = {}
        for (p, q, k), c in self.data.items():
            if q <= m:
                _acc(out, (m - q + p, k), c * factorial(m) / factorial(m - q))
        return out

    def __str__(self) -> str:
        def mono(p, q):
            s = []
            if p:
                s.append("a+" if p == 1 else f"a+^{p}")
            if q:
                s.append("a-" if q == 1 else f"a-^{q}")
            return "*".join(s) or "1"

        return " + ".join(f"({c})z^{k}*{mono(p, q)}" for (p, q, k), c in sorted(self.data.items(),
                          key=lambda it: (it[0][2], it[0][0], it[0][1]))) or "0"


def realize_boson(g: str, order: int) -> BosonWord:
    """Deformed boson realization of one h6 generator."""
    ap = BosonWord.creation(order)
    am = BosonWord.annihilation(order)
    if g == "A+":
        return ap
    if g == "M":
        return BosonWord.scalar(1, order)
    if g == "N":
        return BosonWord.exp_creation(1, order, minus_one_over_z=True) * am
    if g == "A-":
        return BosonWord.exp_creation(1, order) * am
    if g == "B+":
        f = -BosonWord.exp_creation(-1, order, minus_one_over_z=True)  # (1 - e^{-z a+})/z
        return f * f
    if g == "B-":
        return BosonWord.exp_creation(1, order) * am * am
    raise KeyError(f"{g!r} is not an h6 generator")


def realize_element(a: Element) -> BosonWord:
    """Boson image of an element of U_z(h6), as an exact Weyl-algebra series."""
    p = a.algebra
    M = p.order
    gens = [realize_boson(s, M) for s in p.symbols]
    out = BosonWord(M)
    cache: dict = {}
    for (m, k), c in a.data.items():
        w = cache.get(m)
        if w is None:
            w = BosonWord.scalar(1, M)
            for i, e in enumerate(m):
                for _ in range(e):
                    w = w * gens[i]
            cache[m] = w
        out = out + BosonWord(M, {(pp, q, kk + k): cc * c for (pp, q, kk), cc in w.data.items()})
    return out


def boson_rep_check(p: Presentation) -> VerificationReport:
    """``[rho X, rho Y] = rho([X, Y])`` in the Weyl algebra, no index truncation."""
    rep = VerificationReport(f"boson:{p.name}")
    M = p.order
    for i in range(p.n):
        for j in range(i):
            x, y = p.symbols[i], p.symbols[j]
            rx, ry = realize_boson(x, M), realize_boson(y, M)
            rep.check(f"boson[{x},{y}]", "[rho X, rho Y] = rho([X,Y])",
                      lambda rx=rx, ry=ry, i=i, j=j:
                      rx * ry - ry * rx - realize_element(Element(p, p.bracket_data(i, j))))
    return rep


# -- matrices -----------------------------------------------------------------------


class SeriesMatrix:
    """Sparse ``dim x dim`` matrix with truncated z-series entries.

    ``data[(i, j, k)]`` is the coefficient of ``z**k`` in entry ``(i, j)``.
    """

    __slots__ = ("dim", "order", "data")

    def __init__(self, dim: int, order: int, data: dict | None = None):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        self.dim = dim
        self.order = order
        self.data = {key: c for key, c in (data or {}).items()
                     if c and key[2] <= order and key[0] < dim and key[1] < dim}

    @classmethod
    def identity(cls, dim: int, order: int):
        return cls(dim, order, {(i, i, 0): Fraction(1) for i in range(dim)})

    @classmethod
    def from_columns(cls, dim: int, order: int, column: Callable[[int], dict]):
        data = {}
        for j in range(dim):
            for (i, k), c in column(j).items():
                if i < dim:
                    data[(i, j, k)] = c
        return cls(dim, order, data)

    def _like(self, data):
        return type(self)(self.dim, self.order, data)

    def entry(self, i: int, j: int) -> ZSeries:
        return ZSeries.from_dict({k: c for (a, b, k), c in self.data.items() if (a, b) == (i, j)},
                                 self.order)

    def __add__(self, other):
        out = dict(self.data)
        for key, c in other.data.items():
            _acc(out, key, c)
        return self._like(out)

    def __neg__(self):
        return self._like({k: -c for k, c in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c, k: int = 0):
        return self._like({(i, j, kk + k): v * c for (i, j, kk), v in self.data.items()})

    def __matmul__(self, other):
        if self.dim != other.dim or self.order != other.order:
            raise ValueError("shape or truncation mismatch")
        rows: dict[int, list] = {}
        for (l, j, b), w in other.data.items():
            rows.setdefault(l, []).append((j, b, w))
        M = self.order
        out: dict = {}
        for (i, l, a), v in self.data.items():
            for j, b, w in rows.get(l, ()):
                if a + b <= M:
                    _acc(out, (i, j, a + b), v * w)
        return self._like(out)

    def block(self, size: int):
        """Leading principal ``size x size`` submatrix."""
        return type(self)(size, self.order,
                          {k: c for k, c in self.data.items() if k[0] < size and k[1] < size})

    def is_zero(self) -> bool:
        return not self.data

    def __len__(self) -> int:
        return len(self.data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.dim == other.dim and self.data == other.data

    __hash__ = None

    def classical_limit(self):
        return self._like({k: c for k, c in self.data.items() if k[2] == 0})

    def dense(self) -> list[list[ZSeries]]:
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]


class FockMatrix(SeriesMatrix):
    """Unnormalized-basis Fock matrix, ``entry(i, j) = <e_i| X |e_j>``."""

    basis = "unnormalized"

    def normalized(self) -> "NormalizedFockMatrix":
        out = {}
        for (i, j, k), c in self.data.items():
            out[(i, j, k)] = Radical.sqrt(Fraction(factorial(i), factorial(j))) * c
        return NormalizedFockMatrix(self.dim, self.order, out)


class NormalizedFockMatrix:
    """Presentation layer: entries ``{z-power: Radical}`` in the ``|m>`` basis."""

    basis = "normalized"

    def __init__(self, dim: int, order: int, data: dict[tuple[int, int, int], Radical]):
        self.dim = dim
        self.order = order
        self.data = {k: v for k, v in data.items() if v}

    def entry(self, i: int, j: int) -> dict[int, Radical]:
        return {k: v for (a, b, k), v in self.data.items() if (a, b) == (i, j)}

    def unnormalized(self) -> FockMatrix:
        out = {}
        for (i, j, k), v in self.data.items():
            u = v * Radical.sqrt(Fraction(factorial(j), factorial(i)))
            if u.r != 1:
                raise ValueError(f"entry ({i},{j}) z^{k} is not rational in the e_m basis")
            out[(i, j, k)] = u.q
        return FockMatrix(self.dim, self.order, out)


def _closed_form_normalized(g: str, m: int, order: int) -> dict[tuple[int, int], Radical]:
    """Action on ``|m>`` written out term by term from the explicit series."""
    out: dict[tuple[int, int], Radical] = {}
    sq = Radical.sqrt

    def put(i, k, r: Radical):
        if k <= order and r:
            key = (i, k)
            if key in out:
                prev = out[key]
                if prev.r != r.r:
                    raise ValueError("mixed radicands in one entry")
                r = Radical(prev.q + r.q, r.r)
            out[key] = r

    def ratio(a, b):  # sqrt(a!/b!)
        return sq(Fraction(factorial(a), factorial(b)))

    if g == "M":
        put(m, 0, Radical(1))
    elif g == "A+":
        put(m + 1, 0, sq(m + 1))
    elif g == "A-":
        if m:
            put(m - 1, 0, sq(m))
        for k in range(order):
            put(m + k, k + 1, ratio(m + k, m) * Fraction(m, factorial(k + 1)))
    elif g == "N":
        put(m, 0, Radical(m))
        for k in range(1, order + 1):
            put(m + k, k, ratio(m + k, m) * Fraction(m, factorial(k + 1)))
    elif g == "B+":
        put(m + 2, 0, sq((m + 1) * (m + 2)))
        for k in range(1, order + 1):
            c = Fraction((-2 + 2 ** (k + 2)) * (-1) ** k, factorial(k + 2))
            put(m + k + 2, k, ratio(m + k + 2, m) * c)
    elif g == "B-":
        if m >= 2:
            put(m - 2, 0, sq(m * (m - 1)))
        if m >= 1:
            put(m - 1, 1, sq(m) * (m - 1))
        for k in range(order - 1):
            put(m + k, k + 2, ratio(m + k, m) * Fraction(m * (m - 1), factorial(k + 2)))
    else:
        raise KeyError(f"{g!r} is not an h6 generator")
    return out


@lru_cache(maxsize=None)
def fock_matrix(g: str, D: int, basis: str = "unnormalized", order: int = 4,
                method: str = "boson"):
    """Matrix of a generator on ``span{e_0..e_{D-1}}``.

    ``method="boson"`` applies the boson word to ``e_m``; ``method="closed"``
    uses the explicit number-state series and converts to the ``e_m`` basis.
    """
    if D < 1:
        raise ValueError("dimension must be at least 1")
    if method == "boson":
        w = realize_boson(g, order)
        mat = FockMatrix.from_columns(D, order, w.act)
    elif method == "closed":
        data = {}
        for j in range(D):
            for (i, k), r in _closed_form_normalized(g, j, order).items():
                if i < D:
                    data[(i, j, k)] = r
        mat = NormalizedFockMatrix(D, order, data).unnormalized()
    else:
        raise ValueError(f"unknown method {method!r}")
    if basis == "unnormalized":
        return mat
    if basis == "normalized":
        return mat.normalized()
    raise ValueError(f"unknown basis {basis!r}")


class MatrixRep:
    """Matrices of all generators plus cached monomial images."""

    def __init__(self, p: Presentation, mats: dict[str, SeriesMatrix]):
        self.p = p
        self.mats = mats
        self.dim = next(iter(mats.values())).dim
        self._mono: dict = {}

    def monomial(self, m) -> SeriesMatrix:
        hit = self._mono.get(m)
        if hit is None:
            first = next(iter(self.mats.values()))
            hit = type(first).identity(self.dim, self.p.order)
            for i, e in enumerate(m):
                for _ in range(e):
                    hit = hit @ self.mats[self.p.symbols[i]]
            self._mono[m] = hit
        return hit

    def of(self, a: Element) -> SeriesMatrix:
        first = next(iter(self.mats.values()))
        out = type(first)(self.dim, self.p.order)
        for (m, k), c in a.data.items():
            out = out + self.monomial(m).scale(c, k)
        return out


def word_guard(words: Iterable[tuple[Iterable[str], int]], raise0: dict[str, int],
               order: int, z_growth: bool = True) -> int:
    """Guard band for an identity made of ``(generator word, coefficient z-power)`` terms.

    Each generator raises the basis index by at most ``raise0[g]`` plus one per
    power of ``z`` it spends; a term with coefficient ``z**c`` has ``order - c``
    powers left.  This is never larger than ``2*L + order``.
    """
    worst = 0
    for word, c in words:
        g = sum(max(raise0[s], 0) for s in word)
        if z_growth:
            g += order - c
        worst = max(worst, g)
    return worst


def pair_guard(p: Presentation, i: int, j: int, raise0: dict[str, int], z_growth: bool = True) -> int:
    words = [((p.symbols[i], p.symbols[j]), 0)]
    for (m, k), _ in p.bracket_data(i, j).items():
        words.append(([p.symbols[t] for t, e in enumerate(m) for _ in range(e)], k))
    return word_guard(words, raise0, p.order, z_growth)


def commutator_residuals(rep: MatrixRep, raise0: dict[str, int], z_growth: bool = True,
                         name: str = "rep", anchor: str = "rho(X)rho(Y) - rho(Y)rho(X) = rho([X,Y])",
                         min_block: int = 1) -> VerificationReport:
    p = rep.p
    out = VerificationReport(name)
    for i in range(p.n):
        for j in range(i):
            x, y = p.symbols[i], p.symbols[j]
            G = pair_guard(p, i, j, raise0, z_growth)
            size = rep.dim - G
            if size < min_block:
                out.record(f"rep[{x},{y}]", anchor, False,
                           f"guarded block empty (dim {rep.dim}, guard {G})")
                continue
            X, Y = rep.mats[x], rep.mats[y]
            out.check(f"rep[{x},{y}] block {size}", anchor,
                      lambda X=X, Y=Y, i=i, j=j, size=size:
                      (X @ Y - Y @ X - rep.of(Element(p, p.bracket_data(i, j)))).block(size))
    return out


def fock_rep(p: Presentation, D: int, method: str = "boson") -> MatrixRep:
    return MatrixRep(p, {s: fock_matrix(s, D, "unnormalized", p.order, method) for s in p.symbols})


def rep_check(p: Presentation, D: int) -> VerificationReport:
    """Commutator table vs. Fock matrices, for both matrix constructions."""
    if p.name != "h6_jordanian":
        raise ValueError("the Fock realization is defined for h6_jordanian")
    report = VerificationReport(f"fock:{p.name}")
    for method in ("boson", "closed"):
        r = commutator_residuals(fock_rep(p, D, method), H6_RAISE, name=f"fock-{method}")
        for rec in r.records:
            rec.identity = f"{method}:{rec.identity}"
        report.extend(r)
    for s in p.symbols:
        a = fock_matrix(s, D, "unnormalized", p.order, "boson")
        b = fock_matrix(s, D, "unnormalized", p.order, "closed")
        report.check(f"constructions-agree[{s}]", "boson action = closed-form series",
                     lambda a=a, b=b: a - b)
    return report


# -- the printed 5x5 blocks -------------------------------------------------------------


def _r(q, r=1) -> Radical:
    return Radical(Fraction(q), r)


def _inv_sqrt(n: int, c=1) -> Radical:
    """``c / sqrt(n)``."""
    return Radical(Fraction(c, n), n)


# entry (i, j) -> {z-power: value}; every position not listed is zero.
PRINTED_BLOCKS: dict[str, dict[tuple[int, int], dict[int, Radical]]] = {
    "A+": {(1, 0): {0: _r(1)}, (2, 1): {0: _r(1, 2)}, (3, 2): {0: _r(1, 3)}, (4, 3): {0: _r(1, 4)}},
    "B+": {
        (2, 0): {0: _r(1, 2)},
        (3, 0): {1: _r(-1, 6)}, (3, 1): {0: _r(1, 6)},
        (4, 0): {2: _inv_sqrt(6, 7)}, (4, 1): {1: _r(-2, 6)}, (4, 2): {0: _r(2, 3)},
    },
    "A-": {
        (0, 1): {0: _r(1)},
        (1, 1): {1: _r(1)}, (1, 2): {0: _r(1, 2)},
        (2, 1): {2: _inv_sqrt(2)}, (2, 2): {1: _r(2)}, (2, 3): {0: _r(1, 3)},
        (3, 1): {3: _inv_sqrt(6)}, (3, 2): {2: _r(1, 3)}, (3, 3): {1: _r(3)}, (3, 4): {0: _r(1, 4)},
        (4, 1): {4: _inv_sqrt(24)}, (4, 2): {3: _inv_sqrt(3, 2)}, (4, 3): {2: _r(3)}, (4, 4): {1: _r(4)},
    },
    "B-": {
        (0, 2): {0: _r(1, 2)},
        (1, 2): {1: _r(1, 2)}, (1, 3): {0: _r(1, 6)},
        (2, 2): {2: _r(1)}, (2, 3): {1: _r(2, 3)}, (2, 4): {0: _r(2, 3)},
        (3, 2): {3: _inv_sqrt(3)}, (3, 3): {2: _r(3)}, (3, 4): {1: _r(6)},
        (4, 2): {4: Radical(Fraction(1, 2)) * _inv_sqrt(3)}, (4, 3): {3: _r(2)}, (4, 4): {2: _r(6)},
    },
    "N": {
        (1, 1): {0: _r(1)},
        (2, 1): {1: _inv_sqrt(2)}, (2, 2): {0: _r(2)},
        (3, 1): {2: _inv_sqrt(6)}, (3, 2): {1: _r(1, 3)}, (3, 3): {0: _r(3)},
        (4, 1): {3: _inv_sqrt(24)}, (4, 2): {2: _inv_sqrt(3, 2)}, (4, 3): {1: _r(3)}, (4, 4): {0: _r(4)},
    },
    "M": {(i, i): {0: _r(1)} for i in range(5)},
}


def compare_with_printed_matrices(order: int = 6) -> VerificationReport:
    """Every entry of the printed 5x5 blocks, zeros included, in the normalized basis."""
    rep = VerificationReport("fock-golden")
    for g, block in PRINTED_BLOCKS.items():
        mat = fock_matrix(g, 5, "normalized", order)
        for i in range(5):
            for j in range(5):
                want = block.get((i, j), {})
                got = mat.entry(i, j)
                label = "nonzero" if want else "zero"
                rep.expect(f"<{i}|{g}|{j}> {label}", "printed Fock matrix entry",
                           lambda got=got, want=want: got == want)
    return rep


def format_radical_poly(d: dict[int, Radical]) -> str:
    if not d:
        return "0"
    parts = []
    for k, r in sorted(d.items()):
        zs = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        parts.append(f"{r}" + (f"*{zs}" if zs else ""))
    return " + ".join(parts)
