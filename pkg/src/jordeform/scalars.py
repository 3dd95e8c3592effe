"""Exact scalars: rationals, truncated power series in ``z`` and single radicals.

Rationals are :class:`fractions.Fraction`.  A :class:`ZSeries` is a polynomial
in the deformation parameter ``z`` reduced modulo ``z**(order + 1)``.  A
:class:`Radical` is ``q * sqrt(r)`` with ``r`` squarefree; it only appears in
the normalized Fock-basis presentation layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class OrderMismatchError(ValueError):
    """Two series with different truncation orders were combined."""


class NonUnitError(ArithmeticError):
    """Inversion of a series whose constant term vanishes."""


class ZSeries:
    """Truncated power series ``sum_k c_k z**k`` for ``k <= order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be non-negative")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a ZSeries needs at least one coefficient")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "ZSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "ZSeries":
        return cls((1,), order)

    @classmethod
    def monomial(cls, c: Number, k: int, order: int) -> "ZSeries":
        """``c * z**k``; vanishes when ``k > order``."""
        cs = [Fraction(0)] * (order + 1)
        if k <= order:
            cs[k] = Fraction(c)
        return cls(cs)

    @classmethod
    def from_dict(cls, d: dict[int, Number], order: int) -> "ZSeries":
        cs = [Fraction(0)] * (order + 1)
        for k, c in d.items():
            if k <= order:
                cs[k] += c
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def as_dict(self) -> dict[int, Fraction]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def valuation(self) -> int | None:
        """Lowest power of ``z`` with a nonzero coefficient (None for 0)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def classical(self) -> Fraction:
        """Value at ``z = 0``."""
        return self.coeffs[0]

    def _check(self, other: "ZSeries") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise OrderMismatchError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def _coerce(self, other) -> "ZSeries":
        if isinstance(other, ZSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return ZSeries((other,), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ZSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "ZSeries":
        return ZSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ZSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ZSeries(c * other for c in self.coeffs)
        if not isinstance(other, ZSeries):
            return NotImplemented
        self._check(other)
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return ZSeries(out)

    __rmul__ = __mul__

    def invert(self) -> "ZSeries":
        a0 = self.coeffs[0]
        if not a0:
            raise NonUnitError("constant term is zero; series is not a unit")
        n = len(self.coeffs)
        inv = [Fraction(0)] * n
        inv[0] = 1 / a0
        for k in range(1, n):
            s = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -s / a0
        return ZSeries(inv)

    def __eq__(self, other) -> bool:
        if isinstance(other, ZSeries):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ZSeries({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_series(self.as_dict())


def series_add(a: ZSeries, b: ZSeries) -> ZSeries:
    a._check(b)
    return a + b


def series_mul(a: ZSeries, b: ZSeries) -> ZSeries:
    a._check(b)
    return a * b


def series_invert(a: ZSeries) -> ZSeries:
    return a.invert()


def _zpow(k: int) -> str:
    return "z" if k == 1 else f"z^{k}"


def format_scaled_z(c: Fraction, k: int) -> str:
    """Render ``c*z**k`` compactly: ``-z``, ``2*z^2``, ``-(z/2)``, ``(3*z/4)``."""
    sign = "-" if c < 0 else ""
    c = abs(c)
    if k == 0:
        return f"{sign}{c}"
    num, den = c.numerator, c.denominator
    body = _zpow(k) if num == 1 else f"{num}*{_zpow(k)}"
    if den != 1:
        body = f"({body}/{den})"
    return sign + body


def format_series(d: dict[int, Fraction]) -> str:
    if not d:
        return "0"
    parts = [format_scaled_z(c, k) for k, c in sorted(d.items())]
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# -- radicals -----------------------------------------------------------------


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``n == s*s*r`` and ``r`` squarefree (trial division)."""
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    s, r = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1
    return s, r * n


def is_squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return n >= 1


@dataclass(frozen=True)
class Radical:
    """The real number ``q * sqrt(r)``."""

    q: Fraction
    r: int = 1

    def __post_init__(self):
        q = Fraction(self.q)
        if self.r <= 0:
            raise ValueError("radicand must be positive")
        s, r = squarefree_split(self.r)
        q *= s
        if not q:
            r = 1
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    @classmethod
    def sqrt(cls, x: Number) -> "Radical":
        """``sqrt(x)`` for a non-negative rational ``x``."""
        x = Fraction(x)
        if x < 0:
            raise ValueError("negative argument")
        if not x:
            return cls(Fraction(0), 1)
        # sqrt(a/b) = sqrt(a*b) / b
        return cls(Fraction(1, x.denominator), x.numerator * x.denominator)

    def __mul__(self, other):
        if isinstance(other, Radical):
            return radical_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return Radical(self.q * other, self.r)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "Radical":
        return Radical(-self.q, self.r)

    def squared(self) -> Fraction:
        return self.q * self.q * self.r

    def __bool__(self) -> bool:
        return bool(self.q)

    def __str__(self) -> str:
        if self.r == 1:
            return str(self.q)
        if self.q == 1:
            return f"sqrt({self.r})"
        if self.q == -1:
            return f"-sqrt({self.r})"
        return f"{self.q}*sqrt({self.r})"


def radical_mul(a: Radical, b: Radical) -> Radical:
    return Radical(a.q * b.q, a.r * b.r)


def radical_poly(terms: Sequence[tuple[Number, int, int]]) -> dict[int, Radical]:
    """Build ``{k: q*sqrt(r)}`` from ``(q, r, k)`` triples; handy for golden data."""
    out: dict[int, Radical] = {}
    for q, r, k in terms:
        if k in out:
            raise ValueError(f"duplicate z-power {k}")
        out[k] = Radical(Fraction(q), r)
    return out
