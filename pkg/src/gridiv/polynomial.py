"""Exact univariate polynomials over the rationals.

Coefficients are ``fractions.Fraction`` (always reduced, positive
denominator), stored by ascending power of ``n``. Nothing here ever touches
floating point.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence, Union

from .errors import InputError

Number = Union[int, Fraction]


class Polynomial:
    """Immutable polynomial in one indeterminate ``n``.

    >>> p = Polynomial([-1, 0, 2])   # 2n^2 - 1
    >>> p(3)
    Fraction(17, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, power: int, c: Number = 1) -> "Polynomial":
        return cls([0] * power + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    def __call__(self, n: Number) -> Fraction:
        return poly_eval(self, n)

    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return poly_scale(self, -1)

    def __sub__(self, other):
        return poly_add(self, poly_scale(_coerce(other), -1))

    def __rsub__(self, other):
        return poly_add(_coerce(other), poly_scale(self, -1))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


N = Polynomial([0, 1])


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def poly_scale(p: Polynomial, c: Number) -> Polynomial:
    c = Fraction(c)
    return Polynomial([c * x for x in p.coeffs])


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return Polynomial(out)


def poly_eval(p: Polynomial, n: Number) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * n + c
    return acc


def poly_shift(p: Polynomial) -> Polynomial:
    """The polynomial ``n -> p(n + 1)``, expanded by the binomial theorem."""
    out = [Fraction(0)] * len(p.coeffs)
    for power, c in enumerate(p.coeffs):
        if c:
            for i in range(power + 1):
                out[i] += c * comb(power, i)
    return Polynomial(out)


def difference_transform(p: Polynomial) -> Polynomial:
    """``n * (p(n+1) - p(n))``; same degree as ``p`` unless ``p`` is constant."""
    return poly_mul(N, poly_shift(p) - p)


def _points(points) -> tuple[list[Fraction], list[Fraction]]:
    xs, ys = [], []
    for x, y in points:
        xs.append(Fraction(x))
        ys.append(Fraction(y))
    if len(set(xs)) != len(xs):
        dupes = sorted({x for x in xs if xs.count(x) > 1})
        raise InputError(f"duplicate abscissae: {[str(x) for x in dupes]}")
    return xs, ys


def divided_differences(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """Newton coefficients ``f[x0], f[x0,x1], ...``."""
    table = list(ys)
    coeffs = [table[0]] if table else []
    for level in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        coeffs.append(table[0])
    return coeffs


def interpolate(points) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points`` (Newton form)."""
    xs, ys = _points(points)
    coeffs = divided_differences(xs, ys)
    # Horner on the Newton basis: c0 + (n - x0)(c1 + (n - x1)(c2 + ...))
    acc = Polynomial()
    for i in range(len(coeffs) - 1, -1, -1):
        acc = poly_mul(acc, Polynomial([-xs[i], 1])) + coeffs[i]
    return acc


def interpolate_lagrange(points) -> Polynomial:
    """Same contract as :func:`interpolate`, via the Lagrange basis."""
    xs, ys = _points(points)
    total = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = poly_mul(basis, Polynomial([-xj, 1]))
                denom *= xi - xj
        total = total + poly_scale(basis, yi / denom)
    return total


@lru_cache(maxsize=None)
def bernoulli(j: int) -> Fraction:
    """Bernoulli number with B_1 = -1/2.

    Uses sum_{i=0}^{j} C(j+1, i) B_i = 0 for j >= 1.
    """
    if j < 0:
        raise InputError(f"Bernoulli index must be nonnegative, got {j}")
    if j == 0:
        return Fraction(1)
    if j > 1 and j % 2:
        return Fraction(0)
    return -sum((comb(j + 1, i) * bernoulli(i) for i in range(j)), Fraction(0)) / (j + 1)


def faulhaber(p: int) -> Polynomial:
    """Polynomial in n equal to 1^p + 2^p + ... + n^p."""
    if p < 0:
        raise InputError(f"power must be nonnegative, got {p}")
    coeffs = [Fraction(0)] * (p + 2)
    for j in range(p + 1):
        coeffs[p + 1 - j] += Fraction((-1) ** j * comb(p + 1, j)) * bernoulli(j) / (p + 1)
    return Polynomial(coeffs)


def prefix_sum(p: Polynomial) -> Polynomial:
    """Polynomial equal to sum_{j=1}^{n} p(j), by Faulhaber termwise."""
    total = Polynomial([p.coeffs[0]]) * N if p.coeffs else Polynomial()
    for power, c in enumerate(p.coeffs[1:], start=1):
        if c:
            total = total + faulhaber(power) * c
    return total


# Text form: "2/3*n^4 - 4/3*n^3 + 11/6*n^2 - 13/6*n + 1"

def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_text(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if not c:
            continue
        if power == 0:
            term = _frac_text(abs(c))
        elif power == 1:
            term = f"{_frac_text(abs(c))}*n"
        else:
            term = f"{_frac_text(abs(c))}*n^{power}"
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


_TERM = re.compile(r"^(?P<coef>\d+(?:/\d+)?)?(?:\*?(?P<n>n)(?:\^(?P<pow>\d+))?)?$")


def from_text(text: str) -> Polynomial:
    s = text.replace(" ", "")
    if not s:
        raise InputError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, Fraction] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(body)
        if not body or not m or (m.group("coef") is None and m.group("n") is None):
            raise InputError(f"cannot parse term {body!r} in {text!r}")
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        power = 0 if m.group("n") is None else int(m.group("pow") or 1)
        coeffs[power] = coeffs.get(power, Fraction(0)) + (c if sign == "+" else -c)
    if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
        raise InputError(f"cannot parse polynomial {text!r}")
    size = max(coeffs) + 1
    return Polynomial([coeffs.get(i, 0) for i in range(size)])


def to_json(p: Polynomial) -> list[list[int]]:
    return [[c.numerator, c.denominator] for c in p.coeffs]


def from_json(data) -> Polynomial:
    try:
        return Polynomial([Fraction(int(num), int(den)) for num, den in data])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad polynomial JSON {data!r}: {exc}") from None
