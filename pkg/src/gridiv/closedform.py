"""Fit and verify closed-form polynomials for d_k(n) and s_k(n).

Values come from the recursion engine; a polynomial of the known degree is
interpolated through the first few of them, spot-checked against further
values, and then checked as an exact polynomial identity against both
recursions. Since both sides of an identity are polynomials, coefficient
equality is the whole inductive step; the fitted values at n = 1 serve as
the base case.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import recurrence
from .errors import FittingError, InputError
from .polynomial import Polynomial, interpolate, poly_shift, prefix_sum, to_json, to_text

SPOT_CHECKS = 10

ZERO = Polynomial()


@dataclass
class FittedFamily:
    k: int
    d_poly: Polynomial
    s_poly: Polynomial
    verified: dict[str, bool] = field(
        default_factory=lambda: {"recursion_identity": False, "degree": False, "spot_values": False}
    )

    @property
    def leading_coefficient(self) -> Fraction:
        return self.d_poly.leading_coefficient

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "d": to_json(self.d_poly),
            "s": to_json(self.s_poly),
            "d_text": to_text(self.d_poly),
            "s_text": to_text(self.s_poly),
            "degrees": {"d": self.d_poly.degree, "s": self.s_poly.degree},
            "verified": dict(self.verified),
            "leading_coefficient": [self.leading_coefficient.numerator, self.leading_coefficient.denominator],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _zero_family(k: int) -> FittedFamily:
    return FittedFamily(k, ZERO, ZERO, {"recursion_identity": True, "degree": True, "spot_values": True})


def expected_degrees(k: int) -> tuple[int, int]:
    """``(deg d_k, deg s_k)``; s_1 is the zero polynomial (degree -1)."""
    if k == 1:
        return 0, -1
    return 2 * k - 2, 2 * k - 3


def fit_values(values: dict[int, int], n_points: int) -> Polynomial:
    """Interpolate through ``values`` at n = 1..n_points."""
    if n_points < 1:
        return ZERO
    return interpolate([(n, values[n]) for n in range(1, n_points + 1)])


def spot_check(name: str, poly: Polynomial, values: dict[int, int], ns) -> None:
    for n in ns:
        if poly(n) != values[n]:
            raise FittingError(f"{name}({n}) = {values[n]} but fitted polynomial gives {poly(n)}", n=n)


def fit_family(k: int, *, d_points: Optional[int] = None, s_points: Optional[int] = None,
               spot_checks: int = SPOT_CHECKS) -> FittedFamily:
    """Interpolate d_k from 2k-1 values and s_k from 2k-2, then check them.

    Spot values are n = 2k .. 2k+spot_checks-1. Point counts can be
    overridden to probe how tight the degree bound is.
    """
    if not isinstance(k, int) or k < 1:
        raise InputError(f"k must be a positive integer, got {k!r}")
    d_deg, s_deg = expected_degrees(k)
    d_points = d_deg + 1 if d_points is None else d_points
    s_points = s_deg + 1 if s_points is None else s_points
    first_spot = max(2 * k, d_points + 1, s_points + 1)
    n_max = first_spot + spot_checks - 1
    dt, st = recurrence.tables(k, n_max)
    d_vals = {n: dt(k, n) for n in range(1, n_max + 1)}
    s_vals = {n: st(k, n) for n in range(1, n_max + 1)}

    d_poly = fit_values(d_vals, d_points)
    s_poly = fit_values(s_vals, s_points)
    spots = range(first_spot, n_max + 1)
    spot_check(f"d_{k}", d_poly, d_vals, spots)
    spot_check(f"s_{k}", s_poly, s_vals, spots)
    if d_poly.degree != d_deg:
        raise FittingError(f"d_{k} fitted with degree {d_poly.degree}, expected {d_deg}")
    if s_poly.degree != s_deg:
        raise FittingError(f"s_{k} fitted with degree {s_poly.degree}, expected {s_deg}")
    return FittedFamily(k, d_poly, s_poly, {"recursion_identity": False, "degree": True, "spot_values": True})


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of a symbolic recursion check; truthy when both identities hold."""

    ok: bool
    identity: Optional[str] = None
    power: Optional[int] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None

    def __bool__(self):
        return self.ok


def recursion_residuals(f2: FittedFamily, f1: FittedFamily, f: FittedFamily) -> tuple[Polynomial, Polynomial]:
    """``shift(d) - rhs_d`` and ``shift(s) - rhs_s``; both zero when the family is right."""
    rhs_d = f2.d_poly + 3 * f1.d_poly + f.d_poly + 2 * f.s_poly
    rhs_s = f2.d_poly + 2 * f1.d_poly + f.s_poly
    return poly_shift(f.d_poly) - rhs_d, poly_shift(f.s_poly) - rhs_s


def verify_recursion_identity(f2: FittedFamily, f1: FittedFamily, f: FittedFamily, *,
                              base: bool = True) -> IdentityCheck:
    """Check both recursions coefficient-wise, plus the n = 1 values.

    A constant added to d_k cancels out of ``shift(d) - d``, so the identities
    alone cannot see it; the base check (on by default) closes that gap. A
    base failure is reported with ``identity="base"`` and ``power=None``.
    """
    if base and f.k >= 1:
        d1, s1 = recurrence.base_vector()
        for poly, want in ((f.d_poly, d1.get(f.k, 0)), (f.s_poly, s1.get(f.k, 0))):
            if poly(1) != want:
                return IdentityCheck(False, "base", None, poly(1), Fraction(want))
    rhs_d = f2.d_poly + 3 * f1.d_poly + f.d_poly + 2 * f.s_poly
    rhs_s = f2.d_poly + 2 * f1.d_poly + f.s_poly
    for name, lhs, rhs in (("d", poly_shift(f.d_poly), rhs_d), ("s", poly_shift(f.s_poly), rhs_s)):
        if lhs != rhs:
            size = max(len(lhs.coeffs), len(rhs.coeffs))
            for power in range(size):
                a = lhs.coeffs[power] if power < len(lhs.coeffs) else Fraction(0)
                b = rhs.coeffs[power] if power < len(rhs.coeffs) else Fraction(0)
                if a != b:
                    return IdentityCheck(False, name, power, a, b)
    return IdentityCheck(True)


def fit_families(k_max: int, **kwargs) -> list[FittedFamily]:
    """Families 1..k_max in strong-induction order, each recursion-verified."""
    if k_max < 1:
        raise InputError(f"k_max must be >= 1, got {k_max}")
    fams = {-1: _zero_family(-1), 0: _zero_family(0)}
    for k in range(1, k_max + 1):
        fam = fit_family(k, **kwargs)
        check = verify_recursion_identity(fams[k - 2], fams[k - 1], fam)
        if not check:
            raise FittingError(
                f"k={k}: {check.identity}-recursion fails at n^{check.power}: {check.lhs} != {check.rhs}"
            )
        fam.verified["recursion_identity"] = True
        fams[k] = fam
    return [fams[k] for k in range(1, k_max + 1)]


def extend_families(k_max: int) -> list[FittedFamily]:
    """Verified families for k = 6..k_max."""
    if k_max < 6:
        raise InputError(f"k_max must be >= 6, got {k_max}")
    return fit_families(k_max)[5:]


@dataclass
class SummationReport:
    k: int
    n_max: int
    mismatches: list[tuple[int, str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __bool__(self):
        return self.ok


def summation_check(k: int, n_max: int = 20) -> SummationReport:
    """Compare table values with the telescoped sums starting at j = 1.

    s_k(n) = sum_{j<n} d_{k-2}(j) + 2 d_{k-1}(j)
    d_k(n) = sum_{j<n} d_{k-2}(j) + 3 d_{k-1}(j) + 2 s_k(j)

    Each mismatch is ``(n, "s" | "d", table_value, sum_value)``. Telescoping
    down to n = 1 leaves s_k(1) and d_k(1) over, so the sums are short by
    exactly those base values whenever they are nonzero (k = 1, 2).
    """
    dt, st = recurrence.tables(k, n_max)
    report = SummationReport(k, n_max)
    s_acc = d_acc = 0
    for n in range(2, n_max + 1):
        j = n - 1
        s_acc += dt(k - 2, j) + 2 * dt(k - 1, j)
        d_acc += dt(k - 2, j) + 3 * dt(k - 1, j) + 2 * st(k, j)
        if st(k, n) != s_acc:
            report.mismatches.append((n, "s", st(k, n), s_acc))
        if dt(k, n) != d_acc:
            report.mismatches.append((n, "d", dt(k, n), d_acc))
    return report


def summation_polynomials(f2: FittedFamily, f1: FittedFamily, f: FittedFamily) -> tuple[Polynomial, Polynomial]:
    """Closed forms of the two telescoped sums, built with Faulhaber's formula.

    Returns polynomials in n equal to the sums over j = 1..n-1; adding the
    n = 1 base values recovers s_k and d_k.
    """
    s_summand = f2.d_poly + 2 * f1.d_poly
    d_summand = f2.d_poly + 3 * f1.d_poly + 2 * f.s_poly
    minus_one = Polynomial([-1, 1])
    return _compose(prefix_sum(s_summand), minus_one), _compose(prefix_sum(d_summand), minus_one)


def _compose(p: Polynomial, q: Polynomial) -> Polynomial:
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return acc


def leading_coefficient_report(k_max: int) -> list[tuple[int, Fraction]]:
    return [(f.k, f.leading_coefficient) for f in fit_families(k_max)]


def monotone_steps(report: list[tuple[int, Fraction]]) -> list[tuple[int, bool]]:
    """``(k, lead_k < lead_{k-1})`` for consecutive entries; observed, not proven."""
    return [(k, c < prev) for (_, prev), (k, c) in zip(report, report[1:])]


def markdown_table(families: list[FittedFamily]) -> str:
    lines = ["| k | s_k(n) | d_k(n) |", "|---|---|---|"]
    for f in families:
        lines.append(f"| {f.k} | {to_text(f.s_poly)} | {to_text(f.d_poly)} |")
    return "\n".join(lines) + "\n"
