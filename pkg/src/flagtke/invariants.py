"""Existence, curvature and volume invariants of flag varieties.

All quantities are functions of a parabolic datum plus rational class
coordinates on the complement nodes, and all are computed exactly:

* twisted Einstein existence and the solved metric class;
* the greatest Ricci lower bound (an exact minimum of ratios);
* volumes by the product-over-radical-roots formula, plus a second,
  algebraically independent route used as a cross check;
* trace and scalar curvature of invariant classes;
* the two-sided degree bound combining all of the above.

Unit convention (shared with `flag`): class coordinates absorb the
customary 2*pi factor, so the anticanonical class IS the vector of
koszul numbers and the twisted existence test is a plain coordinate
comparison.  Twists may be any rationals, including negative ones;
Kahler classes must be strictly positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .flag import CohomologyClass, KahlerClass, ParabolicData, degree
from .rootsys import Rational

__all__ = [
    "CohomologyClass",
    "KahlerClass",
    "TkeResult",
    "TwistedSolution",
    "GrlbReport",
    "VolumeBoundReport",
    "tke_exists",
    "tke_solve_from_kahler",
    "grlb",
    "grlb_report",
    "volume_class",
    "volume_cross_check",
    "trace",
    "scalar_curvature",
    "volume_bound_report",
]

ClassLike = Union[CohomologyClass, Sequence[Rational]]


def _as_class(p: ParabolicData, values: ClassLike, what: str) -> CohomologyClass:
    if isinstance(values, KahlerClass):
        cls = CohomologyClass(values.coords)
    elif isinstance(values, CohomologyClass):
        cls = values
    else:
        cls = CohomologyClass.of(values)
    if len(cls.coords) != p.picard_rank:
        raise ValueError(
            f"{what} has {len(cls.coords)} coordinates but {p.describe()} "
            f"has Picard rank {p.picard_rank}"
        )
    return cls


def _as_kahler(p: ParabolicData, values: ClassLike, what: str) -> KahlerClass:
    cls = _as_class(p, values, what)
    if any(c <= 0 for c in cls.coords):
        raise ValueError(f"{what} must have strictly positive coordinates, got {cls}")
    return KahlerClass(cls.coords)


@dataclass(frozen=True)
class TkeResult:
    """Verdict of the twisted Einstein existence test.

    ``margins`` maps each complement node to koszul minus the twist
    coordinate there; existence is equivalent to all margins positive,
    and then the metric class is exactly the margin vector.
    """

    exists: bool
    metric: Optional[KahlerClass]
    margins: dict[int, Fraction]


@dataclass(frozen=True)
class TwistedSolution:
    """Solved pair: Ricci of omega equals omega plus beta."""

    omega: KahlerClass
    beta: CohomologyClass


@dataclass(frozen=True)
class GrlbReport:
    """Greatest Ricci lower bound plus the nodes attaining the minimum."""

    value: Fraction
    argmin: tuple[int, ...]


@dataclass(frozen=True)
class VolumeBoundReport:
    """Both sides of r^n * Vol <= degree <= (n+1)^n, exactly evaluated."""

    r_pow_vol: Fraction
    degree: int
    snow: int
    left_ok: bool
    right_ok: bool
    left_equality: bool
    right_equality: bool


def tke_exists(p: ParabolicData, beta: ClassLike) -> TkeResult:
    """Decide solvability of Ric(omega) = omega + beta in invariant classes.

    Solvable iff every twist coordinate is strictly below the koszul
    number at its node; the solution class is then koszul - beta.
    """
    b = _as_class(p, beta, "twist class")
    margins = {
        idx: Fraction(k) - c
        for idx, k, c in zip(p.complement, p.koszul, b.coords, strict=True)
    }
    ok = all(m > 0 for m in margins.values())
    metric = KahlerClass.of(margins[idx] for idx in p.complement) if ok else None
    return TkeResult(exists=ok, metric=metric, margins=margins)


def tke_solve_from_kahler(p: ParabolicData, xi: ClassLike) -> TwistedSolution:
    """Produce the twist that makes xi the twisted Einstein class.

    For any positive xi the pair (omega, beta) = (xi, koszul - xi)
    solves Ric(omega) = omega + beta; this never fails on valid input.
    """
    x = _as_kahler(p, xi, "Kahler class")
    beta = CohomologyClass.of(
        Fraction(k) - c for k, c in zip(p.koszul, x.coords, strict=True)
    )
    return TwistedSolution(omega=x, beta=beta)


def grlb_report(p: ParabolicData, xi: ClassLike) -> GrlbReport:
    """Greatest Ricci lower bound with its full argmin set (no tie break)."""
    x = _as_kahler(p, xi, "Kahler class")
    ratios = {
        idx: Fraction(k) / c
        for idx, k, c in zip(p.complement, p.koszul, x.coords, strict=True)
    }
    value = min(ratios.values())
    argmin = tuple(idx for idx in p.complement if ratios[idx] == value)
    return GrlbReport(value=value, argmin=argmin)


def grlb(p: ParabolicData, xi: ClassLike) -> Fraction:
    """min over complement nodes of koszul / xi coordinate, exact."""
    return grlb_report(p, xi).value


def volume_class(p: ParabolicData, xi: ClassLike) -> Fraction:
    """Volume of the class xi, normalized so the anticanonical volume
    equals the anticanonical degree: degree * prod over radical roots of
    <xi, coroot(g)> / <delta_P, coroot(g)>.
    """
    x = _as_kahler(p, xi, "Kahler class")
    val = Fraction(degree(p))
    for xv, dv in zip(p.radical_pairings(x), p._delta_pairings, strict=True):
        val *= xv / dv
    return val


def volume_cross_check(p: ParabolicData, xi: ClassLike) -> Fraction:
    """Second volume route: n! * prod of <xi, coroot(g)> / <rho, coroot(g)>.

    Algebraically equal to volume_class, but evaluated without ever
    touching the degree or delta_P, so the two routes check each other.
    """
    x = _as_kahler(p, xi, "Kahler class")
    val = Fraction(math.factorial(p.dim))
    for xv, rv in zip(p.radical_pairings(x), p._rho_pairings, strict=True):
        val *= xv / rv
    return val


def trace(p: ParabolicData, omega: ClassLike, beta: ClassLike) -> Fraction:
    """Trace of the class beta against the metric class omega.

    An invariant class with weight lambda acts on the root line of a
    radical root g with eigenvalue <lambda, coroot(g)>, so the trace is
    the sum over radical roots of the beta/omega eigenvalue ratios.
    """
    w = _as_kahler(p, omega, "metric class")
    b = _as_class(p, beta, "traced class")
    return sum(
        (bv / wv for bv, wv in zip(p.radical_pairings(b), p.radical_pairings(w), strict=True)),
        start=Fraction(0),
    )


def scalar_curvature(p: ParabolicData, omega: ClassLike) -> Fraction:
    """Scalar curvature of the invariant metric in the class omega:
    the trace of the anticanonical class against omega.  Constant, and
    equal to dim when omega is the anticanonical class itself.
    """
    return trace(p, omega, CohomologyClass.of(p.koszul))


def volume_bound_report(p: ParabolicData, xi: ClassLike) -> VolumeBoundReport:
    """Evaluate grlb(xi)^n * Vol(xi) <= degree <= (n+1)^n exactly.

    Both inequalities hold for every flag variety and every positive xi;
    the left one is an equality precisely when xi is proportional to the
    anticanonical class, the right one precisely for projective space.
    """
    x = _as_kahler(p, xi, "Kahler class")
    n = p.dim
    r = grlb(p, x)
    vol = volume_class(p, x)
    rv = r**n * vol
    d = degree(p)
    snow = (n + 1) ** n
    return VolumeBoundReport(
        r_pow_vol=rv,
        degree=d,
        snow=snow,
        left_ok=rv <= d,
        right_ok=d <= snow,
        left_equality=rv == d,
        right_equality=d == snow,
    )
