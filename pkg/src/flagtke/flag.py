"""Parabolic quotients of simple groups and their anticanonical geometry.

A flag variety here is a pair (simple type, theta), where theta is the
set of simple roots generating the Levi part of a parabolic subgroup.
Its complement indexes the Picard group.  From that combinatorial seed
we compute, exactly:

* the radical roots (positive roots outside the Levi span), whose count
  is the complex dimension;
* the anticanonical class, recorded through its pairings with the simple
  coroots of the complement ("koszul numbers");
* the anticanonical degree, via the classical product formula over the
  radical roots, with integrality enforced rather than assumed.

All classes live in the Picard basis dual to the complement coroots and
are stored in units that already absorb the customary 2*pi factor; see
the CLI for the display-only "raw" toggle.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .rootsys import LieType, Rational, Root, RootSystem, Weight, build_root_system

__all__ = [
    "CohomologyClass",
    "KahlerClass",
    "ParabolicData",
    "SnowCheck",
    "FlagReport",
    "parabolic",
    "degree",
    "snow_check",
    "anticanonical_class",
    "flag_report",
]


@dataclass(frozen=True)
class CohomologyClass:
    """A degree-2 class, as rational coordinates on the Picard basis.

    Coordinates are listed against the ascending complement indices of
    the parabolic they belong to.  No positivity is implied.
    """

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Rational]) -> "CohomologyClass":
        return cls(tuple(Fraction(v) for v in values))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class KahlerClass(CohomologyClass):
    """A cohomology class with strictly positive coordinates."""

    def __post_init__(self) -> None:
        if any(c <= 0 for c in self.coords):
            raise ValueError(f"Kahler class needs positive coordinates, got {self}")


@dataclass(frozen=True)
class ParabolicData:
    """Root-theoretic data of one parabolic quotient G/P.

    The trailing private fields are per-radical-root caches derived from
    the public ones (coroot pairing forms restricted to the complement,
    plus the pairings of delta_p and of the Weyl vector); they exist so
    that the volume and trace product formulas of downstream modules are
    small dot products instead of repeated root-system lookups.
    """

    rs: RootSystem
    theta: tuple[int, ...]
    complement: tuple[int, ...]
    levi_roots: tuple[Root, ...]
    radical_roots: tuple[Root, ...]
    delta_p: Root
    koszul: tuple[int, ...]
    _complement_forms: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    _delta_pairings: tuple[Fraction, ...] = field(repr=False)
    _rho_pairings: tuple[Fraction, ...] = field(repr=False)

    @property
    def lie_type(self) -> LieType:
        return self.rs.lie_type

    @property
    def dim(self) -> int:
        """Complex dimension = number of radical roots."""
        return len(self.radical_roots)

    @property
    def picard_rank(self) -> int:
        return len(self.complement)

    def class_weight(self, cls: CohomologyClass) -> Weight:
        """Embed Picard coordinates as a weight supported on the complement."""
        if len(cls.coords) != self.picard_rank:
            raise ValueError(
                f"class has {len(cls.coords)} coordinates, "
                f"complement has {self.picard_rank}"
            )
        coords = [Fraction(0)] * self.rs.rank
        for i, c in zip(self.complement, cls.coords, strict=True):
            coords[i - 1] = c
        return Weight(tuple(coords))

    def radical_pairings(self, cls: CohomologyClass) -> tuple[Fraction, ...]:
        """Pairing of a Picard class with every radical coroot, in order."""
        if len(cls.coords) != self.picard_rank:
            raise ValueError(
                f"class has {len(cls.coords)} coordinates, "
                f"complement has {self.picard_rank}"
            )
        return tuple(
            sum(
                (c * v for c, v in zip(cls.coords, row, strict=True)),
                start=Fraction(0),
            )
            for row in self._complement_forms
        )

    def describe(self) -> str:
        th = ",".join(str(i) for i in self.theta) or "-"
        co = ",".join(str(i) for i in self.complement)
        return f"{self.lie_type}/P(theta={{{th}}}, complement={{{co}}})"


def _normalize_indices(rs: RootSystem, indices: Iterable[int], what: str) -> tuple[int, ...]:
    out = sorted(set(int(i) for i in indices))
    for i in out:
        if not 1 <= i <= rs.rank:
            raise ValueError(
                f"{what} index {i} out of range 1..{rs.rank} for {rs.lie_type}"
            )
    return tuple(out)


def parabolic(
    lie_type: LieType | str,
    theta: Iterable[int] | None = None,
    *,
    complement: Iterable[int] | None = None,
) -> ParabolicData:
    """Build parabolic data from a Levi set theta (or its complement).

    Exactly one of theta / complement may be given; theta=() is the full
    flag variety (Borel case).  theta equal to the whole simple set is
    rejected: the quotient would be a point, not a flag variety.
    """
    rs = build_root_system(lie_type)
    if complement is not None:
        if theta is not None:
            raise ValueError("give either theta or complement, not both")
        comp = _normalize_indices(rs, complement, "complement")
        th = tuple(i for i in range(1, rs.rank + 1) if i not in comp)
    else:
        th = _normalize_indices(rs, theta if theta is not None else (), "theta")
        comp = tuple(i for i in range(1, rs.rank + 1) if i not in th)
    if not comp:
        raise ValueError(
            f"theta covers every simple root of {rs.lie_type}: "
            "the quotient is a point, not a flag variety"
        )

    theta_set = frozenset(th)
    levi = tuple(g for g in rs.positive_roots if g.support() <= theta_set)
    radical = tuple(g for g in rs.positive_roots if not (g.support() <= theta_set))

    delta = [0] * rs.rank
    for g in radical:
        for k, c in enumerate(g.coeffs):
            delta[k] += c
    delta_p = Root(tuple(delta))
    dw = rs.root_to_weight(delta_p)

    # Anticanonical pairings: integral everywhere, zero exactly on theta,
    # strictly positive on the complement.  Cheap sanity net over every
    # construction path, so enforced here rather than in tests only.
    koszul: list[int] = []
    for i in range(1, rs.rank + 1):
        v = dw.coords[i - 1]
        if v.denominator != 1:
            raise RuntimeError(
                f"non-integral anticanonical pairing at node {i} of {rs.lie_type}"
            )
        n = int(v)
        if i in theta_set:
            if n != 0:
                raise RuntimeError(
                    f"anticanonical pairing at Levi node {i} is {n}, expected 0"
                )
        else:
            if n <= 0:
                raise RuntimeError(
                    f"anticanonical pairing at complement node {i} is {n}, expected > 0"
                )
            koszul.append(n)

    koszul_t = tuple(koszul)
    forms = tuple(rs.coroot_pairing_form(g) for g in radical)
    comp_forms = tuple(tuple(f[i - 1] for i in comp) for f in forms)
    delta_pairings = tuple(
        sum((k * v for k, v in zip(koszul_t, row, strict=True)), start=Fraction(0))
        for row in comp_forms
    )
    rho_pairings = tuple(sum(f, start=Fraction(0)) for f in forms)

    return ParabolicData(
        rs=rs,
        theta=th,
        complement=comp,
        levi_roots=levi,
        radical_roots=radical,
        delta_p=delta_p,
        koszul=koszul_t,
        _complement_forms=comp_forms,
        _delta_pairings=delta_pairings,
        _rho_pairings=rho_pairings,
    )


@functools.lru_cache(maxsize=None)
def _degree_cached(lie_type: LieType, theta: tuple[int, ...]) -> int:
    p = parabolic(lie_type, theta)
    val = Fraction(math.factorial(p.dim))
    for dv, rv in zip(p._delta_pairings, p._rho_pairings, strict=True):
        val *= dv / rv
    if val.denominator != 1 or val <= 0:
        raise RuntimeError(
            f"anticanonical degree of {p.describe()} is {val}, not a positive integer"
        )
    return int(val)


def degree(p: ParabolicData) -> int:
    """Anticanonical degree: dim! * prod over radical roots of
    <delta_P, coroot(g)> / <rho, coroot(g)>.  Always a positive integer.
    """
    return _degree_cached(p.lie_type, p.theta)


@dataclass(frozen=True)
class SnowCheck:
    """Outcome of the degree upper bound against (dim+1)**dim."""

    degree: int
    bound: int
    ok: bool
    equality: bool


def snow_check(p: ParabolicData) -> SnowCheck:
    """Compare the anticanonical degree with (n+1)^n, n = dim.

    The bound holds for every flag variety, with equality exactly for
    projective space itself.
    """
    d = degree(p)
    n = p.dim
    bound = (n + 1) ** n
    return SnowCheck(degree=d, bound=bound, ok=d <= bound, equality=d == bound)


def anticanonical_class(p: ParabolicData) -> KahlerClass:
    """The anticanonical class in Picard coordinates (the koszul numbers)."""
    return KahlerClass.of(p.koszul)


@dataclass(frozen=True)
class FlagReport:
    """Bundled summary used by the CLI `flag` command."""

    parabolic: ParabolicData
    dim: int
    picard_rank: int
    koszul: tuple[int, ...]
    degree: int
    snow: SnowCheck


def flag_report(p: ParabolicData) -> FlagReport:
    return FlagReport(
        parabolic=p,
        dim=p.dim,
        picard_rank=p.picard_rank,
        koszul=p.koszul,
        degree=degree(p),
        snow=snow_check(p),
    )
