"""Exact root-system combinatorics for the simple complex Lie algebras.

Everything downstream (parabolic data, anticanonical classes, volumes)
reduces to integer linear algebra on root coordinates, so this module is
deliberately dependency-free and exact: integers for roots,
`fractions.Fraction` for weights and pairings, no floating point.

Conventions, fixed once here and relied on everywhere else:

* Simple roots carry Bourbaki numbering for every series: A_m is the
  chain 1..m; B_m has its unique short root last; C_m its unique long
  root last; D_m forks at the nodes m-1, m (both attached to m-2); the
  E-series branch node is 2, attached to node 4, with the long chain
  1-3-4-5-6(-7-8); F4 is 1-2=>3-4 (3, 4 short); G2 has alpha_1 short.
* ``cartan[i][j]`` is <alpha_i, coroot(alpha_j)>.  Rows therefore give
  the weight coordinates of a simple root (see ``root_to_weight``) and
  columns pair against a fixed simple coroot.
* Roots are integer vectors in simple-root coordinates; weights are
  rational vectors in fundamental-weight coordinates.
* The symmetrizer ``d`` makes ``d[j] * cartan[i][j]`` symmetric, i.e.
  d[j] is proportional to half the squared length of alpha_j.  Every
  pairing is a ratio, so any positive rescaling of d gives identical
  results (tested).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "LieType",
    "Root",
    "Weight",
    "RootSystem",
    "build_root_system",
    "coroot_form",
]

# Valid rank window per series; None means unbounded above.
_RANK_RULES: dict[str, tuple[int, int | None]] = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

Rational = Union[Fraction, int, str]


@dataclass(frozen=True, order=True)
class LieType:
    """A simple series letter plus a rank, e.g. ``LieType("D", 5)``."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        rule = _RANK_RULES.get(self.series)
        if rule is None:
            raise ValueError(
                f"unknown series {self.series!r}: expected one of A, B, C, D, E, F, G"
            )
        lo, hi = rule
        if self.rank < lo or (hi is not None and self.rank > hi):
            top = "unbounded" if hi is None else str(hi)
            raise ValueError(
                f"series {self.series} requires rank in [{lo}, {top}], got {self.rank}"
            )

    @classmethod
    def parse(cls, token: str) -> "LieType":
        """Parse a compact token such as ``"D5"`` or ``"e7"``."""
        token = token.strip()
        if len(token) < 2:
            raise ValueError(f"malformed type token {token!r}: expected e.g. 'D5'")
        series, tail = token[0].upper(), token[1:]
        try:
            rank = int(tail)
        except ValueError:
            raise ValueError(
                f"malformed type token {token!r}: rank part {tail!r} is not an integer"
            ) from None
        return cls(series, rank)

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True, order=True)
class Root:
    """A root (or integer root combination) in simple-root coordinates."""

    coeffs: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def support(self) -> frozenset[int]:
        """1-based indices of the simple roots appearing in this root."""
        return frozenset(i + 1 for i, c in enumerate(self.coeffs) if c != 0)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class Weight:
    """A weight in fundamental-weight coordinates (exact rationals)."""

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Rational]) -> "Weight":
        return cls(tuple(Fraction(v) for v in values))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def scale(self, t: Rational) -> "Weight":
        t = Fraction(t)
        return Weight(tuple(t * a for a in self.coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _cartan_matrix(t: LieType) -> list[list[int]]:
    """Cartan matrix in Bourbaki numbering, entry [i][j] = <a_i, a_j^v>."""
    m = t.rank
    a = [[2 if i == j else 0 for j in range(m)] for i in range(m)]

    def bond(i: int, j: int) -> None:
        # single bond between 1-based nodes i and j
        a[i - 1][j - 1] = -1
        a[j - 1][i - 1] = -1

    if t.series in ("A", "B", "C"):
        for i in range(1, m):
            bond(i, i + 1)
        if t.series == "B":
            a[m - 2][m - 1] = -2  # last root short
        elif t.series == "C":
            a[m - 1][m - 2] = -2  # last root long
    elif t.series == "D":
        for i in range(1, m - 1):
            bond(i, i + 1)
        bond(m - 2, m)
    elif t.series == "E":
        for i, j in ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)):
            if j <= m:
                bond(i, j)
        bond(2, 4)
    elif t.series == "F":
        for i in range(1, 4):
            bond(i, i + 1)
        a[1][2] = -2  # arrow 2 => 3; roots 3, 4 short
    elif t.series == "G":
        bond(1, 2)
        a[1][0] = -3  # alpha_1 short
    return a


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Positive d with d[j]*a[i][j] symmetric, found by edge propagation."""
    m = len(cartan)
    d: list[Fraction | None] = [None] * m
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(m):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                stack.append(j)
    if any(v is None or v <= 0 for v in d):
        raise RuntimeError("Dynkin diagram is not connected; cannot symmetrize")
    return tuple(v for v in d if v is not None)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> tuple[Root, ...]:
    """All positive roots, by reflection closure from the simple roots.

    The orbit of the simple roots under the simple reflections is the
    whole (finite) root set; positives are the sign-definite nonnegative
    vectors.  Sorted by (height, coefficients) for reproducible output.
    """
    m = len(cartan)
    simples = [tuple(int(k == i) for k in range(m)) for i in range(m)]
    seen: set[tuple[int, ...]] = set(simples)
    frontier: list[tuple[int, ...]] = list(simples)
    while frontier:
        nxt: list[tuple[int, ...]] = []
        for c in frontier:
            pair = [sum(c[j] * cartan[j][i] for j in range(m)) for i in range(m)]
            for i in range(m):
                img = list(c)
                img[i] -= pair[i]
                t = tuple(img)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    positives = []
    for c in seen:
        if all(v >= 0 for v in c):
            positives.append(Root(c))
        elif not all(v <= 0 for v in c):
            raise RuntimeError(f"mixed-sign root {c}: Cartan matrix is inconsistent")
    positives.sort(key=lambda r: (r.height, r.coeffs))
    return tuple(positives)


def coroot_form(
    cartan: Sequence[Sequence[int]],
    symmetrizer: Sequence[Fraction],
    coeffs: Sequence[int],
) -> tuple[Fraction, ...]:
    """Linear form v with <lam, coroot(gamma)> = sum_i lam_i * v_i.

    gamma is given by simple-root coefficients; lam by fundamental-weight
    coordinates.  v_i = 2 c_i d_i / (gamma, gamma), with the inner product
    taken through the symmetrizer d, so the form is invariant under any
    positive rescaling of d.
    """
    m = len(cartan)
    den = Fraction(0)
    for i in range(m):
        w_i = sum(coeffs[j] * cartan[j][i] for j in range(m))
        den += w_i * coeffs[i] * symmetrizer[i]
    if den == 0:
        raise ValueError(f"zero-length vector {tuple(coeffs)} has no coroot")
    return tuple(2 * coeffs[i] * symmetrizer[i] / den for i in range(m))


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data for one simple type."""

    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    positive_roots: tuple[Root, ...]
    _positive_set: frozenset[tuple[int, ...]] = field(repr=False)
    # coeff tuple of a positive root -> its coroot pairing form
    _coroot_forms: dict[tuple[int, ...], tuple[Fraction, ...]] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def simple_root(self, i: int) -> Root:
        """The simple root alpha_i (1-based)."""
        self._check_index(i)
        return Root(tuple(int(k == i - 1) for k in range(self.rank)))

    def fundamental_weight(self, i: int) -> Weight:
        """The fundamental weight w_i (1-based)."""
        self._check_index(i)
        return Weight(tuple(Fraction(int(k == i - 1)) for k in range(self.rank)))

    def is_root(self, gamma: Root) -> bool:
        c = gamma.coeffs
        return c in self._positive_set or tuple(-v for v in c) in self._positive_set

    def coroot_pairing_form(self, gamma: Root) -> tuple[Fraction, ...]:
        """Linear form v with pairing(lam, gamma) = sum_i lam.coords[i]*v[i].

        Precomputed for every root; negative roots get the negated form.
        """
        form = self._coroot_forms.get(gamma.coeffs)
        if form is not None:
            return form
        neg = self._coroot_forms.get(tuple(-c for c in gamma.coeffs))
        if neg is not None:
            return tuple(-v for v in neg)
        raise ValueError(f"{gamma} is not a root of {self.lie_type}")

    def pairing(self, lam: Weight, gamma: Root) -> Fraction:
        """<lam, coroot(gamma)> = 2(lam, gamma)/(gamma, gamma), exact.

        gamma must be an actual (positive or negative) root; the inner
        products are evaluated through the symmetrizer, so the value does
        not depend on its overall scale.
        """
        form = self.coroot_pairing_form(gamma)
        return sum(
            (l * v for l, v in zip(lam.coords, form, strict=True)),
            start=Fraction(0),
        )

    def _to_weight_coords(self, coeffs: Sequence[int]) -> tuple[Fraction, ...]:
        a = self.cartan
        m = self.rank
        return tuple(
            Fraction(sum(coeffs[j] * a[j][i] for j in range(m))) for i in range(m)
        )

    def root_to_weight(self, gamma: Root | Sequence[int]) -> Weight:
        """Rewrite simple-root coordinates in the fundamental-weight basis.

        Linear, so any integer combination of roots (e.g. a root sum) is
        accepted, not just roots.
        """
        coeffs = gamma.coeffs if isinstance(gamma, Root) else tuple(gamma)
        return Weight(self._to_weight_coords(coeffs))

    def weyl_vector(self) -> Weight:
        """Sum of the fundamental weights = half the sum of positive roots."""
        return Weight(tuple(Fraction(1) for _ in range(self.rank)))

    def maximal_root(self) -> Root:
        """The unique positive root dominating all others coefficientwise."""
        mu = max(self.positive_roots, key=lambda r: (r.height, r.coeffs))
        for g in self.positive_roots:
            if any(mc < gc for mc, gc in zip(mu.coeffs, g.coeffs, strict=True)):
                raise RuntimeError(f"no dominating root in {self.lie_type}")
        return mu

    def height_in_max(self, i: int) -> int:
        """Coefficient of alpha_i (1-based) in the maximal root."""
        self._check_index(i)
        return self.maximal_root().coeffs[i - 1]

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple-root index {i} out of range 1..{self.rank}")


@functools.lru_cache(maxsize=None)
def build_root_system(lie_type: LieType | str) -> RootSystem:
    """Construct (and cache) the root system for a simple type."""
    t = LieType.parse(lie_type) if isinstance(lie_type, str) else lie_type
    cartan = _cartan_matrix(t)
    d = _symmetrizer(cartan)
    positives = _positive_roots(cartan)
    return RootSystem(
        lie_type=t,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizer=d,
        positive_roots=positives,
        _positive_set=frozenset(r.coeffs for r in positives),
        _coroot_forms={r.coeffs: coroot_form(cartan, d, r.coeffs) for r in positives},
    )
