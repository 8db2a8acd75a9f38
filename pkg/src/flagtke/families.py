"""Closed-form data for the Picard-rank-two classification rows.

Flags with exactly two complement nodes fall into three named families
by the number of irreducible isotropy summands (3, 4 or 5).  For each
family this module lists every known presentation as a parametrized
row: the simple type, the two complement nodes in Bourbaki numbering,
the concrete isotropy group, and the closed-form koszul numbers.

The rows are data, not computation: the `catalog` module instantiates
them and checks the closed forms against the root-system pipeline, so
a wrong formula here fails tests instead of being silently accepted.

Node placements were fixed from the isotropy groups (the group label
determines the Levi subdiagram up to diagram symmetry), and every
closed form below was re-derived by direct evaluation of the
radical-root sum; derivations live in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .rootsys import LieType

__all__ = ["CatalogRow", "rows_within", "FAMILIES"]

FAMILIES = ("I", "II", "III")

# Corrected type-III parameter range (the bounds are sometimes printed
# transposed); surfaced as a row note so table output flags it.
_RANGE_NOTE = "parameter range read as 3 <= p <= l-3"


@dataclass(frozen=True)
class CatalogRow:
    """One instantiated classification row (fixed parameter values)."""

    family: str
    group: str
    lie_type: LieType
    complement: tuple[int, int]
    expected: tuple[int, int]
    params: tuple[tuple[str, int], ...] = ()
    note: str = ""


def _family_one(max_rank: int) -> Iterator[CatalogRow]:
    # D(l), fork pair {l-1, l}: koszul (l, l).
    for l in range(4, max_rank + 1):
        yield CatalogRow(
            family="I",
            group=f"SO({2 * l})/U(1)xU({l - 1})",
            lie_type=LieType("D", l),
            complement=(l - 1, l),
            expected=(l, l),
            params=(("l", l),),
        )
    # D(l), {1, l-1} and {1, l}: same koszul pair (l, 2(l-2)) by the
    # diagram symmetry swapping the fork nodes; both verified separately.
    for last in (-1, 0):
        for l in range(4, max_rank + 1):
            yield CatalogRow(
                family="I",
                group=f"SO({2 * l})/U(1)xU({l - 1})",
                lie_type=LieType("D", l),
                complement=(1, l + last),
                expected=(l, 2 * (l - 2)),
                params=(("l", l),),
            )
    # A(r) with r = l+m+n-1, complement {l, l+m}: koszul (l+m, m+n).
    for r in range(2, max_rank + 1):
        for i in range(1, r):
            for j in range(i + 1, r + 1):
                l, m, n = i, j - i, r + 1 - j
                yield CatalogRow(
                    family="I",
                    group=f"SU({l + m + n})/S(U({l})xU({m})xU({n}))",
                    lie_type=LieType("A", r),
                    complement=(i, j),
                    expected=(l + m, m + n),
                    params=(("l", l), ("m", m), ("n", n)),
                )
    # E6, chain ends {1, 6}: koszul (8, 8).
    if max_rank >= 6:
        yield CatalogRow(
            family="I",
            group="E6/U(1)xU(1)xSpin(8)",
            lie_type=LieType("E", 6),
            complement=(1, 6),
            expected=(8, 8),
        )


def _family_two(max_rank: int) -> Iterator[CatalogRow]:
    # B(l), {1, 2}: koszul (2, 2l-3).  Needs l >= 3: at l = 2 the Levi
    # is trivial and the closed form stops matching the full flag.
    for l in range(3, max_rank + 1):
        yield CatalogRow(
            family="II",
            group=f"SO({2 * l + 1})/SO({2 * l - 3})xU(1)xU(1)",
            lie_type=LieType("B", l),
            complement=(1, 2),
            expected=(2, 2 * l - 3),
            params=(("l", l),),
        )
    # C(l), {p, l} with 1 <= p <= l-1: koszul (l, l-p+1).
    for l in range(2, max_rank + 1):
        for p in range(1, l):
            yield CatalogRow(
                family="II",
                group=f"Sp({l})/U({p})xU({l - p})",
                lie_type=LieType("C", l),
                complement=(p, l),
                expected=(l, l - p + 1),
                params=(("l", l), ("p", p)),
            )
    # D(l), {1, 2}: koszul (2, 2(l-2)).
    for l in range(4, max_rank + 1):
        yield CatalogRow(
            family="II",
            group=f"SO({2 * l})/SO({2 * (l - 2)})xU(1)xU(1)",
            lie_type=LieType("D", l),
            complement=(1, 2),
            expected=(2, 2 * (l - 2)),
            params=(("l", l),),
        )
    # D(l), {p, l} with 2 <= p <= l-2: koszul (l, 2(l-p-1)).
    for l in range(4, max_rank + 1):
        for p in range(2, l - 1):
            yield CatalogRow(
                family="II",
                group=f"SO({2 * l})/U({p})xU({l - p})",
                lie_type=LieType("D", l),
                complement=(p, l),
                expected=(l, 2 * (l - p - 1)),
                params=(("l", l), ("p", p)),
            )
    if max_rank >= 6:
        yield CatalogRow(
            family="II",
            group="E6/SU(5)xU(1)xU(1)",
            lie_type=LieType("E", 6),
            complement=(1, 3),
            expected=(2, 8),
        )
    if max_rank >= 7:
        # Node pair fixed by the isotropy group: the Levi subdiagram
        # must be D5, which sits on nodes {1,2,3,4,5} of E7.
        yield CatalogRow(
            family="II",
            group="E7/SO(10)xU(1)xU(1)",
            lie_type=LieType("E", 7),
            complement=(6, 7),
            expected=(12, 2),
        )


def _family_three(max_rank: int) -> Iterator[CatalogRow]:
    # B(l), {1, p+1} with 3 <= p <= l-3: koszul (p+1, 2l-p-2).
    for l in range(5, max_rank + 1):
        for p in range(3, l - 2):
            yield CatalogRow(
                family="III",
                group=f"SO({2 * l + 1})/U(1)xU({p})xSO({2 * (l - p - 1) + 1})",
                lie_type=LieType("B", l),
                complement=(1, p + 1),
                expected=(p + 1, 2 * l - p - 2),
                params=(("l", l), ("p", p)),
                note=_RANGE_NOTE,
            )


_GENERATORS = {"I": _family_one, "II": _family_two, "III": _family_three}


def rows_within(max_rank: int, family: str | None = None) -> tuple[CatalogRow, ...]:
    """All classification rows with rank <= max_rank, in family order.

    family restricts to one of "I", "II", "III"; None keeps all three.
    """
    if family is not None and family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}: expected one of {FAMILIES}")
    picked = (family,) if family is not None else FAMILIES
    out: list[CatalogRow] = []
    for fam in picked:
        out.extend(_GENERATORS[fam](max_rank))
    return tuple(out)
