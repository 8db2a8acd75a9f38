"""Named examples and the Picard-rank-two classification table.

Two kinds of content:

* worked examples with known answers (full flag varieties, the
  projectivized tangent bundle of projective space), returned as full
  reports with their defining identities asserted;
* the three-family classification of Picard-rank-two flags, where each
  closed-form row from `families` is recomputed from scratch through
  the root-system pipeline and compared field by field.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .families import FAMILIES, CatalogRow, rows_within
from .flag import FlagReport, ParabolicData, flag_report, parabolic
from .rootsys import LieType

__all__ = [
    "Family",
    "Picard2Class",
    "TableRow",
    "classify_picard2",
    "catalog_rows",
    "example_projectivized_tangent",
    "example_full_flag",
]


class Family(str, enum.Enum):
    """Isotropy-summand family of a Picard-rank-two flag variety."""

    I = "I"
    II = "II"
    III = "III"
    OTHER = "other"


_BY_SUMMANDS = {3: Family.I, 4: Family.II, 5: Family.III}


@dataclass(frozen=True)
class Picard2Class:
    """Classification data of one Picard-rank-two flag."""

    heights: tuple[int, int]
    summands: int
    family: Family


def classify_picard2(p: ParabolicData) -> Picard2Class:
    """Classify a Picard-rank-two flag by isotropy summand count.

    heights are the maximal-root coefficients at the two complement
    nodes; the summand count is the number of distinct coefficient
    pairs that radical roots take on those nodes.
    """
    if p.picard_rank != 2:
        raise ValueError(
            f"classification needs Picard rank 2, got {p.picard_rank} "
            f"for {p.describe()}"
        )
    i, j = p.complement
    mu = p.rs.maximal_root()
    heights = (mu.coeffs[i - 1], mu.coeffs[j - 1])
    pairs = {(g.coeffs[i - 1], g.coeffs[j - 1]) for g in p.radical_roots}
    summands = len(pairs)
    return Picard2Class(
        heights=heights,
        summands=summands,
        family=_BY_SUMMANDS.get(summands, Family.OTHER),
    )


@dataclass(frozen=True)
class TableRow:
    """A classification row with its recomputed values and verdicts."""

    family: str
    group: str
    lie_type: LieType
    complement: tuple[int, int]
    params: tuple[tuple[str, int], ...]
    expected: tuple[int, int]
    computed: tuple[int, int]
    match: bool
    heights: tuple[int, int]
    summands: int
    family_consistent: bool
    note: str


def _check_row(row: CatalogRow) -> TableRow:
    p = parabolic(row.lie_type, complement=row.complement)
    cls = classify_picard2(p)
    return TableRow(
        family=row.family,
        group=row.group,
        lie_type=row.lie_type,
        complement=row.complement,
        params=row.params,
        expected=row.expected,
        computed=p.koszul,
        match=p.koszul == row.expected,
        heights=cls.heights,
        summands=cls.summands,
        family_consistent=cls.family.value == row.family,
        note=row.note,
    )


def catalog_rows(max_rank: int, family: str | None = None) -> tuple[TableRow, ...]:
    """Instantiate and verify every classification row with rank <= max_rank.

    family may be "I", "II" or "III" to restrict the output.  max_rank
    must be at least 4 so that every series generator is well defined.
    """
    if max_rank < 4:
        raise ValueError(f"max_rank must be >= 4, got {max_rank}")
    if family is not None and family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}: expected one of {FAMILIES}")
    return tuple(_check_row(row) for row in rows_within(max_rank, family))


def example_projectivized_tangent(n: int) -> FlagReport:
    """The projectivized tangent bundle of n-dimensional projective space.

    Realized on the A-series with complement at the last two nodes; its
    koszul numbers are (n+1, 2), asserted before returning.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = parabolic(LieType("A", n + 1), complement=(n, n + 1))
    if p.koszul != (n + 1, 2):
        raise RuntimeError(
            f"projectivized tangent bundle of P^{n}: koszul {p.koszul}, "
            f"expected ({n + 1}, 2)"
        )
    return flag_report(p)


def example_full_flag(lie_type: LieType | str) -> FlagReport:
    """The full flag variety of a simple type (empty Levi set).

    Its anticanonical class is twice the Weyl vector, so every koszul
    number is 2; asserted before returning.
    """
    p = parabolic(lie_type, ())
    if any(k != 2 for k in p.koszul):
        raise RuntimeError(
            f"full flag of {p.lie_type}: koszul {p.koszul}, expected all 2"
        )
    return flag_report(p)
