"""Bulk verification sweeps over every flag up to a rank bound.

The identities verified here are theorems, so a sweep finding any
failure means an implementation bug; the harness exists to make that
check cheap, exhaustive at low rank, and byte-for-byte reproducible.

Reproducibility requirements shape two choices:

* flags are enumerated in a fixed sorted order (rank, then series
  letter, then the Levi set as an ascending bitmask), and
* random classes come from an explicit 64-bit PRNG implemented here
  (splitmix64), not from the standard library, so the same seed gives
  the same samples on any platform or Python version.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .flag import ParabolicData, parabolic, snow_check
from .invariants import (
    scalar_curvature,
    tke_exists,
    tke_solve_from_kahler,
    trace,
    volume_bound_report,
    volume_class,
    volume_cross_check,
)
from .rootsys import LieType, _RANK_RULES

__all__ = [
    "SplitMix64",
    "CHECKS",
    "SweepConfig",
    "SweepFailure",
    "SweepResult",
    "enumerate_flags",
    "run_sweep",
]

_MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64 PRNG (Steele, Lea, Flood; public-domain reference).

    state advances by the 64-bit golden ratio; outputs are the standard
    two-round xor-shift-multiply mix.  Known vector: seed 0 produces
    0xE220A8397B1DCDAF first.
    """

    def __init__(self, seed: int) -> None:
        if not 0 <= seed <= _MASK:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self._state = seed

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], via rejection (no modulo bias)."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        limit = (_MASK + 1) - ((_MASK + 1) % span)
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + (u % span)

    def rational(self, rng_num: tuple[int, int], rng_den: tuple[int, int]) -> Fraction:
        num = self.randint(*rng_num)
        den = self.randint(*rng_den)
        return Fraction(num, den)


def draw_kahler(rng: SplitMix64, k: int) -> tuple[Fraction, ...]:
    """k positive rationals, numerator and denominator uniform in [1, 100]."""
    return tuple(rng.rational((1, 100), (1, 100)) for _ in range(k))


def draw_twist(rng: SplitMix64, k: int) -> tuple[Fraction, ...]:
    """k signed rationals (numerator in [-100, 100], denominator in [1, 100])."""
    return tuple(rng.rational((-100, 100), (1, 100)) for _ in range(k))


CHECKS = ("snow", "volbound", "cross", "cscK", "roundtrip")


@dataclass(frozen=True)
class SweepConfig:
    max_rank: int = 4
    samples_per_flag: int = 10
    seed: int = 0
    checks: tuple[str, ...] = CHECKS

    def __post_init__(self) -> None:
        if self.max_rank < 1:
            raise ValueError(f"max_rank must be >= 1, got {self.max_rank}")
        if self.samples_per_flag < 1:
            raise ValueError(
                f"samples_per_flag must be >= 1, got {self.samples_per_flag}"
            )
        if not 0 <= self.seed <= _MASK:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        bad = [c for c in self.checks if c not in CHECKS]
        if bad:
            raise ValueError(f"unknown checks {bad}: available {list(CHECKS)}")
        if not self.checks:
            raise ValueError("at least one check must be selected")


@dataclass(frozen=True)
class SweepFailure:
    flag: str
    check: str
    detail: str
    reproducer: str


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    flags: int
    samples: int
    checks_run: int
    failures: tuple[SweepFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def enumerate_flags(max_rank: int) -> Iterator[ParabolicData]:
    """Every (simple type, proper Levi set) with rank <= max_rank.

    Deterministic order: rank ascending, series alphabetical, then the
    Levi set as an ascending bitmask (bit k set means node k+1 in theta);
    the full set is skipped since it gives a point, not a flag variety.
    """
    for rank in range(1, max_rank + 1):
        for series in "ABCDEFG":
            lo, hi = _RANK_RULES[series]
            if rank < lo or (hi is not None and rank > hi):
                continue
            t = LieType(series, rank)
            for mask in range((1 << rank) - 1):
                theta = tuple(i + 1 for i in range(rank) if mask >> i & 1)
                yield parabolic(t, theta)


def _spec_string(p: ParabolicData, xi: tuple[Fraction, ...] | None) -> str:
    theta = ",".join(str(i) for i in p.theta)
    out = f"{p.lie_type} --theta \"{theta}\""
    if xi is not None:
        out += " --xi " + ",".join(str(c) for c in xi)
    return out


def run_sweep(config: SweepConfig) -> SweepResult:
    """Run the selected checks on every flag up to the rank bound.

    Per flag: the degree bound once, then for each seeded sample one
    positive class (and a signed twist when the roundtrip check is on).
    Returns all failures with one reproducer line each; an empty failure
    list is the expected outcome on a correct build.
    """
    rng = SplitMix64(config.seed)
    failures: list[SweepFailure] = []
    flags = 0
    samples = 0
    checks_run = 0

    def fail(p: ParabolicData, check: str, detail: str, xi=None) -> None:
        failures.append(
            SweepFailure(
                flag=p.describe(),
                check=check,
                detail=detail,
                reproducer=f"check={check} {_spec_string(p, xi)}",
            )
        )

    per_sample = [c for c in config.checks if c != "snow"]
    for p in enumerate_flags(config.max_rank):
        flags += 1
        if "snow" in config.checks:
            checks_run += 1
            sc = snow_check(p)
            if not sc.ok:
                fail(p, "snow", f"degree {sc.degree} > bound {sc.bound}")
        if not per_sample:
            continue
        for _ in range(config.samples_per_flag):
            samples += 1
            xi = draw_kahler(rng, p.picard_rank)
            for check in per_sample:
                checks_run += 1
                if check == "volbound":
                    rep = volume_bound_report(p, xi)
                    if not (rep.left_ok and rep.right_ok):
                        fail(
                            p,
                            check,
                            f"r^n*vol={rep.r_pow_vol} degree={rep.degree} "
                            f"snow={rep.snow}",
                            xi,
                        )
                elif check == "cross":
                    v1 = volume_class(p, xi)
                    v2 = volume_cross_check(p, xi)
                    if v1 != v2:
                        fail(p, check, f"volume_class={v1} cross_check={v2}", xi)
                elif check == "cscK":
                    sol = tke_solve_from_kahler(p, xi)
                    gap = scalar_curvature(p, xi) - trace(p, xi, sol.beta)
                    if gap != p.dim:
                        fail(p, check, f"S - trace = {gap}, dim = {p.dim}", xi)
                elif check == "roundtrip":
                    sol = tke_solve_from_kahler(p, xi)
                    back = tke_exists(p, sol.beta)
                    if not back.exists or back.metric is None or back.metric.coords != xi:
                        fail(p, check, f"recovered {back.metric}, expected {xi}", xi)
    return SweepResult(
        config=config,
        flags=flags,
        samples=samples,
        checks_run=checks_run,
        failures=tuple(failures),
    )
