"""Counting bounds for smooth numbers and smooth n-th powers.

The exponent-pattern upper bound and the divisible-exponent lower bound
bracket the exact counts; the per-limit ratio lower/upper estimates the
density that a finite-prime integer world would force on its n-th powers.
Comparing that linear extrapolation against the exact floor(N**(1/n)) cap
on real n-th powers yields the crossover report.

Float policy: both bounds involve logarithms and are computed in floating
point with a 1e-9 guard band in the conservative direction; any factor
landing inside the band is re-resolved with exact integer power
comparisons. Roots are always exact integer roots, never float pow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import PrimeBase, enumerate_smooth, nth_root_floor, _check_exponent, _check_limit
from .errors import RecheckError

GUARD_BAND = 1e-9

CSV_HEADER = "base,n,N,smooth,smooth_nth_powers,upper_bound,lower_bound,delta,crossover"


def pattern_upper_bound(base: PrimeBase, limit: int) -> float:
    """prod(1 + log N / log p) over the base: at most this many exponent patterns fit."""
    _check_limit(limit)
    log_n = math.log(limit)
    bound = 1.0
    for p in base.primes:
        bound *= 1.0 + log_n / math.log(p)
    return bound


def _lower_bound_factor(p: int, step: int, limit: int) -> tuple[int, bool]:
    """floor(1 + log N / (step * log p)) with exact fallback on near-integer x."""
    x = math.log(limit) / (step * math.log(p))
    frac = x - math.floor(x)
    if frac < GUARD_BAND or frac > 1.0 - GUARD_BAND:
        j = round(x)
        return 1 + (j if p ** (step * j) <= limit else j - 1), True
    return 1 + math.floor(x), False


def nth_power_lower_bound(base: PrimeBase, n: int, limit: int) -> int:
    """Provable lower bound on smooth n-th powers <= limit.

    Counts products with every exponent divisible by n and every prime power
    below limit**(1/k); each such product is a distinct smooth n-th power.
    """
    _check_exponent(n)
    _check_limit(limit)
    step = n * base.k
    bound = 1
    for p in base.primes:
        factor, _ = _lower_bound_factor(p, step, limit)
        bound *= factor
    return bound


def count_smooth(base: PrimeBase, limit: int) -> int:
    return len(enumerate_smooth(base, limit))


def count_smooth_nth_powers(base: PrimeBase, n: int, limit: int) -> int:
    """Exact count of smooth perfect n-th powers <= limit (via exact roots)."""
    _check_exponent(n)
    _check_limit(limit)
    return len(enumerate_smooth(base, nth_root_floor(limit, n)))


def count_all_nth_powers(limit: int, n: int) -> int:
    """Exactly floor(limit**(1/n)): every n-th power <= limit, smooth or not."""
    return nth_root_floor(limit, n)


@dataclass(frozen=True)
class DensityRow:
    primes: tuple[int, ...]
    n: int
    limit: int
    smooth_count: int
    smooth_nth_power_count: int
    upper_bound: float
    lower_bound: int
    delta_estimate: float
    crossover: bool
    near_integer_ties: tuple[int, ...]
    scaled_delta: float  # delta * (n*k)**k, for inspection only

    def to_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "n": self.n,
            "limit": self.limit,
            "smooth_count": self.smooth_count,
            "smooth_nth_power_count": self.smooth_nth_power_count,
            "upper_bound": self.upper_bound,
            "lower_bound": self.lower_bound,
            "delta_estimate": self.delta_estimate,
            "crossover": self.crossover,
            "near_integer_ties": list(self.near_integer_ties),
            "scaled_delta": self.scaled_delta,
        }

    def to_csv_line(self) -> str:
        return ",".join(
            [
                ";".join(str(p) for p in self.primes),
                str(self.n),
                str(self.limit),
                str(self.smooth_count),
                str(self.smooth_nth_power_count),
                f"{self.upper_bound:.6f}",
                str(self.lower_bound),
                f"{self.delta_estimate:.6f}",
                "true" if self.crossover else "false",
            ]
        )


@dataclass(frozen=True)
class DensityReport:
    rows: tuple[DensityRow, ...]
    first_crossover: int | None

    def to_csv(self) -> str:
        return "\n".join([CSV_HEADER, *(row.to_csv_line() for row in self.rows)]) + "\n"


def density_row(base: PrimeBase, n: int, limit: int) -> DensityRow:
    _check_exponent(n)
    _check_limit(limit)
    step = n * base.k
    lower = 1
    ties = []
    for idx, p in enumerate(base.primes):
        factor, tie = _lower_bound_factor(p, step, limit)
        lower *= factor
        if tie:
            ties.append(idx)
    upper = pattern_upper_bound(base, limit)
    smooth_count = count_smooth(base, limit)
    power_count = count_smooth_nth_powers(base, n, limit)
    # These are proved bounds; a violation means the arithmetic is broken.
    if lower > power_count:
        raise RecheckError(
            f"lower bound {lower} exceeds exact power count {power_count} "
            f"(base {base.primes}, n={n}, N={limit})"
        )
    if smooth_count > upper + GUARD_BAND:
        raise RecheckError(
            f"smooth count {smooth_count} exceeds pattern bound {upper} "
            f"(base {base.primes}, n={n}, N={limit})"
        )
    delta = lower / (upper + GUARD_BAND)
    crossover = delta * limit > count_all_nth_powers(limit, n)
    return DensityRow(
        primes=base.primes,
        n=n,
        limit=limit,
        smooth_count=smooth_count,
        smooth_nth_power_count=power_count,
        upper_bound=upper,
        lower_bound=lower,
        delta_estimate=delta,
        crossover=crossover,
        near_integer_ties=tuple(ties),
        scaled_delta=delta * float(step**base.k),
    )


def density_report(base: PrimeBase, n: int, limits: list[int]) -> DensityReport:
    """One row per limit, ascending, plus the smallest crossover limit if any."""
    rows = tuple(density_row(base, n, limit) for limit in sorted(limits))
    first = next((row.limit for row in rows if row.crossover), None)
    return DensityReport(rows, first)
