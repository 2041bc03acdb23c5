"""Brute-force, exact oracles for equations between perfect powers.

Every search is an exhaustive scan over its stated range in arbitrary
precision; an empty result certifies absence up to the bound, nothing more.
Output order is ascending by the largest term, then lexicographic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .arith import nth_root_exact


@dataclass(frozen=True)
class PowerSolution:
    """One witness tuple for a tagged power equation, searched up to `bound`."""

    equation: str  # FLT | DM | AP | FIXED_DIFF
    n: int
    witness: tuple[int, ...]
    bound: int
    difference: int | None = None

    def rechecks(self) -> bool:
        n = self.n
        w = self.witness
        if self.equation == "FLT":
            x, y, z = w
            return 1 <= x <= y < z and x**n + y**n == z**n
        if self.equation == "DM":
            x, z, y = w
            return 1 <= x < z < y and x**n + y**n == 2 * z**n
        if self.equation == "AP":
            if len(w) < 3 or any(nth_root_exact(v, n) is None for v in w):
                return False
            diffs = {b - a for a, b in zip(w, w[1:])}
            return len(diffs) == 1 and diffs.pop() > 0
        if self.equation == "FIXED_DIFF":
            u, v = w
            return u >= 1 and v**n - u**n == self.difference
        raise DomainError(f"unknown equation tag {self.equation}")


def _check_bound(bound: int) -> None:
    if bound < 1:
        raise DomainError(f"search bound must be >= 1, got {bound}")


def flt_check(n: int, bound: int) -> list[tuple[int, int, int]]:
    """All x <= y < z <= bound with x**n + y**n == z**n (two-pointer per z)."""
    if n < 1:
        raise DomainError(f"exponent must be >= 1, got {n}")
    _check_bound(bound)
    powers = [i**n for i in range(bound + 1)]
    found: list[tuple[int, int, int]] = []
    for z in range(2, bound + 1):
        target = powers[z]
        x, y = 1, z - 1
        while x <= y:
            s = powers[x] + powers[y]
            if s == target:
                found.append((x, y, z))
                x += 1
                y -= 1
            elif s < target:
                x += 1
            else:
                y -= 1
    return found


def dm_check(n: int, bound: int) -> list[tuple[int, int, int]]:
    """All x < z < y <= bound with x**n + y**n == 2*z**n, reported as (x, z, y).

    The three powers x**n < z**n < y**n form an arithmetic progression; the
    all-equal solution family is excluded by the strict ordering.
    """
    if n < 1:
        raise DomainError(f"exponent must be >= 1, got {n}")
    _check_bound(bound)
    powers = [i**n for i in range(bound + 1)]
    found: list[tuple[int, int, int]] = []
    for z in range(2, bound + 1):
        for x in range(1, z):
            rest = 2 * powers[z] - powers[x]
            y = nth_root_exact(rest, n)
            if y is not None and z < y <= bound:
                found.append((x, z, y))
    found.sort(key=lambda t: (t[2], t[0]))
    return found


def ap_in_powers(n: int, length: int, bound: int) -> list[tuple[int, ...]]:
    """Arithmetic progressions of `length` distinct n-th powers, bases <= bound.

    Exhaustive over the first two terms; later terms must be exact n-th
    powers of bases <= bound. Returned as tuples of power values.
    """
    if length < 3:
        raise DomainError(f"progression length must be >= 3, got {length}")
    if n < 1:
        raise DomainError(f"exponent must be >= 1, got {n}")
    _check_bound(bound)
    powers = [i**n for i in range(bound + 1)]
    found: list[tuple[int, ...]] = []
    for u1 in range(1, bound + 1):
        for u2 in range(u1 + 1, bound + 1):
            step = powers[u2] - powers[u1]
            terms = [powers[u1], powers[u2]]
            while len(terms) < length:
                nxt = terms[-1] + step
                root = nth_root_exact(nxt, n)
                if root is None or root > bound:
                    break
                terms.append(nxt)
            if len(terms) == length:
                found.append(tuple(terms))
    found.sort(key=lambda t: (t[-1], t))
    return found


def power_gap_check(n: int, z_max: int) -> int | None:
    """Verify z**n - (z-1)**n >= z**(n-1) for 1 <= z <= z_max.

    Returns None when every z passes, else the first failing z. The identity
    holds for all n >= 2; the failure path exists to catch arithmetic bugs.
    """
    if n < 2:
        raise DomainError(f"gap bound needs exponent >= 2, got {n}")
    if z_max < 1:
        raise DomainError(f"z_max must be >= 1, got {z_max}")
    for z in range(1, z_max + 1):
        if z**n - (z - 1) ** n < z ** (n - 1):
            return z
    return None


def fixed_difference_pairs(n: int, difference: int) -> list[tuple[int, int]]:
    """The complete list of pairs u >= 1 < v with v**n - u**n == difference.

    Complete because consecutive n-th power gaps grow: once v**(n-1) exceeds
    the difference no further v can work, so the scan provably terminates.
    """
    if n < 2:
        raise DomainError(f"fixed-difference scan needs exponent >= 2, got {n}")
    if difference < 1:
        raise DomainError(f"difference must be >= 1, got {difference}")
    found: list[tuple[int, int]] = []
    v = 2
    while v ** (n - 1) <= difference:
        rest = v**n - difference
        if rest >= 1:
            u = nth_root_exact(rest, n)
            if u is not None:
                found.append((u, v))
        v += 1
    return found
