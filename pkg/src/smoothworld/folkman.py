"""Finite search for sets whose nonempty subset sums are all one color.

Elements are distinct positive integers; subset sums may collide, and every
nonempty index set must land on the common color. The smooth pipeline
restricts elements and sums to the smooth world and divides every sum by
the common power-free part, which must leave exact n-th powers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import (
    PrimeBase,
    color_of,
    enumerate_smooth,
    factor_over_base,
    nth_root_exact,
    palette_index,
)
from .errors import DomainError, RecheckError, UsageError
from .schur import Coloring

MAX_SET_SIZE = 5


@dataclass(frozen=True)
class FolkmanWitness:
    """Ascending elements plus all 2**s - 1 subset sums, one shared color.

    subset_sums pairs each nonempty index set (0-based positions, ascending)
    with its sum, ordered by bitmask.
    """

    elements: tuple[int, ...]
    color: int
    subset_sums: tuple[tuple[tuple[int, ...], int], ...]

    def rechecks(self, coloring: Coloring) -> bool:
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            return False
        expected = _subset_sums(self.elements)
        if expected != self.subset_sums:
            return False
        return all(coloring.color(total) == self.color for _, total in expected)


def _subset_sums(elements: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for mask in range(1, 1 << len(elements)):
        idx = tuple(i for i in range(len(elements)) if mask >> i & 1)
        out.append((idx, sum(elements[i] for i in idx)))
    return tuple(out)


def _check_size(size: int) -> None:
    if not 2 <= size <= MAX_SET_SIZE:
        raise UsageError(f"set size must be in [2, {MAX_SET_SIZE}], got {size}")


def find_folkman_set(coloring: Coloring, size: int) -> FolkmanWitness | None:
    """Lexicographically smallest witness under the coloring, or None.

    Depth-first over ascending elements; a candidate is pruned as soon as
    any sum involving it leaves [1, limit] or misses the common color.
    """
    _check_size(size)
    limit = coloring.limit

    def extend(elements: list[int], sums: list[int], color: int) -> tuple[int, ...] | None:
        if len(elements) == size:
            return tuple(elements)
        for cand in range(elements[-1] + 1, limit + 1):
            if coloring.color(cand) != color:
                continue
            new_sums = [cand + s for s in sums]
            if any(s > limit or coloring.color(s) != color for s in new_sums):
                continue
            found = extend(elements + [cand], sums + [cand] + new_sums, color)
            if found is not None:
                return found
        return None

    for first in range(1, limit + 1):
        found = extend([first], [first], coloring.color(first))
        if found is not None:
            witness = FolkmanWitness(found, coloring.color(found[0]), _subset_sums(found))
            if not witness.rechecks(coloring):
                raise RecheckError(f"folkman witness {found} fails recheck")
            return witness
    return None


@dataclass(frozen=True)
class SmoothFolkmanResult:
    """Outcome of the smooth-world subset-sum search.

    images lists, per nonempty index set: (positions, sum, sum divided by the
    common power-free part, exact n-th root of that quotient).
    """

    base: PrimeBase
    n: int
    limit: int
    size: int
    witness: FolkmanWitness | None
    r_part: int | None
    images: tuple[tuple[tuple[int, ...], int, int, int], ...]
    nodes: int
    exhausted: bool


def smooth_folkman_pipeline(
    base: PrimeBase, n: int, limit: int, size: int
) -> SmoothFolkmanResult:
    """Search for ascending smooth elements whose subset sums are all smooth
    and share one smooth color; divide sums by the power-free part and verify
    exact n-th powers."""
    _check_size(size)
    smooth = enumerate_smooth(base, limit)
    residues = {m: color_of(m, base, n).residues for m in smooth}
    nodes = 0

    def sum_matches(total: int, target: tuple[int, ...]) -> bool:
        if total > limit:
            return False
        fact = factor_over_base(total, base)
        if not fact.is_smooth:
            return False
        return tuple(e % n for e in fact.exponents) == target

    def extend(start: int, elements: list[int], sums: list[int], target) -> tuple[int, ...] | None:
        nonlocal nodes
        if len(elements) == size:
            return tuple(elements)
        for pos in range(start, len(smooth)):
            cand = smooth[pos]
            nodes += 1
            if residues[cand] != target:
                continue
            if any(not sum_matches(cand + s, target) for s in sums):
                continue
            found = extend(pos + 1, elements + [cand], sums + [cand] + [cand + s for s in sums], target)
            if found is not None:
                return found
        return None

    found = None
    for pos, first in enumerate(smooth):
        nodes += 1
        found = extend(pos + 1, [first], [first], residues[first])
        if found is not None:
            break

    if found is None:
        return SmoothFolkmanResult(base, n, limit, size, None, None, (), nodes, True)

    target = residues[found[0]]
    r_part = 1
    for p, r in zip(base.primes, target):
        r_part *= p**r
    color = palette_index(color_of(found[0], base, n), base)
    witness = FolkmanWitness(found, color, _subset_sums(found))
    images = []
    for idx, total in witness.subset_sums:
        quotient, rem = divmod(total, r_part)
        root = nth_root_exact(quotient, n) if rem == 0 else None
        if root is None:
            raise RecheckError(
                f"subset sum {total} / {r_part} is not an exact {n}-th power"
            )
        images.append((idx, total, quotient, root))
    return SmoothFolkmanResult(
        base, n, limit, size, witness, r_part, tuple(images), nodes, True
    )
