"""Monochromatic sum-triple searches and exact least forcing bounds.

A triple here is (a, b, c) with a + b = c and a <= b; a == b is allowed,
which fixes the forcing bound for one color at 2. Searches return the
lexicographically smallest witness by (c, a) so runs are reproducible.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .arith import (
    PrimeBase,
    color_of,
    decompose,
    enumerate_smooth,
    factor_over_base,
    palette_index,
    palette_size,
)
from .errors import DomainError, RecheckError, UsageError

MAX_EXACT_COLORS = 4


@dataclass(frozen=True)
class Coloring:
    """Total map from [1, limit] to color indices below palette_size."""

    limit: int
    palette_size: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.limit < 1:
            raise DomainError(f"coloring limit must be >= 1, got {self.limit}")
        if self.palette_size < 1:
            raise DomainError("palette must have at least one color")
        if len(self.assignment) != self.limit:
            raise DomainError("assignment must cover [1, limit] exactly")
        if any(not 0 <= c < self.palette_size for c in self.assignment):
            raise DomainError("assignment uses a color outside the palette")

    def color(self, m: int) -> int:
        if not 1 <= m <= self.limit:
            raise DomainError(f"{m} outside coloring domain [1, {self.limit}]")
        return self.assignment[m - 1]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.palette_size)]
        for m, c in enumerate(self.assignment, start=1):
            out[c].append(m)
        return out

    @classmethod
    def from_callable(cls, limit: int, palette: int, fn: Callable[[int], int]) -> "Coloring":
        return cls(limit, palette, tuple(fn(m) for m in range(1, limit + 1)))

    @classmethod
    def constant(cls, limit: int) -> "Coloring":
        return cls(limit, 1, (0,) * limit)

    @classmethod
    def from_classes(cls, classes: Sequence[Iterable[int]]) -> "Coloring":
        """Build a coloring from disjoint classes covering [1, max]."""
        members: dict[int, int] = {}
        for color, cl in enumerate(classes):
            for m in cl:
                if m in members:
                    raise DomainError(f"{m} appears in two classes")
                members[m] = color
        if not members:
            raise DomainError("classes are empty")
        limit = max(members)
        if set(members) != set(range(1, limit + 1)):
            raise DomainError("classes must cover [1, max] with no gaps")
        return cls(limit, len(classes), tuple(members[m] for m in range(1, limit + 1)))


def random_coloring(limit: int, palette: int, seed: int) -> Coloring:
    rng = random.Random(seed)
    return Coloring(limit, palette, tuple(rng.randrange(palette) for _ in range(limit)))


def residue_coloring(base: PrimeBase, n: int, limit: int) -> Coloring:
    """The exponent-residue coloring of [1, limit], sentinel color included."""
    t = palette_size(base, n)
    return Coloring.from_callable(limit, t, lambda m: palette_index(color_of(m, base, n), base))


@dataclass(frozen=True)
class SchurTriple:
    a: int
    b: int
    c: int
    color: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.a > self.b:
            raise DomainError(f"need 1 <= a <= b, got a={self.a}, b={self.b}")
        if self.a + self.b != self.c:
            raise DomainError(f"{self.a} + {self.b} != {self.c}")

    def rechecks(self, coloring: Coloring) -> bool:
        return (
            coloring.color(self.a)
            == coloring.color(self.b)
            == coloring.color(self.c)
            == self.color
        )


def find_monochromatic_triple(coloring: Coloring) -> SchurTriple | None:
    """Smallest (by c, then a) monochromatic a + b = c, or None after a full scan."""
    assignment = coloring.assignment
    for c in range(2, coloring.limit + 1):
        cc = assignment[c - 1]
        for a in range(1, c // 2 + 1):
            if assignment[a - 1] == cc and assignment[c - a - 1] == cc:
                return SchurTriple(a, c - a, c, cc)
    return None


def count_monochromatic_triples(coloring: Coloring, distinct: bool = False) -> int:
    """Number of monochromatic pairs a <= b with a + b <= limit (a < b if distinct)."""
    assignment = coloring.assignment
    total = 0
    for c in range(2, coloring.limit + 1):
        cc = assignment[c - 1]
        top = (c - 1) // 2 if distinct else c // 2
        for a in range(1, top + 1):
            if assignment[a - 1] == cc and assignment[c - a - 1] == cc:
                total += 1
    return total


@dataclass(frozen=True)
class SchurCertificate:
    """Outcome of the exact backtracking search for one palette size.

    n_max is the largest domain admitting a triple-free coloring that the
    search found; when `exhaustive` is set the search space was fully
    explored and schur_number = n_max + 1 is exact (least-N convention).
    """

    colors: int
    n_max: int
    schur_number: int
    witness: Coloring
    exhaustive: bool
    nodes: int

    def rechecks(self) -> bool:
        return (
            self.schur_number == self.n_max + 1
            and self.witness.limit == self.n_max
            and self.witness.palette_size == self.colors
            and find_monochromatic_triple(self.witness) is None
        )


def schur_number(
    colors: int,
    max_seconds: float | None = None,
    max_nodes: int | None = None,
) -> SchurCertificate:
    """Exact least N forcing a monochromatic triple under every `colors`-coloring.

    Backtracking assigns colors to 1, 2, 3, ... in order, pruning a color as
    soon as it would complete a + b = m inside one class (a == b allowed).
    Color classes are interchangeable, so the color of 1 is fixed and a new
    color may only follow all previously used ones. If a budget trips the
    result is flagged inexact: schur_number is then only a lower bound.
    """
    if not 1 <= colors <= MAX_EXACT_COLORS:
        raise UsageError(f"exact search supports 1..{MAX_EXACT_COLORS} colors, got {colors}")
    deadline = time.monotonic() + max_seconds if max_seconds is not None else None
    members = [0] * colors
    sums = [0] * colors
    assignment = [0]
    members[0] = 1 << 1
    sums[0] = 1 << 2
    state = {"nodes": 0, "budget_hit": False, "best_depth": 1, "best": [0]}

    def extend(m: int, used: int) -> None:
        for col in range(min(used + 1, colors)):
            if (sums[col] >> m) & 1:
                continue
            state["nodes"] += 1
            if max_nodes is not None and state["nodes"] > max_nodes:
                state["budget_hit"] = True
                return
            if deadline is not None and state["nodes"] % 1024 == 0 and time.monotonic() > deadline:
                state["budget_hit"] = True
                return
            saved_members, saved_sums = members[col], sums[col]
            members[col] |= 1 << m
            sums[col] = saved_sums | (saved_members << m) | (1 << (2 * m))
            assignment.append(col)
            if m > state["best_depth"]:
                state["best_depth"] = m
                state["best"] = assignment.copy()
            extend(m + 1, max(used, col + 1))
            assignment.pop()
            members[col], sums[col] = saved_members, saved_sums
            if state["budget_hit"]:
                return

    extend(2, 1)
    n_max = state["best_depth"]
    witness = Coloring(n_max, colors, tuple(state["best"]))
    cert = SchurCertificate(
        colors=colors,
        n_max=n_max,
        schur_number=n_max + 1,
        witness=witness,
        exhaustive=not state["budget_hit"],
        nodes=state["nodes"],
    )
    if not cert.rechecks():
        raise RecheckError("backtracking produced a witness that fails recheck")
    return cert


def factorial_e_bound(t: int) -> int:
    """floor(t! * e), evaluated in pure integer arithmetic as sum_{j<=t} t!/j!.

    The discarded tail t! * sum_{j>t} 1/j! lies strictly in (0, 1) for t >= 1,
    so the truncated sum already equals the floor.
    """
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    return sum(math.factorial(t) // math.factorial(j) for j in range(t + 1))


def find_smooth_monochromatic_triple(
    base: PrimeBase,
    n: int,
    limit: int,
    distinct: bool = False,
) -> SchurTriple | None:
    """Smallest smooth monochromatic a + b = c with a, b, c <= limit.

    All three members must be smooth and share the same smooth color; the
    sentinel never matches. b = c - a is tested for smoothness by direct
    factorization over the base.
    """
    smooth = enumerate_smooth(base, limit)
    residues = {m: color_of(m, base, n).residues for m in smooth}
    for c in smooth:
        if c < 2:
            continue
        rc = residues[c]
        for a in smooth:
            if 2 * a > c:
                break
            if distinct and 2 * a == c:
                continue
            if residues[a] != rc:
                continue
            b = c - a
            fact_b = factor_over_base(b, base)
            if not fact_b.is_smooth:
                continue
            if tuple(e % n for e in fact_b.exponents) != rc:
                continue
            color = palette_index(color_of(a, base, n), base)
            return SchurTriple(a, b, c, color)
    return None


@dataclass(frozen=True)
class SmoothTripleScan:
    """Full-scan statistics over smooth pairs a <= b with a + b <= limit."""

    pairs_examined: int
    nonsmooth_sums: int
    triples_total: int
    triples_distinct: int

    @property
    def nonsmooth_sum_fraction(self) -> float:
        if self.pairs_examined == 0:
            return 0.0
        return self.nonsmooth_sums / self.pairs_examined


def count_smooth_monochromatic_triples(base: PrimeBase, n: int, limit: int) -> SmoothTripleScan:
    """Exhaustive count of smooth monochromatic triples plus escape statistics."""
    smooth = enumerate_smooth(base, limit)
    residues = {m: color_of(m, base, n).residues for m in smooth}
    pairs = 0
    nonsmooth = 0
    total = 0
    distinct_total = 0
    for i, a in enumerate(smooth):
        for b in smooth[i:]:
            c = a + b
            if c > limit:
                break
            pairs += 1
            fact_c = factor_over_base(c, base)
            if not fact_c.is_smooth:
                nonsmooth += 1
                continue
            if residues[a] == residues[b] == tuple(e % n for e in fact_c.exponents):
                total += 1
                if a != b:
                    distinct_total += 1
    return SmoothTripleScan(pairs, nonsmooth, total, distinct_total)


def extract_nth_power_equation(
    triple: SchurTriple, base: PrimeBase, n: int
) -> tuple[int, int, int]:
    """Divide a monochromatic smooth triple by its common power-free part.

    Returns (x, y, z) with x**n + y**n == z**n, rechecked exactly; a recheck
    failure here means the search itself is broken, not that input was bad.
    """
    parts = [decompose(v, base, n) for v in (triple.a, triple.b, triple.c)]
    if any(p is None for p in parts):
        raise DomainError("triple members must all be smooth over the base")
    da, db, dc = parts
    if not (da.color == db.color == dc.color):
        raise DomainError("triple is not monochromatic under the residue coloring")
    x, y, z = da.q, db.q, dc.q
    if x**n + y**n != z**n:
        raise RecheckError(
            f"extracted equation {x}^{n} + {y}^{n} != {z}^{n} from triple {triple}"
        )
    return x, y, z
