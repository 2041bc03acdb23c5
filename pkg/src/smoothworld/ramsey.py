"""Edge colorings of complete graphs: triangle search, the difference-coloring
reduction from triangles to sum triples, and the finite two-anchor bipartite
pigeonhole finder."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError, RecheckError, UsageError
from .schur import Coloring, SchurTriple

# Smallest complete-graph sizes forcing a monochromatic triangle,
# known exactly for up to three colors.
TRIANGLE_FORCING_SIZE = {1: 3, 2: 6, 3: 17}

EdgeRule = Callable[[int, int], int]


class EdgeColoring:
    """Coloring of the edges of the complete graph on vertices 1..vertex_count."""

    def __init__(self, vertex_count: int, palette: int, rule: EdgeRule):
        if vertex_count < 2:
            raise DomainError("need at least two vertices")
        if palette < 1:
            raise DomainError("palette must have at least one color")
        self.vertex_count = vertex_count
        self.palette = palette
        self._rule = rule

    def color(self, i: int, j: int) -> int:
        if i == j:
            raise DomainError("no loops in a complete graph")
        if not (1 <= i <= self.vertex_count and 1 <= j <= self.vertex_count):
            raise DomainError(f"edge ({i},{j}) outside vertex range")
        if i > j:
            i, j = j, i
        c = self._rule(i, j)
        if not 0 <= c < self.palette:
            raise DomainError(f"edge rule returned color {c} outside palette")
        return c

    @classmethod
    def from_table(cls, vertex_count: int, palette: int, table: dict) -> "EdgeColoring":
        return cls(vertex_count, palette, lambda i, j: table[(i, j)])

    @classmethod
    def random(cls, vertex_count: int, palette: int, seed: int) -> "EdgeColoring":
        rng = random.Random(seed)
        table = {
            (i, j): rng.randrange(palette)
            for i in range(1, vertex_count + 1)
            for j in range(i + 1, vertex_count + 1)
        }
        return cls.from_table(vertex_count, palette, table)


def difference_edge_coloring(coloring: Coloring, vertex_count: int) -> EdgeColoring:
    """Edge (i, j) inherits the integer color of |i - j|."""
    if coloring.limit < vertex_count - 1:
        raise DomainError(
            f"difference coloring on {vertex_count} vertices needs colors up to "
            f"{vertex_count - 1}, coloring covers [1, {coloring.limit}]"
        )
    return EdgeColoring(vertex_count, coloring.palette_size, lambda i, j: coloring.color(j - i))


def pentagon_coloring() -> EdgeColoring:
    """The triangle-free 2-coloring of K_5: cycle edges vs diagonals."""
    return EdgeColoring(5, 2, lambda i, j: 0 if (j - i) in (1, 4) else 1)


def find_monochromatic_triangle(ec: EdgeColoring) -> tuple[int, int, int] | None:
    """Lexicographically smallest monochromatic triangle, or None after a full scan."""
    v = ec.vertex_count
    for i in range(1, v - 1):
        for j in range(i + 1, v):
            cij = ec.color(i, j)
            for k in range(j + 1, v + 1):
                if ec.color(i, k) == cij and ec.color(j, k) == cij:
                    return (i, j, k)
    return None


def triangle_to_schur(triangle: tuple[int, int, int], coloring: Coloring) -> SchurTriple:
    """Map a triangle i < j < k to (j-i, k-j, k-i), normalized to a <= b.

    The result must be monochromatic under the integer coloring; that holds
    automatically when the triangle was monochromatic under the difference
    edge coloring built from the same integer coloring.
    """
    i, j, k = triangle
    if not i < j < k:
        raise DomainError(f"triangle vertices must be ascending, got {triangle}")
    a, b, c = j - i, k - j, k - i
    if a > b:
        a, b = b, a
    col = coloring.color(a)
    if coloring.color(b) != col or coloring.color(c) != col:
        raise DomainError(f"triangle {triangle} does not map to a monochromatic triple")
    return SchurTriple(a, b, c, col)


def verify_ramsey_333_reduction(coloring: Coloring, colors: int) -> SchurTriple:
    """Produce a monochromatic sum triple from any `colors`-coloring via triangles.

    Uses the exact triangle-forcing graph size for the palette, so a triangle
    always exists; its absence would mean the scan itself is broken.
    """
    if colors not in TRIANGLE_FORCING_SIZE:
        raise UsageError(f"reduction sizes are known for 1..3 colors, got {colors}")
    if coloring.palette_size > colors:
        raise DomainError(
            f"coloring uses {coloring.palette_size} colors, reduction run for {colors}"
        )
    vertex_count = TRIANGLE_FORCING_SIZE[colors]
    ec = difference_edge_coloring(coloring, vertex_count)
    triangle = find_monochromatic_triangle(ec)
    if triangle is None:
        raise RecheckError(f"no monochromatic triangle in K_{vertex_count}: scan is broken")
    triple = triangle_to_schur(triangle, coloring)
    if not triple.rechecks(coloring):
        raise RecheckError(f"reduced triple {triple} fails recheck")
    return triple


@dataclass(frozen=True)
class BipartiteWitness:
    """Two anchors joined to every partner by edges of one color."""

    anchors: tuple[int, int]
    partners: tuple[int, ...]
    color: int

    def __post_init__(self) -> None:
        v1, v2 = self.anchors
        if v1 >= v2:
            raise DomainError("anchors must be ascending")
        if any(a >= b for a, b in zip(self.partners, self.partners[1:])):
            raise DomainError("partners must be ascending")
        if set(self.anchors) & set(self.partners):
            raise DomainError("anchors and partners must be disjoint")

    def rechecks(self, rule: EdgeRule) -> bool:
        return all(
            rule(min(v, w), max(v, w)) == self.color
            for v in self.anchors
            for w in self.partners
        )


def vector_class_profile(
    universe: Sequence[int], rule: EdgeRule, palette: int
) -> tuple[list[int], dict[tuple[int, ...], list[int]]]:
    """Anchor the first palette+1 elements and bucket the rest by edge-color vector."""
    elems = list(universe)
    if any(a >= b for a, b in zip(elems, elems[1:])):
        raise DomainError("universe must be strictly ascending")
    if len(elems) < palette + 1:
        raise DomainError(f"universe needs at least {palette + 1} elements, got {len(elems)}")
    anchors = elems[: palette + 1]
    classes: dict[tuple[int, ...], list[int]] = {}
    for x in elems[palette + 1 :]:
        vec = []
        for a in anchors:
            c = rule(min(a, x), max(a, x))
            if not 0 <= c < palette:
                raise DomainError(f"edge rule returned color {c} outside palette")
            vec.append(c)
        classes.setdefault(tuple(vec), []).append(x)
    return anchors, classes


def find_k2w(
    universe: Sequence[int], rule: EdgeRule, palette: int, target_size: int
) -> BipartiteWitness | None:
    """Two anchors plus target_size partners, all 2*target_size edges one color.

    Vector-color construction: every non-anchor element is labeled by its
    edge colors toward the palette+1 anchors; the most frequent label class
    (ties broken toward the lexicographically smallest label) supplies the
    partners, and two anchor positions sharing a label component supply the
    anchors. Returns None when the best class is smaller than target_size.
    """
    if target_size < 1:
        raise DomainError("target size must be >= 1")
    anchors, classes = vector_class_profile(universe, rule, palette)
    if not classes:
        return None
    vec, members = min(classes.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    if len(members) < target_size:
        return None
    pair = next(
        (i1, i2)
        for i1 in range(len(vec))
        for i2 in range(i1 + 1, len(vec))
        if vec[i1] == vec[i2]
    )
    witness = BipartiteWitness(
        anchors=(anchors[pair[0]], anchors[pair[1]]),
        partners=tuple(members[:target_size]),
        color=vec[pair[0]],
    )
    if not witness.rechecks(rule):
        raise RecheckError(f"bipartite witness {witness} fails recheck")
    return witness


def guaranteed_universe_size(palette: int, target_size: int) -> int:
    """Universe size at which find_k2w can never come back empty-handed.

    With palette+1 anchors there are palette**(palette+1) possible label
    vectors; one more element than (target_size-1) per vector forces a class
    of size target_size.
    """
    if palette < 1 or target_size < 1:
        raise DomainError("palette and target size must be >= 1")
    return (palette + 1) + (target_size - 1) * palette ** (palette + 1) + 1
