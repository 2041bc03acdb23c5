"""Intentionally naive reference implementations.

Each oracle re-derives a result through the most direct computation
available, sharing no code with the optimized search paths, so the two
routes can disagree only when one of them is wrong.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Sequence

from .errors import DomainError, UsageError

MAX_ENUMERATION = 2**25


def oracle_smooth_sweep(primes: Sequence[int], limit: int) -> list[int]:
    """Smooth numbers by dividing every single integer up to the limit."""
    out = []
    for m in range(1, limit + 1):
        rest = m
        for p in primes:
            while rest % p == 0:
                rest //= p
        if rest == 1:
            out.append(m)
    return out


def oracle_triple_loop(kind: str, n: int, bound: int) -> list[tuple[int, int, int]]:
    """Cubic-time scan for the two power equations, no pointer tricks."""
    found = []
    if kind == "flt":
        for x in range(1, bound + 1):
            for y in range(x, bound + 1):
                for z in range(y + 1, bound + 1):
                    if x**n + y**n == z**n:
                        found.append((x, y, z))
    elif kind == "dm":
        for x in range(1, bound + 1):
            for z in range(x + 1, bound + 1):
                for y in range(z + 1, bound + 1):
                    if x**n + y**n == 2 * z**n:
                        found.append((x, z, y))
        found.sort(key=lambda t: (t[2], t[0]))
    else:
        raise DomainError(f"unknown equation kind {kind!r}")
    return found


def oracle_all_colorings(
    palette: int, limit: int, predicate: Callable[[list[int]], bool]
) -> bool:
    """Whether the predicate holds for every palette**limit coloring of [1, limit].

    The coloring is passed as a list indexed by m-1. Guarded against
    enumerations beyond 2**25 states.
    """
    total = palette**limit
    if total > MAX_ENUMERATION:
        raise UsageError(f"{palette}**{limit} colorings exceed the enumeration guard")
    coloring = [0] * limit
    for code in range(total):
        v = code
        for i in range(limit):
            v, coloring[i] = divmod(v, palette)
        if not predicate(coloring):
            return False
    return True


def has_monochromatic_sum_triple(coloring: list[int]) -> bool:
    """Direct scan used as the predicate for coloring enumerations."""
    limit = len(coloring)
    for c in range(2, limit + 1):
        for a in range(1, c // 2 + 1):
            if coloring[a - 1] == coloring[c - a - 1] == coloring[c - 1]:
                return True
    return False


def oracle_all_edge_2colorings_have_triangle(vertex_count: int) -> bool:
    """Exhaustive scan of every 2-coloring of the complete graph's edges."""
    edges = list(combinations(range(1, vertex_count + 1), 2))
    if 2 ** len(edges) > MAX_ENUMERATION:
        raise UsageError(f"2**{len(edges)} edge colorings exceed the enumeration guard")
    index = {e: i for i, e in enumerate(edges)}
    masks = []
    for tri in combinations(range(1, vertex_count + 1), 3):
        i, j, k = tri
        masks.append((1 << index[(i, j)]) | (1 << index[(i, k)]) | (1 << index[(j, k)]))
    for code in range(2 ** len(edges)):
        if not any((code & m) == 0 or (code & m) == m for m in masks):
            return False
    return True


def oracle_iterative_k2(
    universe: Sequence[int],
    rule: Callable[[int, int], int],
    palette: int,
    target_size: int,
) -> tuple[tuple[int, int], tuple[int, ...], int] | None:
    """Anchor-by-anchor refinement construction for the two-anchor witness.

    Repeatedly keeps the most frequent edge color toward the next anchor
    (ties toward the smaller color); stops when two anchors repeat a color.
    Returns (anchors, partners, color) or None when the shrinking pool
    cannot supply target_size partners.
    """
    elems = list(universe)
    if len(elems) < palette + 1:
        raise DomainError(f"universe needs at least {palette + 1} elements")
    anchors = elems[: palette + 1]
    pool = elems[palette + 1 :]
    kept_colors: list[int] = []
    for i, anchor in enumerate(anchors):
        if not pool:
            return None
        buckets: dict[int, list[int]] = {}
        for x in pool:
            buckets.setdefault(rule(min(anchor, x), max(anchor, x)), []).append(x)
        color, pool = min(buckets.items(), key=lambda kv: (-len(kv[1]), kv[0]))
        for j, earlier in enumerate(kept_colors):
            if earlier == color:
                if len(pool) < target_size:
                    return None
                return ((anchors[j], anchor), tuple(pool[:target_size]), color)
        kept_colors.append(color)
    return None


def oracle_folkman_enumerate(coloring, size: int) -> tuple[int, ...] | None:
    """First ascending element tuple whose nonempty subset sums are one color."""
    limit = coloring.limit
    for elems in combinations(range(1, limit + 1), size):
        color = coloring.color(elems[0])
        ok = True
        for mask in range(1, 1 << size):
            total = sum(e for i, e in enumerate(elems) if mask >> i & 1)
            if total > limit or coloring.color(total) != color:
                ok = False
                break
        if ok:
            return elems
    return None


def oracle_smooth_triple_count(primes: Sequence[int], n: int, limit: int) -> int:
    """Monochromatic smooth triple count via the sweep oracle's own factorization."""
    smooth = oracle_smooth_sweep(primes, limit)

    def residues(m: int) -> tuple[int, ...]:
        out = []
        for p in primes:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append(e % n)
        return tuple(out)

    colors = {m: residues(m) for m in smooth}
    smooth_set = set(smooth)
    count = 0
    for i, a in enumerate(smooth):
        for b in smooth[i:]:
            c = a + b
            if c > limit:
                break
            if c in smooth_set and colors[a] == colors[b] == colors[c]:
                count += 1
    return count


def oracle_fixed_difference_buckets(
    n: int, max_difference: int
) -> dict[int, list[tuple[int, int]]]:
    """All power pairs with difference <= max_difference, by double loop."""
    buckets: dict[int, list[tuple[int, int]]] = {d: [] for d in range(1, max_difference + 1)}
    powers = [i**n for i in range(max_difference + 2)]
    for v in range(2, max_difference + 2):
        for u in range(1, v):
            d = powers[v] - powers[u]
            if d <= max_difference:
                buckets[d].append((u, v))
    return buckets


def random_pair_rule(palette: int, seed: int) -> Callable[[int, int], int]:
    """Deterministic pseudo-random edge coloring keyed by the normalized pair."""
    def rule(i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return random.Random(f"{seed}:{i}:{j}").randrange(palette)

    return rule
