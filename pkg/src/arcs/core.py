"""Ground set, cycles, the Z_k x {0} action and difference multisets.

Vertices live in (Z_k x Z_4) u {inf}.  A point is a ``Point(a, b)`` with
``0 <= a < k`` and ``0 <= b < 4``; the adjoined symbol is the singleton
``INF``.  A cycle is a plain tuple of vertices read cyclically.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

LEVELS = 4


class Infinity(enum.Enum):
    INF = "inf"

    def __repr__(self) -> str:
        return "INF"


INF = Infinity.INF


class Point(NamedTuple):
    a: int
    b: int

    def __repr__(self) -> str:
        return f"({self.a},{self.b})"


Vertex = Union[Point, Infinity]
Cycle = tuple  # tuple[Vertex, ...]
CycleClass = tuple  # tuple[Cycle, ...]


def point(a: int, b: int, k: int) -> Point:
    """Build a point, reducing signed residues such as (-x, j) to canonical form."""
    return Point(a % k, b % LEVELS)


def vertex_key(x: Vertex) -> tuple[int, int]:
    # inf first, then points by (level, residue)
    if x is INF:
        return (-1, -1)
    return (x.b, x.a)


def ground_set(k: int) -> list[Vertex]:
    """All 4k+1 vertices, in ``vertex_key`` order."""
    return [INF] + [Point(a, b) for b in range(LEVELS) for a in range(k)]


def edges(cycle: Sequence[Vertex]) -> list[tuple[Vertex, Vertex]]:
    """Consecutive vertex pairs of a cycle, closing edge included."""
    n = len(cycle)
    return [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]


def validate_cycle(cycle: Sequence[Vertex], k: int) -> None:
    """Raise ``ValueError`` unless ``cycle`` is a k-cycle on the ground set."""
    if len(cycle) != k:
        raise ValueError(f"cycle has length {len(cycle)}, expected {k}")
    seen: set[Vertex] = set()
    for x in cycle:
        if x is not INF:
            if not isinstance(x, Point) or not (0 <= x.a < k and 0 <= x.b < LEVELS):
                raise ValueError(f"{x!r} is not a vertex of (Z_{k} x Z_4) u {{inf}}")
        if x in seen:
            raise ValueError(f"vertex {x!r} repeated in cycle")
        seen.add(x)


@dataclass(frozen=True)
class Factor:
    """Four vertex-disjoint k-cycles covering every vertex except ``missing``."""

    k: int
    cycles: tuple[Cycle, ...]
    missing: Point

    def __post_init__(self) -> None:
        if len(self.cycles) != 4:
            raise ValueError(f"a factor has 4 cycles, got {len(self.cycles)}")
        for c in self.cycles:
            validate_cycle(c, self.k)
        covered = [x for c in self.cycles for x in c]
        if len(set(covered)) != len(covered):
            raise ValueError("cycles of a factor are not vertex-disjoint")
        uncovered = set(ground_set(self.k)) - set(covered)
        if uncovered != {self.missing}:
            raise ValueError(
                f"factor leaves {sorted(uncovered, key=vertex_key)} uncovered, "
                f"expected only {self.missing!r}"
            )


def translate(cycle: Sequence[Vertex], shift: int, k: int) -> Cycle:
    """Add ``(shift, 0)`` to every point; ``INF`` is fixed."""
    return tuple(x if x is INF else Point((x.a + shift) % k, x.b) for x in cycle)


def translate_factor(f: Factor, shift: int) -> Factor:
    return Factor(
        f.k,
        tuple(translate(c, shift, f.k) for c in f.cycles),
        Point((f.missing.a + shift) % f.k, f.missing.b),
    )


def develop(f: Factor) -> list[Factor]:
    """The k translates ``f + (l, 0)``, ``l`` in Z_k, starting with ``f`` itself."""
    return [f] + [translate_factor(f, shift) for shift in range(1, f.k)]


def delta(cycles: Iterable[Sequence[Vertex]], r: int, s: int, k: int) -> Counter:
    """Multiset of differences ``x - y`` over edges {(x, r), (y, s)}.

    An edge inside one level matches the pattern in both orientations and
    contributes both ``x - y`` and ``y - x``.  Edges at ``INF`` contribute
    nothing.
    """
    out: Counter = Counter()
    for c in cycles:
        for u, w in edges(c):
            if u is INF or w is INF:
                continue
            if u.b == r and w.b == s:
                out[(u.a - w.a) % k] += 1
            if u.b == s and w.b == r:
                out[(w.a - u.a) % k] += 1
    return out


def difference_profile(cycles: Iterable[Sequence[Vertex]], k: int) -> dict[tuple[int, int], Counter]:
    """``delta`` for all 16 ordered level pairs, computed in one pass."""
    table = {(r, s): Counter() for r in range(LEVELS) for s in range(LEVELS)}
    for c in cycles:
        for u, w in edges(c):
            if u is INF or w is INF:
                continue
            table[u.b, w.b][(u.a - w.a) % k] += 1
            table[w.b, u.b][(w.a - u.a) % k] += 1
    return table


def edge_multiset(classes: Iterable[Iterable[Sequence[Vertex]]]) -> Counter:
    """Unordered-edge multiplicities over every cycle of every class.

    Keys are ``(u, w)`` with ``vertex_key(u) < vertex_key(w)``.
    """
    counts: Counter = Counter()
    for cls in classes:
        for c in cls:
            if len(set(c)) != len(c):
                raise ValueError(f"cycle {tuple(c)!r} repeats a vertex")
            keys = [vertex_key(x) for x in c]
            n = len(c)
            for i in range(n):
                j = (i + 1) % n
                counts[(c[i], c[j]) if keys[i] < keys[j] else (c[j], c[i])] += 1
    return counts


def canonicalize(cycle: Sequence[Vertex]) -> Cycle:
    """Least rotation, over both orientations, under ``vertex_key`` order."""
    if not cycle:
        return ()
    keyed = [vertex_key(x) for x in cycle]
    n = len(cycle)
    best = None
    best_key = None
    for seq, keys in ((list(cycle), keyed), (list(reversed(cycle)), keyed[::-1])):
        for i in range(n):
            cand_key = keys[i:] + keys[:i]
            if best_key is None or cand_key < best_key:
                best_key = cand_key
                best = seq[i:] + seq[:i]
    return tuple(best)


def same_cycle(c1: Sequence[Vertex], c2: Sequence[Vertex]) -> bool:
    """True if the two vertex lists describe the same undirected cycle."""
    return len(c1) == len(c2) and canonicalize(c1) == canonicalize(c2)
