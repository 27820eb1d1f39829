"""Definition-level certification of an almost resolvable k-cycle system.

Nothing here reuses the translation or difference machinery: edges are
recounted from the raw vertex lists into a dense triangular table indexed by
a fixed vertex enumeration (``inf`` -> 0, ``(a, b)`` -> ``1 + b*k + a``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from arcs.core import INF, Point

MAX_LISTED = 10  # offending items shown per check


def vertex_index(x: object, k: int) -> Optional[int]:
    """Position of ``x`` in the fixed enumeration, or None for a foreign object."""
    if x is INF:
        return 0
    if type(x) is Point:
        a, b = x
        if type(a) is int and type(b) is int and 0 <= a < k and 0 <= b < 4:
            return 1 + b * k + a
    return None


def index_vertex(i: int, k: int):
    if i == 0:
        return INF
    b, a = divmod(i - 1, k)
    return Point(a, b)


def _index_cycles(cycles: Iterable[Sequence[object]], k: int) -> list[list[Optional[int]]]:
    return [[vertex_index(x, k) for x in c] for c in cycles]


def _edges_of(indexed: Iterable[list[Optional[int]]]) -> tuple[list[int], list[int], int]:
    """Closed-walk edges of index cycles, minus those with a foreign or repeated endpoint."""
    us: list[int] = []
    ws: list[int] = []
    skipped = 0
    for idx in indexed:
        n = len(idx)
        for t in range(n):
            a, b = idx[t], idx[(t + 1) % n]
            if a is None or b is None or a == b:
                skipped += 1
            else:
                us.append(a)
                ws.append(b)
    return us, ws, skipped


def _pair_position(lo: np.ndarray, hi: np.ndarray, v: int) -> np.ndarray:
    return lo * v - lo * (lo + 1) // 2 + (hi - lo - 1)


class EdgeTable:
    """Multiplicity of every unordered pair of distinct vertices of K_v."""

    def __init__(self, k: int, counts: Optional[np.ndarray] = None) -> None:
        self.k = k
        self.v = 4 * k + 1
        size = self.v * (self.v - 1) // 2
        self.counts = np.zeros(size, dtype=np.int64) if counts is None else counts
        if self.counts.shape != (size,):
            raise ValueError(f"table for v={self.v} needs {size} entries, got {self.counts.shape}")

    @classmethod
    def from_edges(cls, k: int, u: Sequence[int], w: Sequence[int]) -> "EdgeTable":
        """Table of the given edges (parallel index arrays, no self-pairs)."""
        table = cls(k)
        u = np.asarray(u, dtype=np.int64)
        w = np.asarray(w, dtype=np.int64)
        if u.size:
            if np.any(u == w):
                raise ValueError("self-pairs are not edges of K_v")
            lo, hi = np.minimum(u, w), np.maximum(u, w)
            table.counts += np.bincount(_pair_position(lo, hi, table.v), minlength=table.counts.size)
        return table

    @classmethod
    def from_cycles(cls, k: int, cycles: Iterable[Sequence[object]]) -> tuple["EdgeTable", int]:
        """Count closed-walk edges of raw vertex cycles; also return the number skipped.

        An edge is skipped when an endpoint is not a vertex of K_v or both
        endpoints coincide.
        """
        us, ws, skipped = _edges_of(_index_cycles(cycles, k))
        return cls.from_edges(k, us, ws), skipped

    def multiplicity(self, u: int, w: int) -> int:
        if u == w:
            raise ValueError("no self-pairs in K_v")
        lo, hi = min(u, w), max(u, w)
        return int(self.counts[lo * self.v - lo * (lo + 1) // 2 + (hi - lo - 1)])

    def merge(self, other: "EdgeTable") -> "EdgeTable":
        """Sum of two partial tables; associative and commutative."""
        if other.v != self.v:
            raise ValueError("cannot merge tables of different order")
        return EdgeTable(self.k, self.counts + other.counts)

    def _pairs_where(self, mask: np.ndarray) -> Iterator[tuple[int, int, int]]:
        pos = np.flatnonzero(mask)
        if pos.size == 0:
            return
        # row lo starts at offset lo*v - lo*(lo+1)/2
        starts = np.array([i * self.v - i * (i + 1) // 2 for i in range(self.v)], dtype=np.int64)
        lo = np.searchsorted(starts, pos, side="right") - 1
        hi = pos - starts[lo] + lo + 1
        for a, b, p in zip(lo.tolist(), hi.tolist(), pos.tolist()):
            yield a, b, int(self.counts[p])

    def nonzero_pairs(self) -> Iterator[tuple[int, int, int]]:
        """(u, w, multiplicity) with u < w, in increasing order."""
        return self._pairs_where(self.counts != 0)

    def duplicated_pairs(self) -> list[tuple[int, int, int]]:
        return list(self._pairs_where(self.counts > 1))

    def missing_pairs(self) -> list[tuple[int, int, int]]:
        return list(self._pairs_where(self.counts == 0))

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ClassResult:
    kind: str
    index: int
    checks: list[CheckResult]
    missing: Optional[object] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass
class VerificationReport:
    checks: list[CheckResult]
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def lines(self) -> list[str]:
        out = [f"verdict: {self.verdict}"]
        for c in self.checks:
            line = f"  {c.name}: {'PASS' if c.passed else 'FAIL'}"
            out.append(line + (f" ({c.detail})" if c.detail else ""))
        s = self.stats
        out.append(
            f"  k={s.get('k')} v={s.get('v')} almost_classes={s.get('almost_classes')} "
            f"half_cycles={s.get('half_cycles')} edges={s.get('edges')}"
        )
        return out


def _fmt(items: list, limit: int = MAX_LISTED) -> str:
    shown = ", ".join(repr(x) for x in items[:limit])
    return shown + (f", ... ({len(items)} total)" if len(items) > limit else "")


def verify_class(cycles: Sequence[Sequence[object]], v: int, k: int, kind: str, index: int = 0) -> ClassResult:
    """Shape checks for one class; ``kind`` is ``"almost"`` or ``"half"``."""
    if kind not in ("almost", "half"):
        raise ValueError(f"kind must be 'almost' or 'half', got {kind!r}")
    return _check_class(cycles, _index_cycles(cycles, k), v, k, kind, index)


def _check_class(cycles, indexed, v: int, k: int, kind: str, index: int) -> ClassResult:
    want = (v - 1) // k if kind == "almost" else (v - 1) // (2 * k)
    checks = [
        CheckResult("cycle count", len(cycles) == want, f"{len(cycles)} cycles, expected {want}"),
    ]

    bad_len = [i for i, c in enumerate(cycles) if len(c) != k]
    checks.append(CheckResult("cycle length", not bad_len, f"cycles {bad_len} not of length {k}" if bad_len else ""))

    foreign = [x for c, idx in zip(cycles, indexed) for x, j in zip(c, idx) if j is None]
    checks.append(
        CheckResult("vertex validity", not foreign, f"not vertices of K_{v}: {_fmt(foreign)}" if foreign else "")
    )

    repeated = [i for i, idx in enumerate(indexed) if len(set(idx)) != len(idx)]
    checks.append(
        CheckResult("distinct vertices", not repeated, f"cycles {repeated} repeat a vertex" if repeated else "")
    )

    seen: dict[int, int] = {}
    shared = set()
    for i, idx in enumerate(indexed):
        for j in set(idx) - {None}:
            if j in seen and seen[j] != i:
                shared.add(j)
            seen.setdefault(j, i)
    shared_v = [index_vertex(j, k) for j in sorted(shared)]
    checks.append(
        CheckResult("disjointness", not shared, f"shared by two cycles: {_fmt(shared_v)}" if shared else "")
    )

    missing = None
    if kind == "almost":
        absent = [j for j in range(v) if j not in seen]
        ok = len(absent) == 1
        if ok:
            missing = index_vertex(absent[0], k)
            detail = f"missing vertex {missing!r}"
        else:
            detail = f"{len(absent)} vertices uncovered: {_fmt([index_vertex(j, k) for j in absent])}"
        checks.append(CheckResult("coverage", ok, detail))
    else:
        covered = len(seen)
        checks.append(CheckResult("coverage", covered == 2 * k, f"{covered} vertices covered, expected {2 * k}"))
    return ClassResult(kind, index, checks, missing)


def _all_cycles(system) -> list[Sequence[object]]:
    cycles = [c for cls in system.almost_parallel_classes for c in cls]
    cycles.extend(system.half_parallel_class or ())
    return cycles


def edge_table(system) -> EdgeTable:
    """Recount every edge of the system; one partial table per class, merged."""
    table = EdgeTable(system.k)
    classes = list(system.almost_parallel_classes)
    if system.half_parallel_class:
        classes.append(system.half_parallel_class)
    for cls in classes:
        table = table.merge(EdgeTable.from_cycles(system.k, cls)[0])
    return table


def verify_arcs(system) -> VerificationReport:
    """Check class counts, each class, the global edge partition and the vertex set."""
    k = system.k
    v = 4 * k + 1
    almost = list(system.almost_parallel_classes)
    half = system.half_parallel_class
    checks: list[CheckResult] = []

    n_half = 1 if half else 0
    ok = len(almost) == (v - 1) // 2 and n_half == 1
    checks.append(
        CheckResult(
            "class counts",
            ok,
            f"{len(almost)} almost parallel classes (expected {(v - 1) // 2}), "
            f"{n_half} half-parallel class (expected 1)",
        )
    )

    indexed = [_index_cycles(cls, k) for cls in almost]
    results = [_check_class(cls, idx, v, k, "almost", i) for i, (cls, idx) in enumerate(zip(almost, indexed))]
    bad = [r for r in results if not r.passed]
    detail = ""
    if bad:
        first = bad[0]
        why = "; ".join(f"{c.name}: {c.detail}" for c in first.checks if not c.passed)
        detail = f"classes {_fmt([r.index for r in bad])} fail; class {first.index}: {why}"
    checks.append(CheckResult("almost parallel classes", not bad, detail))

    if half:
        half_idx = _index_cycles(half, k)
        indexed.append(half_idx)
        hr = _check_class(half, half_idx, v, k, "half", 0)
        why = "; ".join(f"{c.name}: {c.detail}" for c in hr.checks if not c.passed)
        checks.append(CheckResult("half-parallel class", hr.passed, why))
    else:
        checks.append(CheckResult("half-parallel class", False, "absent"))

    flat = [idx for cls in indexed for idx in cls]
    us, ws, skipped = _edges_of(flat)
    table = EdgeTable.from_edges(k, us, ws)
    dup = table.duplicated_pairs()
    miss = table.missing_pairs()
    parts = [f"{table.total} edges counted over {table.counts.size} pairs"]
    if dup:
        parts.append(f"{len(dup)} pairs covered more than once: " + _fmt([_pair_repr(u, w, m, k) for u, w, m in dup]))
    if miss:
        parts.append(f"{len(miss)} pairs uncovered: " + _fmt([_pair_repr(u, w, None, k) for u, w, _ in miss]))
    if skipped:
        parts.append(f"{skipped} degenerate or foreign edges")
    checks.append(CheckResult("edge partition", not dup and not miss and not skipped, "; ".join(parts)))

    seen = {j for idx in flat for j in idx}
    foreign = [x for c in _all_cycles(system) for x in c if vertex_index(x, k) is None] if None in seen else []
    absent = [index_vertex(j, k) for j in range(v) if j not in seen]
    ok = not foreign and not absent
    detail = []
    if absent:
        detail.append(f"never used: {_fmt(absent)}")
    if foreign:
        detail.append(f"foreign: {_fmt(foreign)}")
    checks.append(CheckResult("vertex set", ok, "; ".join(detail)))

    stats = {
        "k": k,
        "v": v,
        "almost_classes": len(almost),
        "half_cycles": len(half) if half else 0,
        "edges": table.total,
        "missing_vertices": [r.missing for r in results],
    }
    return VerificationReport(checks, stats)


def _pair_repr(u: int, w: int, m: Optional[int], k: int) -> str:
    s = f"{{{index_vertex(u, k)!r}, {index_vertex(w, k)!r}}}"
    return s if m is None else f"{s} x{m}"
