"""Assembly of an almost resolvable k-cycle system from two base factors.

Given factors F1, F2 on (Z_k x Z_4) u {inf} that satisfy five difference
conditions, the 2k translates ``F_i + (l, 0)`` are almost parallel classes,
and the two full orbits of steps ``d2`` and ``d3`` on levels 2 and 3 form
the half-parallel class.  Together they partition E(K_{4k+1}).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from arcs.core import (
    INF,
    LEVELS,
    Cycle,
    CycleClass,
    Factor,
    Point,
    difference_profile,
    edges,
    ground_set,
    translate,
    vertex_key,
)

CONDITIONS = ("i", "ii", "iii", "iv", "v")


class ConditionError(ValueError):
    """Raised when assembly is attempted on an input that fails a condition."""


@dataclass(frozen=True)
class LemmaAInput:
    k: int
    f1: Factor
    f2: Factor
    a1b1: Point
    a2b2: Point
    d2: int
    d3: int
    label: str = ""

    @property
    def v(self) -> int:
        return 4 * self.k + 1

    @property
    def base_cycles(self) -> tuple[Cycle, ...]:
        return self.f1.cycles + self.f2.cycles


@dataclass
class ConditionResult:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)


@dataclass
class ConditionReport:
    results: dict[str, ConditionResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failures(self) -> list[ConditionResult]:
        return [r for r in self.results.values() if not r.passed]

    def lines(self) -> list[str]:
        out = []
        for name in CONDITIONS:
            r = self.results[name]
            line = f"condition ({name}): {'PASS' if r.passed else 'FAIL'}"
            out.append(line)
            out.extend(f"    {d}" for d in r.details)
        return out


@dataclass(frozen=True)
class ArcsSystem:
    k: int
    almost_parallel_classes: tuple[CycleClass, ...]
    half_parallel_class: CycleClass

    @property
    def v(self) -> int:
        return 4 * self.k + 1


def _multiset_diff(actual: Counter, expected: Counter) -> list[str]:
    missing = sorted((expected - actual).elements())
    extra = sorted((actual - expected).elements())
    out = []
    if missing:
        out.append(f"missing {missing}")
    if extra:
        out.append(f"extra {extra}")
    return out


def _check_cover(f: Factor, hole: Point, which: str) -> list[str]:
    covered = [x for c in f.cycles for x in c]
    problems = []
    if len(set(covered)) != len(covered):
        dup = sorted((x for x, m in Counter(covered).items() if m > 1), key=vertex_key)
        problems.append(f"{which}: vertices covered twice {dup}")
    expected = set(ground_set(f.k)) - {hole}
    got = set(covered)
    if got - expected:
        problems.append(f"{which}: covers {sorted(got - expected, key=vertex_key)} which should be absent")
    if expected - got:
        problems.append(f"{which}: misses {sorted(expected - got, key=vertex_key)}")
    return problems


def check_conditions(inp: LemmaAInput) -> ConditionReport:
    """Evaluate conditions (i)-(v) literally, with multiset equality."""
    k = inp.k
    results: dict[str, ConditionResult] = {}

    details = _check_cover(inp.f1, inp.a1b1, "F1") + _check_cover(inp.f2, inp.a2b2, "F2")
    results["i"] = ConditionResult("i", not details, details)

    nbrs = []
    for c in inp.base_cycles:
        for u, w in edges(c):
            if u is INF:
                nbrs.append(w)
            elif w is INF:
                nbrs.append(u)
    levels = {x.b for x in nbrs}
    details = []
    if levels != set(range(LEVELS)):
        details.append(
            f"inf has neighbours {sorted(nbrs, key=vertex_key)}; "
            f"levels {sorted(set(range(LEVELS)) - levels)} not reached"
        )
    results["ii"] = ConditionResult("ii", not details, details)

    profile = difference_profile(inp.base_cycles, k)
    nonzero = Counter(range(1, k))

    details = []
    for p in (0, 1):
        for d in _multiset_diff(profile[p, p], nonzero):
            details.append(f"Delta({p},{p}): {d}")
    results["iii"] = ConditionResult("iii", not details, details)

    details = []
    for q, dq in ((2, inp.d2), (3, inp.d3)):
        if math.gcd(dq, k) != 1:
            details.append(f"d{q}={dq} is not coprime to k={k}")
        expected = nonzero - Counter({dq % k: 1, (-dq) % k: 1})
        for d in _multiset_diff(profile[q, q], expected):
            details.append(f"Delta({q},{q}): {d}")
    results["iv"] = ConditionResult("iv", not details, details)

    details = []
    everything = Counter(range(k))
    for r in range(LEVELS):
        for s in range(LEVELS):
            if r != s:
                for d in _multiset_diff(profile[r, s], everything):
                    details.append(f"Delta({r},{s}): {d}")
    results["v"] = ConditionResult("v", not details, details)

    return ConditionReport(results)


def missing_differences(inp: LemmaAInput, level: int) -> list[int]:
    """Residues of Z_k absent from the same-level multiset at ``level``."""
    profile = difference_profile(inp.base_cycles, inp.k)
    return sorted(set(range(inp.k)) - set(profile[level, level]))


def level_pair_counts(cycles) -> Counter:
    """Number of edges between each unordered level pair ``(r, s)``, r <= s."""
    out: Counter = Counter()
    for c in cycles:
        for u, w in edges(c):
            if u is INF or w is INF:
                out["inf"] += 1
            else:
                out[tuple(sorted((u.b, w.b)))] += 1
    return out


def counting_identity(inp: LemmaAInput) -> list[str]:
    """Edge-count prerequisites for (iii)-(v); an empty list means they hold.

    Levels 0 and 1 need (k-1)/2 internal edges, levels 2 and 3 need (k-3)/2,
    each mixed level pair needs k edges, and inf has degree 4.
    """
    k = inp.k
    counts = level_pair_counts(inp.base_cycles)
    want: dict = {"inf": 4}
    for r in range(LEVELS):
        want[r, r] = (k - 1) // 2 if r < 2 else (k - 3) // 2
        for s in range(r + 1, LEVELS):
            want[r, s] = k
    return [f"{key}: {counts.get(key, 0)} edges, expected {n}" for key, n in want.items() if counts.get(key, 0) != n]


def half_parallel_class(k: int, d2: int, d3: int) -> CycleClass:
    """The two orbit cycles ((0,q), (d_q,q), (2d_q,q), ...) for q = 2, 3."""
    out = []
    for q, dq in ((2, d2), (3, d3)):
        if math.gcd(dq, k) != 1:
            raise ValueError(f"d{q}={dq} is not coprime to k={k}; the orbit does not close at length k")
        out.append(tuple(Point(j * dq % k, q) for j in range(k)))
    return tuple(out)


def assemble(inp: LemmaAInput, report: Optional[ConditionReport] = None) -> ArcsSystem:
    """Develop F1 and F2 under Z_k x {0} and attach the half-parallel class.

    Conditions are always re-checked; pass ``report`` only to reuse one
    already computed for this very input.
    """
    if report is None:
        report = check_conditions(inp)
    if not report.passed:
        msgs = [f"({r.name}) " + "; ".join(r.details) for r in report.failures()]
        raise ConditionError(f"k={inp.k} {inp.label}: condition failure: " + " | ".join(msgs))
    k = inp.k
    classes = []
    for f in (inp.f1, inp.f2):
        for shift in range(k):
            classes.append(tuple(translate(c, shift, k) for c in f.cycles))
    return ArcsSystem(k, tuple(classes), half_parallel_class(k, inp.d2, inp.d3))
