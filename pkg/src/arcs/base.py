"""Shared plumbing for the two construction families."""

from __future__ import annotations

from typing import Mapping, Union

from arcs.core import INF, Factor, Point, validate_cycle
from arcs.lemma import LemmaAInput, check_conditions
from arcs.sequences import SequenceError, expand_cycle, parse_literal_cycle

MIN_K = 11


class UnsupportedK(ValueError):
    """k lies outside the range the constructions cover."""


class ConstructionError(RuntimeError):
    """A generated cycle or factor is malformed; always a transcription bug."""


def check_k(k: int) -> None:
    if k % 2 == 0:
        raise UnsupportedK(f"k must be odd (got k={k}); supported: odd k >= {MIN_K}")
    if k < MIN_K:
        raise UnsupportedK(f"k={k} is out of range; supported: odd k >= {MIN_K} (k >= 13 when k = 1 mod 4)")


def is_supported(k: int) -> bool:
    try:
        check_k(k)
    except UnsupportedK:
        return False
    return True


def build_input(
    k: int,
    specs: Mapping[str, Union[str, tuple]],
    a1b1: Point,
    a2b2: Point,
    d2: int,
    d3: int,
    label: str,
) -> LemmaAInput:
    """Expand C1..C8, check their shape, and confirm the difference conditions."""
    n = k // 4
    cycles = {}
    for name in ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"):
        spec = specs[name]
        try:
            if isinstance(spec, str):
                cycle = parse_literal_cycle(spec, k)
            else:
                cycle = expand_cycle(spec, k, n)
            validate_cycle(cycle, k)
        except (SequenceError, ValueError) as exc:
            raise ConstructionError(f"k={k} [{label}] {name}: {exc}") from exc
        cycles[name] = cycle

    factors = []
    for which, names, hole in (("F1", ("C1", "C2", "C3", "C4"), a1b1), ("F2", ("C5", "C6", "C7", "C8"), a2b2)):
        try:
            factors.append(Factor(k, tuple(cycles[c] for c in names), hole))
        except ValueError as exc:
            raise ConstructionError(f"k={k} [{label}] {which}: {exc}") from exc
        if sum(INF in cycles[c] for c in names) != 1:
            raise ConstructionError(f"k={k} [{label}] {which}: inf must lie on exactly one cycle")

    inp = LemmaAInput(k, factors[0], factors[1], a1b1, a2b2, d2, d3, label)
    report = check_conditions(inp)
    if not report.passed:
        raise ConstructionError(f"k={k} [{label}] difference conditions fail:\n" + "\n".join(report.lines()))
    return inp
