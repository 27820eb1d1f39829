"""Base factors for k = 4n+1, k >= 13.

F1 = {C1, C2, C3, C4} misses (0, 3); F2 = {C5, C6, C7, C8} misses (0, 2);
d2 = 2 and d3 = (k-1)/2.  C1-C6 have one formula for every k.  C7 and C8
depend on k mod 8 (Case 1: k = 5 mod 8, Case 2: k = 1 mod 8) and, for C8, on
k mod 24; a handful of small k use explicit listings instead.
"""

from __future__ import annotations

import enum

from arcs.base import build_input, check_k
from arcs.core import Point
from arcs.lemma import LemmaAInput
from arcs.sequences import fixed, run


class CaseTag1(enum.Enum):
    HARD13 = "Hard13"
    HARD25 = "Hard25"
    HARD17 = "Hard17"
    HARD21 = "Hard21"
    HARD29 = "Hard29"
    HARD33 = "Hard33"
    HARD41 = "Hard41"
    C1_1 = "C1_1"  # k = 5 mod 24, k >= 53
    C1_2 = "C1_2"  # k = 13 mod 24, k >= 37
    C1_3 = "C1_3"  # k = 21 mod 24, k >= 45
    C2_1 = "C2_1"  # k = 1 mod 24, k >= 49
    C2_2 = "C2_2"  # k = 9 mod 24, k >= 57
    C2_3 = "C2_3"  # k = 17 mod 24, k >= 65


C1 = (
    run("T1", "(n-i,0),(-(n-i),1)", "n-1"),
    fixed("(0,0)"),
    run("T2", "(1+i,1),(-(1+i),0)", "n-1"),
)
C2 = (
    run("T1", "(1+i,2),(-(1+i),3)", "n-1"),
    run("T2", "(-(n-i),2),(n-i,3)", "n-1"),
    fixed("(0,2)"),
)
C3 = (
    run("T1", "(n+1+i,1),(-(n+1+i),2)", "n-2"),
    run("T2", "(-(2n-i),1),(2n-i,2)", "n-1"),
    fixed("(-2n,0),(-2n,2),(0,1)", "T3"),
)
C4 = (
    fixed("inf"),
    run("T1", "(-(2n-i),3),(2n-i,3)", "n-1"),
    run("T2", "(n+1+i,0),(-(n+1+i),0)", "n-2"),
    fixed("(2n,0),(2n,1)", "T3"),
)
C5 = (
    run("T1", "(n-i,1),(-(n-i),3)", "n-1"),
    fixed("(0,1)"),
    run("T2", "(1+i,3),(-(1+i),1)", "n-1"),
)
C6 = (
    run("T1", "(-(n+1+i),0),(n+1+i,3)", "n-2"),
    fixed("(-2n,0),(0,3)", "T2"),
    run("T3", "(2n-i,0),(-(2n-i),3)", "n-1"),
    fixed("(-n,0)"),
)

# k = 5 mod 8 (n odd)
C7_CASE1 = (
    fixed("(-(2n-3),2),(-(2n-1),1)", "S1"),
    run("S2", "(1+i,2),(-(1+i),0)", "(n-3)/2"),
    run("S3", "(-((n+1)/2+i),2),((n+1)/2+i,0)", "(n-3)/2"),
    fixed("(2n-1,2),(0,0),(-(2n-1),2)", "S4"),
    run("S5", "(1+i,0),(-(1+i),2)", "(n-3)/2"),
    run("S6", "(-((n+1)/2+i),0),((n+1)/2+i,2)", "(n-3)/2"),
)

# k = 1 mod 8 (n even)
C7_CASE2 = (
    fixed("(-(2n-3),2),(-(2n-1),1)", "S1"),
    run("S2", "(1+i,2),(-(1+i),0)", "n-2"),
    fixed("(-n,2)"),
    run("S3", "(1+i,0),(-(1+i),2)", "(n-4)/2"),
    fixed("(n/2,0),(-3n/2,2)", "S4"),
    run("S5", "((n+2)/2+i,0),(-((n+2)/2+i),2)", "(n-4)/2"),
    fixed("(n,0),(n+1,2)", "S6"),
)

_C8_CASE1_HEAD = (
    fixed("inf"),
    fixed("(n,0),(-(n+1),2)", "T1"),
    run("T2", "(-(n+1+i),1),(n+1+i,1)", "(n-3)/2"),
)
# the i = 0 instance is printed with an unbalanced ")" in its fourth vertex
_T3_CASE1 = "((3n+5)/2+3i,1),(-((3n+5)/2+3i),1),((3n+3)/2+3i,1),(-((3n+3)/2+3i),1),((3n+1)/2+3i,1),(-((3n+1)/2+3i),1)"
_T5_CASE1 = "(n+2+3i,2),(-(n+2+3i),2),(n+1+3i,2),(-(n+4+3i),2),(n+3+3i,2),(-(n+3+3i),2)"

C8_CASE1_1 = _C8_CASE1_HEAD + (
    run("T3", _T3_CASE1, "(n-19)/6"),
    fixed(
        "(2n-4,1),(-(2n-3),1),(2n-3,1),(-(2n-2),1),(2n-2,1),(-(2n-6),1),(2n-6,1),(-(2n-5),1),"
        "(2n-5,1),(-(2n-4),1),(-2n,1),(2n-1,1),(2n,1),(2n,3),(-2n,2),(n,2),(-n,2)",
        "T4",
    ),
    run("T5", _T5_CASE1, "(n-13)/6"),
    fixed("((3n-3)/2,2),(-(3n-3)/2,2),((3n-1)/2,2),(-(3n-1)/2,2),((3n+3)/2,2),((3n-5)/2,2)", "T6"),
    run(
        "T7",
        "((3n+5)/2+3i,2),(-((3n+3)/2+3i),2),((3n+1)/2+3i,2),(-((3n+5)/2+3i),2),((3n+9)/2+3i,2),(-((3n+1)/2+3i),2)",
        "(n-19)/6",
    ),
    fixed(
        "(2n-4,2),(-(2n-2),2),(2n,2),(-(2n-5),2),(2n-6,2),(-(2n-4),2),(2n-3,2),(-(2n-6),2),(2n-2,2)",
        "T8",
    ),
)

C8_CASE1_2 = _C8_CASE1_HEAD + (
    run("T3", _T3_CASE1, "(n-9)/6"),
    fixed("(-2n,1),(2n-1,1),(2n,1),(2n,3),(-2n,2),(n,2),(-n,2)", "T4"),
    run("T5", _T5_CASE1, "(n-15)/6"),
    fixed(
        "((3n-5)/2,2),(-(3n-5)/2,2),((3n-7)/2,2),((3n+5)/2,2),((3n-3)/2,2),(-(3n-3)/2,2),((3n-1)/2,2)",
        "T6",
    ),
    run(
        "T7",
        "(-((3n-1)/2+3i),2),((3n+11)/2+3i,2),(-((3n+1)/2+3i),2),((3n+1)/2+3i,2),(-((3n+3)/2+3i),2),((3n+3)/2+3i,2)",
        "(n-15)/6",
    ),
    fixed("(-(2n-5),2),(2n-3,2),(-(2n-4),2),(2n,2),(-(2n-2),2),(2n-4,2)", "T8"),
)

C8_CASE1_3 = _C8_CASE1_HEAD + (
    run("T3", _T3_CASE1, "(n-17)/6"),
    fixed(
        "(2n-3,1),(-(2n-3),1),(2n-2,1),(-(2n-2),1),(2n-5,1),(-(2n-5),1),(2n-4,1),(-(2n-4),1),"
        "(-2n,1),(2n-1,1),(2n,1),(2n,3),(-2n,2),(n,2),(-n,2)",
        "T4",
    ),
    run("T5", _T5_CASE1, "(n-17)/6"),
    fixed(
        "((3n-7)/2,2),(-(3n-7)/2,2),((3n-9)/2,2),(-(3n-3)/2,2),((3n-1)/2,2),(-(3n-5)/2,2),((3n-5)/2,2),"
        "((3n+3)/2,2),((3n-3)/2,2),(-(3n+1)/2,2),((3n+1)/2,2)",
        "T6",
    ),
    run(
        "T7",
        "(-((3n+3)/2+3i),2),((3n+7)/2+3i,2),(-((3n-1)/2+3i),2),((3n+9)/2+3i,2),(-((3n+7)/2+3i),2),((3n+5)/2+3i,2)",
        "(n-17)/6",
    ),
    fixed("(-(2n-4),2),(2n-3,2),(-(2n-2),2),(2n-2,2),(-(2n-6),2),(2n,2)", "T8"),
)

_C8_CASE2_HEAD = (
    fixed("inf"),
    fixed("(0,0),(2n-1,2),(2n-1,1)", "T1"),
)
_T2_CASE2 = "(-(n+2+3i),1),(n+3+3i,1),(-(n+3+3i),1),(n+1+3i,1),(-(n+1+3i),1),(n+2+3i,1)"
_T8_CASE2_23 = (
    "((3n+2)/2+3i,2),(-((3n+8)/2+3i),2),((3n+6)/2+3i,2),(-((3n+6)/2+3i),2),((3n+10)/2+3i,2),(-((3n-2)/2+3i),2)"
)

C8_CASE2_1 = _C8_CASE2_HEAD + (
    run("T2", _T2_CASE2, "(n-12)/6"),
    fixed(
        "(-(3n-2)/2,1),(3n/2,1),((3n-2)/2,1),(-(3n-4)/2,1),((3n-4)/2,1),(-3n/2,1),((3n+4)/2,1),"
        "(-(3n+2)/2,1),(-(3n+6)/2,1),((3n+2)/2,1)",
        "T3",
    ),
    run(
        "T4",
        "(-((3n+8)/2+3i),1),((3n+8)/2+3i,1),(-((3n+4)/2+3i),1),((3n+10)/2+3i,1),(-((3n+12)/2+3i),1),((3n+6)/2+3i,1)",
        "(n-18)/6",
    ),
    fixed("(-(2n-2),1),(2n-3,1),(-2n,1),(2n-2,1),(-(2n-4),1),(2n,1),(2n,3),(-2n,2),(n,2)", "T5"),
    run("T6", "(n+4+3i,2),(-(n+3+3i),2),(n+3+3i,2),(-(n+2+3i),2),(n+2+3i,2),(-(n+1+3i),2)", "(n-12)/6"),
    fixed("((3n+2)/2,2),(-n/2,2),((3n-2)/2,2),(-(3n-4)/2,2),((3n+8)/2,2),(-(3n-2)/2,2),(3n/2,2)", "T7"),
    run(
        "T8",
        "(-((3n+2)/2+3i),2),((3n+14)/2+3i,2),(-((3n+4)/2+3i),2),((3n+4)/2+3i,2),(-((3n+6)/2+3i),2),((3n+6)/2+3i,2)",
        "(n-18)/6",
    ),
    fixed("(-(2n-5),2),(2n,2),(-(2n-2),2),(2n-4,2),(-(2n-4),2),(2n-3,2),(-(2n-1),2)", "T9"),
)

C8_CASE2_2 = _C8_CASE2_HEAD + (
    run("T2", _T2_CASE2, "(n-8)/6"),
    fixed("(-(3n+2)/2,1),(-3n/2,1),((3n+4)/2,1)", "T3"),
    run(
        "T4",
        "(3n/2+3i,1),(-((3n+8)/2+3i),1),((3n+2)/2+3i,1),(-((3n+4)/2+3i),1),((3n+10)/2+3i,1),(-((3n+6)/2+3i),1)",
        "(n-14)/6",
    ),
    fixed(
        "(2n-4,1),(-2n,1),(2n-3,1),(-(2n-2),1),(2n,1),(2n,3),(-2n,2),(n,2),(n+3,2),(-(n+2),2),(n+2,2)",
        "T5",
    ),
    run("T6", "(-(n+1+3i),2),(n+5+3i,2),(-(n+5+3i),2),(n+6+3i,2),(-(n+3+3i),2),(n+4+3i,2)", "(n-14)/6"),
    fixed("(-(3n-6)/2,2),((3n+4)/2,2),(-n/2,2),(3n/2,2),(-(3n+2)/2,2)", "T7"),
    run("T8", _T8_CASE2_23, "(n-20)/6"),
    fixed(
        "(2n-6,2),(-(2n-4),2),(2n-3,2),(-(2n-8),2),(2n,2),(-(2n-5),2),(2n-4,2),(-(2n-2),2),"
        "(2n-2,2),(-(2n-1),2)",
        "T9",
    ),
)

C8_CASE2_3 = _C8_CASE2_HEAD + (
    run("T2", _T2_CASE2, "(n-10)/6"),
    fixed("(-3n/2,1),((3n-2)/2,1),(-(3n-2)/2,1),((3n+6)/2,1),(3n/2,1)", "T3"),
    run(
        "T4",
        "((3n+2)/2+3i,1),(-((3n+6)/2+3i),1),((3n+4)/2+3i,1),(-((3n+2)/2+3i),1),((3n+12)/2+3i,1),(-((3n+4)/2+3i),1)",
        "(n-16)/6",
    ),
    fixed(
        "(2n-4,1),(-(2n-3),1),(2n-3,1),(-(2n-2),1),(-2n,1),(-(2n-4),1),(2n,1),(2n,3),(-2n,2),(n,2),"
        "(n+3,2),(-(n+3),2),(n+4,2),(-(n+1),2),(n+2,2)",
        "T5",
    ),
    run("T6", "(-(n+2+3i),2),(n+6+3i,2),(-(n+6+3i),2),(n+7+3i,2),(-(n+4+3i),2),(n+5+3i,2)", "(n-16)/6"),
    fixed("(-(3n-6)/2,2),((3n+4)/2,2),(-n/2,2),(3n/2,2),(-(3n+2)/2,2)", "T7"),
    run("T8", _T8_CASE2_23, "(n-22)/6"),
    fixed(
        "(2n-7,2),(-(2n-2),2),(2n-5,2),(-(2n-6),2),(2n-4,2),(-(2n-9),2),(2n-3,2),(-(2n-5),2),"
        "(2n,2),(-(2n-4),2),(2n-2,2),(-(2n-1),2)",
        "T9",
    ),
)

# Explicit listings, signed residues as printed.
HARDCODED = {
    13: {
        "C7": "(1,2),(-5,1),(-5,2),(0,0),(3,2),(-2,0),(4,2),(3,0),(5,2),(1,0),(-3,2),(-1,0),(-2,2)",
        "C8": "inf,(2,0),(-4,2),(-6,1),(5,1),(4,1),(-4,1),(6,1),(6,3),(-6,2),(2,2),(6,2),(-1,2)",
    },
    25: {
        "C7": "(1,2),(-11,1),(-11,2),(0,0),(2,2),(1,0),(4,2),(5,0),(3,2),(6,0),(10,2),(2,0),(7,2),(-5,0),"
        "(5,2),(-4,0),(11,2),(4,0),(-8,2),(-1,0),(-10,2),(-2,0),(-7,2),(-3,0),(8,2)",
        "C8": "inf,(3,0),(9,2),(7,1),(-7,1),(8,1),(-8,1),(9,1),(11,1),(-10,1),(10,1),(-9,1),(-12,1),(12,1),"
        "(12,3),(-12,2),(-6,2),(6,2),(-3,2),(12,2),(-2,2),(-5,2),(-1,2),(-9,2),(-4,2)",
    },
    21: {
        "C8": "inf,(5,0),(-6,2),(-6,1),(6,1),(-7,1),(7,1),(9,1),(-8,1),(8,1),(-10,1),(10,1),(10,3),(-10,2),"
        "(8,2),(-5,2),(7,2),(-8,2),(6,2),(10,2),(5,2)",
    },
    29: {
        "C8": "inf,(7,0),(-8,2),(-8,1),(8,1),(-9,1),(9,1),(-10,1),(10,1),(-14,1),(-12,1),(13,1),(12,1),"
        "(-11,1),(11,1),(14,1),(14,3),(-14,2),(7,2),(11,2),(14,2),(8,2),(-7,2),(9,2),(-9,2),(10,2),"
        "(-10,2),(12,2),(-12,2)",
    },
    17: {
        "C8": "inf,(0,0),(7,2),(7,1),(6,1),(-8,1),(-6,1),(5,1),(-5,1),(8,1),(8,3),(-8,2),(6,2),(-2,2),"
        "(-7,2),(4,2),(8,2)",
    },
    33: {
        "C8": "inf,(0,0),(15,2),(15,1),(9,1),(-9,1),(10,1),(-10,1),(11,1),(-11,1),(12,1),(13,1),(-12,1),"
        "(14,1),(-14,1),(-16,1),(-13,1),(16,1),(16,3),(-16,2),(8,2),(12,2),(-14,2),(16,2),(-11,2),"
        "(14,2),(-9,2),(10,2),(-10,2),(11,2),(-4,2),(13,2),(-15,2)",
    },
    41: {
        "C8": "inf,(0,0),(19,2),(19,1),(-12,1),(13,1),(-13,1),(11,1),(-11,1),(12,1),(-15,1),(14,1),"
        "(-14,1),(18,1),(15,1),(16,1),(-17,1),(17,1),(-18,1),(-20,1),(-16,1),(20,1),(20,3),(-20,2),"
        "(10,2),(13,2),(-13,2),(14,2),(-11,2),(12,2),(-12,2),(17,2),(-5,2),(16,2),(-19,2),(18,2),"
        "(-14,2),(20,2),(-16,2),(15,2),(-18,2)",
    },
}

_GENERAL_C8 = {
    CaseTag1.C1_1: C8_CASE1_1,
    CaseTag1.C1_2: C8_CASE1_2,
    CaseTag1.C1_3: C8_CASE1_3,
    CaseTag1.C2_1: C8_CASE2_1,
    CaseTag1.C2_2: C8_CASE2_2,
    CaseTag1.C2_3: C8_CASE2_3,
}


def _require(k: int) -> None:
    check_k(k)
    if k % 4 != 1 or k < 13:
        raise ValueError(f"this family needs k = 1 (mod 4) and k >= 13, got k={k}")


def case_tag_mod1(k: int) -> CaseTag1:
    _require(k)
    if k in (13, 25, 17, 21, 29, 33, 41):
        return CaseTag1(f"Hard{k}")
    return {
        5: CaseTag1.C1_1,
        13: CaseTag1.C1_2,
        21: CaseTag1.C1_3,
        1: CaseTag1.C2_1,
        9: CaseTag1.C2_2,
        17: CaseTag1.C2_3,
    }[k % 24]


def parameters_mod1(k: int) -> tuple[Point, Point, int, int]:
    """((a1,b1), (a2,b2), d2, d3)."""
    _require(k)
    return Point(0, 3), Point(0, 2), 2, (k - 1) // 2


def cycle_specs_mod1(k: int) -> dict[str, object]:
    """Cycle name -> tuple of SequenceSpec, or a literal listing string."""
    tag = case_tag_mod1(k)
    specs: dict[str, object] = {"C1": C1, "C2": C2, "C3": C3, "C4": C4, "C5": C5, "C6": C6}
    if k in (13, 25):
        specs.update(HARDCODED[k])
        return specs
    specs["C7"] = C7_CASE1 if k % 8 == 5 else C7_CASE2
    specs["C8"] = HARDCODED[k]["C8"] if k in HARDCODED else _GENERAL_C8[tag]
    return specs


def build_factors_mod1(k: int) -> LemmaAInput:
    a1b1, a2b2, d2, d3 = parameters_mod1(k)
    return build_input(k, cycle_specs_mod1(k), a1b1, a2b2, d2, d3, case_tag_mod1(k).value)
