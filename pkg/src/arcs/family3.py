"""Base factors for k = 4n+3, k >= 11.

(a1, b1) = (0, 3) and d3 = (k-1)/2 throughout; (a2, b2) and d2 vary with the
case.  C1-C4 have one formula for every k and C5-C6 one formula for k >= 15.
C7 splits on k mod 8 (Case 1: k = 3 mod 8, Case 2: k = 7 mod 8) with its
tail and C8 depending on k mod 24.  Small k, and C8 for 31, 39, 47, 55, use
explicit listings.
"""

from __future__ import annotations

import enum

from arcs.base import build_input, check_k
from arcs.core import Point
from arcs.lemma import LemmaAInput
from arcs.sequences import fixed, run


class CaseTag3(enum.Enum):
    HARD11 = "Hard11"
    HARD15 = "Hard15"
    HARD19 = "Hard19"
    HARD23 = "Hard23"
    HARD27 = "Hard27"
    HARD35 = "Hard35"
    HARD31 = "Hard31"
    HARD55 = "Hard55"
    HARD39 = "Hard39"
    HARD47 = "Hard47"
    C1_1 = "C1_1"  # k = 3 mod 24, k >= 51
    C1_2 = "C1_2"  # k = 11 mod 24, k >= 59
    C1_3 = "C1_3"  # k = 19 mod 24, k >= 43
    C2_1 = "C2_1"  # k = 7 mod 24, k >= 79
    C2_2 = "C2_2"  # k = 15 mod 24, k >= 63
    C2_3 = "C2_3"  # k = 23 mod 24, k >= 71


C1 = (
    run("T1", "(n-i,0),(-(n-i),1)", "n-1"),
    fixed("(0,0)"),
    run("T2", "(1+i,1),(-(1+i),0)", "n"),
)
C2 = (
    run("T1", "(1+i,2),(-(1+i),3)", "n-1"),
    fixed("(n+1,2),(n+1,3)", "T2"),
    run("T3", "(-(n-i),2),(n-i,3)", "n-1"),
    fixed("(0,2)"),
)
C3 = (
    run("T1", "(n+2+i,1),(-(n+2+i),2)", "n-2"),
    run("T2", "(-(2n+1-i),1),(2n+1-i,2)", "n-1"),
    # printed with a stray ")" after (-(n+1),2)
    fixed("(-(n+1),1),(-(n+1),2),(-(2n+1),0),(-(2n+1),2),(0,1)", "T3"),
)
C4 = (
    fixed("inf"),
    run("T1", "(-(2n+1-i),3),(2n+1-i,3)", "n-1"),
    fixed("(-(n+1),3),(n+1,0)", "T2"),
    run("T3", "(n+2+i,0),(-(n+2+i),0)", "n-2"),
    fixed("(2n+1,0),(2n+1,1)", "T4"),
)
C5 = (
    fixed("(n+2,1),(-(n+1),3)", "T1"),
    run("T2", "(n-i,1),(-(n-i),3)", "n-1"),
    fixed("(0,1)"),
    run("T3", "(1+i,3),(-(1+i),1)", "n-2"),
    fixed("(n,3),(-(n+1),1)", "T4"),
)
C6 = (
    run("T1", "(-(n+2+i),0),(n+2+i,3)", "n-1"),
    fixed("(2n+1,0),(0,3),(-1,0),(-(2n+1),3)", "T2"),
    run("T3", "(2n-i,0),(-(2n-i),3)", "n-2"),
    fixed("(n+1,0)"),
)

# k = 3 mod 8 (n even): S1..S5, (-n/2, 0), then S6, S7 by subcase
_C7_CASE1_HEAD = (
    fixed("(1,2),(-(2n-1),1)", "S1"),
    run("S2", "(2+i,2),(-(2+i),0)", "(n-6)/2"),
    run("S3", "(n/2+i,2),(-((n+2)/2+i),0)", "n/2"),
    fixed("(n+3,2),(n,0),(n+1,2),(n-1,0),(-(n+1),2)", "S4"),
    run("S5", "(n-3-i,0),(-(n-i),2)", "(n-4)/2"),
    fixed("(-n/2,0)"),
)
_S6_CASE1 = (
    "(-((n+2)/2-3i),2),((n-8)/2-3i,0),(-(n/2-3i),2),((n-4)/2-3i,0),(-((n-8)/2-3i),2),((n-6)/2-3i,0)"
)

C7_CASE1_1 = _C7_CASE1_HEAD + (
    run("S6", _S6_CASE1, "(n-18)/6"),
    fixed("(-7,2),(3,0),(-6,2),(2,0),(-4,2),(0,0),(-3,2),(4,0),(-1,2),(n-2,0),(-2,2)", "S7"),
)
C7_CASE1_2 = _C7_CASE1_HEAD + (
    run("S6", _S6_CASE1, "(n-14)/6"),
    fixed("(-5,2),(0,0),(-4,2),(2,0),(-1,2),(n-2,0),(-2,2)", "S7"),
)
C7_CASE1_3 = _C7_CASE1_HEAD + (
    run("S6", _S6_CASE1, "(n-16)/6"),
    fixed("(-6,2),(0,0),(-3,2),(2,0),(-5,2),(3,0),(-1,2),(n-2,0),(-2,2)", "S7"),
)

_T6_CASE1 = "(n+2+3i,2),(-(n+4+3i),2),(n+4+3i,2),(-(n+3+3i),2),(n+6+3i,2),(-(n+5+3i),2)"

C8_CASE1_1 = (
    fixed("inf"),
    fixed("(1,0),(-2n,2),(2n+1,1),(-2n,1),(-(2n+1),1),(-(2n-3),1),(2n-1,1),(-(2n-2),1),(2n,1)", "T1"),
    run("T2", "(-(2n-5-3i),1),(2n-2-3i,1),(-(2n-4-3i),1),(2n-4-3i,1),(-(2n-6-3i),1),(2n-3-3i,1)", "(n-12)/6"),
    fixed("(3n/2,1),(-(3n-2)/2,1),((3n+2)/2,1)", "T3"),
    run(
        "T4",
        "(-((3n-6)/2-3i),1),((3n-2)/2-3i,1),(-((3n-4)/2-3i),1),((3n-6)/2-3i,1),(-((3n-8)/2-3i),1),((3n-4)/2-3i,1)",
        "(n-12)/6",
    ),
    fixed("(-n,1),(n+1,1),(n+1,3)", "T5"),
    run("T6", _T6_CASE1, "(n-12)/6"),
    fixed("((3n-2)/2,2),(-(3n+2)/2,2),((3n+2)/2,2),(-3n/2,2),((3n+8)/2,2),(-(n-2)/2,2)", "T7"),
    run(
        "T8",
        "((3n+4)/2+3i,2),(-((3n+8)/2+3i),2),((3n+6)/2+3i,2),(-((3n+4)/2+3i),2),((3n+14)/2+3i,2),(-((3n+6)/2+3i),2)",
        "(n-18)/6",
    ),
    fixed(
        "(2n-4,2),(-(2n-3),2),(2n-3,2),(-(2n-2),2),(0,2),(2n-1,2),(-(2n-1),2),(2n,2),(-(2n-4),2),"
        "(2n+1,2),(-(n+2),2)",
        "T9",
    ),
)

C8_CASE1_2 = (
    fixed("inf"),
    fixed(
        "(1,0),(-2n,2),(2n+1,1),(-2n,1),(2n,1),(-(2n-4),1),(-(2n+1),1),(-(2n-3),1),(2n-3,1),"
        "(-(2n-2),1),(2n-1,1)",
        "T1",
    ),
    run("T2", "(-(2n-7-3i),1),(2n-2-3i,1),(-(2n-5-3i),1),(2n-6-3i,1),(-(2n-6-3i),1),(2n-4-3i,1)", "(n-14)/6"),
    fixed("((3n+4)/2,1),(-(3n-4)/2,1)", "T3"),
    run(
        "T4",
        "(3n/2-3i,1),(-((3n-2)/2-3i),1),((3n-4)/2-3i,1),(-((3n-6)/2-3i),1),((3n-2)/2-3i,1),(-((3n-10)/2-3i),1)",
        "(n-14)/6",
    ),
    fixed("(n+3,1),(-(n+3),1),(n+4,1),(-n,1),(n+1,1),(n+1,3)", "T5"),
    run("T6", _T6_CASE1, "(n-8)/6"),
    fixed("((3n+2)/2,2),(-(3n+6)/2,2),((3n+6)/2,2),(-(3n+4)/2,2),((3n+10)/2,2),(-(n-2)/2,2)", "T7"),
    run(
        "T8",
        "((3n+12)/2+3i,2),(-((3n+10)/2+3i),2),((3n+8)/2+3i,2),(-((3n+12)/2+3i),2),((3n+16)/2+3i,2),(-((3n+8)/2+3i),2)",
        "(n-20)/6",
    ),
    fixed("(2n-1,2),(-(2n-2),2),(2n-3,2),(-(2n-1),2),(2n,2),(0,2),(2n+1,2),(-(2n-3),2),(-(n+2),2)", "T9"),
)

C8_CASE1_3 = (
    fixed("inf"),
    fixed("(1,0),(-2n,2),(2n+1,1),(2n-1,1),(-2n,1),(-(2n+1),1)", "T1"),
    run("T2", "(2n-4-3i,1),(-(2n-3-3i),1),(2n-2-3i,1),(-(2n-4-3i),1),(2n-3i,1),(-(2n-2-3i),1)", "(n-10)/6"),
    fixed("(-3n/2,1),((3n+4)/2,1)", "T3"),
    run(
        "T4",
        "(-((3n-4)/2-3i),1),(3n/2-3i,1),(-((3n-2)/2-3i),1),((3n-4)/2-3i,1),(-((3n-6)/2-3i),1),((3n-2)/2-3i,1)",
        "(n-10)/6",
    ),
    fixed("(-n,1),(n+1,1),(n+1,3)", "T5"),
    run("T6", _T6_CASE1, "(n-10)/6"),
    fixed("(3n/2,2),(-(n-2)/2,2)", "T7"),
    run(
        "T8",
        "((3n+8)/2+3i,2),(-((3n+6)/2+3i),2),((3n+6)/2+3i,2),(-((3n+4)/2+3i),2),((3n+4)/2+3i,2),(-((3n+2)/2+3i),2)",
        "(n-16)/6",
    ),
    fixed(
        "(2n-1,2),(-(2n-2),2),(0,2),(2n+1,2),(-(2n-3),2),(2n-2,2),(-(2n-4),2),(2n-3,2),(-(2n-1),2),"
        "(2n,2),(-(n+2),2)",
        "T9",
    ),
)

# k = 7 mod 8 (n odd): S1, S2, S3, (n+3, 2), S4, S5, then S6, S7 by subcase
_C7_CASE2_HEAD = (
    fixed("(1,2),(-(2n-1),1)", "S1"),
    run("S2", "(2+i,2),(-(2+i),0)", "(n-5)/2"),
    run("S3", "((n+3)/2+i,2),(-((n+1)/2+i),0)", "(n-1)/2"),
    fixed("(n+3,2)"),
    run("S4", "(n-i,0),(-(n-1-i),2)", "(n-5)/2"),
    fixed("((n+3)/2,0),((n+1)/2,2)", "S5"),
)
_S6_CASE2 = (
    "((n-3)/2-3i,0),(-((n-5)/2-3i),2),((n-1)/2-3i,0),(-((n-3)/2-3i),2),((n+1)/2-3i,0),(-((n-1)/2-3i),2)"
)

C7_CASE2_1 = _C7_CASE2_HEAD + (
    run("S6", _S6_CASE2, "(n-13)/6"),
    fixed("(2,0),(0,2),(3,0),(-2,2),(4,0),(-3,2),(1,0),(-n,2),(-(n+1),0),(2n,2)", "S7"),
)
C7_CASE2_2 = _C7_CASE2_HEAD + (
    run("S6", _S6_CASE2, "(n-15)/6"),
    fixed("(3,0),(-3,2),(4,0),(-4,2),(5,0),(0,2),(2,0),(-2,2),(1,0),(-n,2),(-(n+1),0),(2n,2)", "S7"),
)
C7_CASE2_3 = _C7_CASE2_HEAD + (
    run("S6", _S6_CASE2, "(n-17)/6"),
    fixed(
        "(4,0),(-3,2),(3,0),(-5,2),(6,0),(-4,2),(5,0),(0,2),(2,0),(-2,2),(1,0),(-n,2),(-(n+1),0),(2n,2)",
        "S7",
    ),
)

_C8_CASE2_HEAD = (
    fixed("inf"),
    # printed with two commas missing: "(2n-3,1)(-(2n+1),1)" and "(2n+1,1)(-(2n-2),1)"
    fixed("(0,0),(-(2n+1),2),(2n,1),(-2n,1),(2n-3,1),(-(2n+1),1),(2n+1,1),(-(2n-2),1)", "T1"),
)
_T2_CASE2 = "(2n-6-3i,1),(-(2n-3-3i),1),(2n-1-3i,1),(-(2n-4-3i),1),(2n-2-3i,1),(-(2n-5-3i),1)"
_T6_CASE2_12 = "(n+2+3i,2),(-(n+5+3i),2),(n+4+3i,2),(-(n+4+3i),2),(n+6+3i,2),(-(n+6+3i),2)"

C8_CASE2_1 = _C8_CASE2_HEAD + (
    run("T2", _T2_CASE2, "(n-19)/6"),
    fixed(
        "((3n+5)/2,1),(-(3n+7)/2,1),((3n+11)/2,1),(-(3n+5)/2,1),(-(3n+1)/2,1),((3n+9)/2,1),(-(3n-1)/2,1),"
        "((3n-1)/2,1),(-(3n-3)/2,1),((3n+3)/2,1),(-(3n+3)/2,1),((3n+1)/2,1),(-(3n-7)/2,1)",
        "T3",
    ),
    run(
        "T4",
        "((3n-7)/2-3i,1),(-((3n-9)/2-3i),1),((3n-3)/2-3i,1),(-((3n-5)/2-3i),1),((3n-5)/2-3i,1),(-((3n-13)/2-3i),1)",
        "(n-13)/6",
    ),
    fixed("(n+1,1),(n+1,3)", "T5"),
    run("T6", _T6_CASE2_12, "(n-7)/6"),
    fixed(
        "((3n+3)/2,2),((3n+13)/2,2),(-(3n+9)/2,2),((3n+7)/2,2),(-(3n+11)/2,2),((3n+9)/2,2),(-(n+1)/2,2)",
        "T7",
    ),
    run(
        "T8",
        "((3n+11)/2+3i,2),(-((3n+17)/2+3i),2),((3n+15)/2+3i,2),(-((3n+15)/2+3i),2),((3n+19)/2+3i,2),"
        "(-((3n+7)/2+3i),2)",
        "(n-25)/6",
    ),
    fixed(
        "(2n-4,2),(-(2n-2),2),(2n-2,2),(-(2n-3),2),(-(n+1),2),(-(n+3),2),(-2n,2),(-(2n-6),2),(2n-1,2),"
        "(-1,2),(2n+1,2),(-(2n-1),2)",
        "T9",
    ),
)

C8_CASE2_2 = _C8_CASE2_HEAD + (
    run("T2", _T2_CASE2, "(n-15)/6"),
    fixed("(-(3n+1)/2,1),((3n+5)/2,1),(-(3n+3)/2,1),((3n+7)/2,1),(-(3n-3)/2,1)", "T3"),
    run(
        "T4",
        "((3n-3)/2-3i,1),(-((3n-5)/2-3i),1),((3n+1)/2-3i,1),(-((3n-1)/2-3i),1),((3n-1)/2-3i,1),(-((3n-9)/2-3i),1)",
        "(n-9)/6",
    ),
    fixed("(n+1,1),(n+1,3)", "T5"),
    run("T6", _T6_CASE2_12, "(n-9)/6"),
    fixed("((3n+1)/2,2),(-(n+1)/2,2),((3n+11)/2,2),((3n+5)/2,2)", "T7"),
    run(
        "T8",
        "(-((3n+7)/2+3i),2),((3n+17)/2+3i,2),(-((3n+5)/2+3i),2),((3n+9)/2+3i,2),(-((3n+9)/2+3i),2),((3n+7)/2+3i,2)",
        "(n-21)/6",
    ),
    fixed(
        "(-(2n-4),2),(2n-4,2),(-(2n-3),2),(2n-3,2),(-(2n-2),2),(2n-1,2),(-1,2),(-(2n-1),2),(-(n+1),2),"
        "(-(n+3),2),(2n+1,2),(-(2n-5),2),(-2n,2)",
        "T9",
    ),
)

C8_CASE2_3 = _C8_CASE2_HEAD + (
    run("T2", _T2_CASE2, "(n-17)/6"),
    fixed(
        "((3n+7)/2,1),(-(3n+5)/2,1),(-(3n+1)/2,1),((3n+9)/2,1),(-(3n-1)/2,1),((3n+1)/2,1),(-(3n+3)/2,1),"
        "((3n+3)/2,1),(-(3n-5)/2,1)",
        "T3",
    ),
    run(
        "T4",
        "((3n-5)/2-3i,1),(-((3n-7)/2-3i),1),((3n-1)/2-3i,1),(-((3n-3)/2-3i),1),((3n-3)/2-3i,1),(-((3n-11)/2-3i),1)",
        "(n-11)/6",
    ),
    fixed("(n+1,1),(n+1,3)", "T5"),
    run("T6", "(n+2+3i,2),(-(n+5+3i),2),(n+7+3i,2),(-(n+4+3i),2),(n+6+3i,2),(-(n+3+3i),2)", "(n-11)/6"),
    fixed(
        "((3n-1)/2,2),((3n+5)/2,2),(-(n+1)/2,2),(-(3n+1)/2,2),((3n+7)/2,2),(-(3n+5)/2,2),((3n+11)/2,2),"
        "(-(3n+3)/2,2)",
        "T7",
    ),
    run(
        "T8",
        "(-((3n+11)/2+3i),2),((3n+17)/2+3i,2),(-((3n+7)/2+3i),2),((3n+13)/2+3i,2),(-((3n+9)/2+3i),2),"
        "((3n+9)/2+3i,2)",
        "(n-23)/6",
    ),
    fixed(
        "(-(2n-3),2),(2n-2,2),(-(2n-5),2),(2n-1,2),(-(2n-1),2),(-1,2),(2n+1,2),(-(2n-4),2),(2n-4,2),"
        "(-2n,2),(-(n+2),2),(n+4,2),(-(2n-2),2)",
        "T9",
    ),
)

# Explicit listings, signed residues as printed.
HARDCODED = {
    11: {
        "C5": "(0,1),(0,3),(1,1),(2,3),(4,1),(1,3),(5,1),(-4,3),(2,1),(5,3),(-1,1)",
        "C6": "(0,0),(3,3),(1,0),(-2,3),(3,0),(4,3),(4,0),(-3,3),(-1,0),(-5,3),(-4,0)",
        "C7": "(2,2),(-3,1),(1,2),(-5,0),(4,2),(-3,0),(5,2),(2,0),(3,2),(-2,0),(-3,2)",
        "C8": "inf,(5,0),(-2,2),(-4,1),(-2,1),(3,1),(-5,1),(-1,3),(0,2),(-4,2),(-1,2)",
    },
    15: {
        "C7": "(0,2),(-7,1),(-1,2),(0,0),(1,2),(3,0),(7,2),(1,0),(-2,2),(-4,0),(3,2),(-2,0),(6,2),(-3,0),(-7,2)",
        "C8": "inf,(2,0),(-3,2),(-5,1),(6,1),(7,1),(-6,1),(-3,1),(4,1),(4,3),(5,2),(2,2),(-4,2),(-6,2),(4,2)",
    },
    19: {
        "C7": "(0,2),(-9,1),(-7,2),(0,0),(1,2),(2,0),(4,2),(1,0),(7,2),(-4,0),(-8,2),(3,0),(-2,2),(4,0),"
        "(-6,2),(-3,0),(2,2),(-5,0),(5,2)",
        "C8": "inf,(-2,0),(-4,2),(7,1),(-8,1),(9,1),(-7,1),(-6,1),(8,1),(-4,1),(5,1),(5,3),(6,2),(3,2),(9,2),"
        "(-3,2),(8,2),(-1,2),(-5,2)",
    },
    23: {
        "C7": "(1,2),(-9,1),(2,2),(-2,0),(4,2),(-3,0),(5,2),(-4,0),(6,2),(-5,0),(8,2),(5,0),(-4,2),(4,0),"
        "(3,2),(1,0),(-1,2),(3,0),(-3,2),(0,0),(-5,2),(-6,0),(10,2)",
        "C8": "inf,(2,0),(-9,2),(-11,1),(8,1),(-7,1),(11,1),(10,1),(-10,1),(-8,1),(9,1),(-5,1),(6,1),(6,3),"
        "(7,2),(0,2),(-11,2),(-8,2),(9,2),(-10,2),(-2,2),(11,2),(-7,2)",
    },
    27: {
        "C7": "(0,2),(-13,1),(-11,2),(0,0),(1,2),(2,0),(4,2),(1,0),(5,2),(-7,0),(2,2),(4,0),(9,2),(-6,0),"
        "(7,2),(-4,0),(3,2),(-5,0),(13,2),(3,0),(-5,2),(-2,0),(-8,2),(-3,0),(-7,2),(6,0),(-4,2)",
        "C8": "inf,(5,0),(-2,2),(13,1),(11,1),(-12,1),(-11,1),(-8,1),(9,1),(-9,1),(12,1),(-10,1),(10,1),"
        "(-6,1),(7,1),(7,3),(8,2),(11,2),(-6,2),(6,2),(12,2),(-10,2),(10,2),(-3,2),(-12,2),(-1,2),(-9,2)",
    },
    35: {
        "C7": "(1,2),(-15,1),(2,2),(-2,0),(3,2),(-3,0),(4,2),(-5,0),(5,2),(-6,0),(6,2),(-7,0),(7,2),(-8,0),"
        "(8,2),(-9,0),(11,2),(8,0),(9,2),(7,0),(-9,2),(5,0),(-8,2),(4,0),(-7,2),(3,0),(-6,2),(-4,0),"
        "(-5,2),(0,0),(-4,2),(2,0),(-1,2),(6,0),(-2,2)",
        "C8": "inf,(1,0),(-16,2),(17,1),(-16,1),(16,1),(-12,1),(-17,1),(-13,1),(13,1),(-14,1),(15,1),(14,1),"
        "(-10,1),(11,1),(-11,1),(12,1),(-8,1),(9,1),(9,3),(10,2),(-12,2),(12,2),(-11,2),(14,2),(-13,2),"
        "(16,2),(-10,2),(-15,2),(13,2),(-3,2),(15,2),(0,2),(-14,2),(17,2)",
    },
    31: {
        "C8": "inf,(0,0),(-15,2),(14,1),(12,1),(-14,1),(-15,1),(-12,1),(15,1),(-10,1),(13,1),(-11,1),(10,1),"
        "(-9,1),(11,1),(-7,1),(8,1),(8,3),(9,2),(11,2),(-11,2),(15,2),(-1,2),(-13,2),(-10,2),(13,2),"
        "(-4,2),(-14,2),(-8,2),(12,2),(-12,2)",
    },
    55: {
        "C8": "inf,(0,0),(-27,2),(26,1),(-26,1),(23,1),(-27,1),(27,1),(-24,1),(22,1),(-23,1),(25,1),(-22,1),"
        "(-20,1),(24,1),(-19,1),(19,1),(-18,1),(21,1),(-21,1),(20,1),(-16,1),(16,1),(-15,1),(18,1),"
        "(-17,1),(17,1),(-13,1),(14,1),(14,3),(15,2),(-18,2),(17,2),(-17,2),(19,2),(-19,2),(18,2),"
        "(-21,2),(20,2),(-20,2),(22,2),(-22,2),(21,2),(-25,2),(27,2),(-1,2),(25,2),(-7,2),(24,2),"
        "(-26,2),(23,2),(-24,2),(-14,2),(-16,2),(-23,2)",
    },
    39: {
        "C8": "inf,(0,0),(-19,2),(18,1),(-18,1),(15,1),(-19,1),(19,1),(-16,1),(-14,1),(16,1),(-15,1),(17,1),"
        "(-12,1),(12,1),(-11,1),(14,1),(-13,1),(13,1),(-9,1),(10,1),(10,3),(11,2),(-14,2),(13,2),"
        "(-13,2),(15,2),(-15,2),(14,2),(-5,2),(19,2),(16,2),(-16,2),(17,2),(-1,2),(-17,2),(-12,2),"
        "(-10,2),(-18,2)",
    },
    47: {
        "C8": "inf,(0,0),(-23,2),(22,1),(-22,1),(19,1),(-23,1),(23,1),(-20,1),(20,1),(-19,1),(-17,1),(21,1),"
        "(-16,1),(17,1),(-18,1),(18,1),(-14,1),(14,1),(-13,1),(16,1),(-15,1),(15,1),(-11,1),(12,1),"
        "(12,3),(13,2),(-16,2),(18,2),(-15,2),(17,2),(-14,2),(16,2),(19,2),(-6,2),(21,2),(-21,2),(15,2),"
        "(-20,2),(-1,2),(23,2),(-17,2),(20,2),(-19,2),(-13,2),(-22,2),(-18,2)",
    },
}

_C7_CASE1 = {1: C7_CASE1_1, 2: C7_CASE1_2, 3: C7_CASE1_3}
_C7_CASE2 = {1: C7_CASE2_1, 2: C7_CASE2_2, 3: C7_CASE2_3}
_GENERAL_C8 = {
    CaseTag3.C1_1: C8_CASE1_1,
    CaseTag3.C1_2: C8_CASE1_2,
    CaseTag3.C1_3: C8_CASE1_3,
    CaseTag3.C2_1: C8_CASE2_1,
    CaseTag3.C2_2: C8_CASE2_2,
    CaseTag3.C2_3: C8_CASE2_3,
}


def _require(k: int) -> None:
    check_k(k)
    if k % 4 != 3:
        raise ValueError(f"this family needs k = 3 (mod 4) and k >= 11, got k={k}")


def case_tag_mod3(k: int) -> CaseTag3:
    _require(k)
    if k in (11, 15, 19, 23, 27, 35, 31, 55, 39, 47):
        return CaseTag3(f"Hard{k}")
    return {
        3: CaseTag3.C1_1,
        11: CaseTag3.C1_2,
        19: CaseTag3.C1_3,
        7: CaseTag3.C2_1,
        15: CaseTag3.C2_2,
        23: CaseTag3.C2_3,
    }[k % 24]


def parameters_mod3(k: int) -> tuple[Point, Point, int, int]:
    """((a1,b1), (a2,b2), d2, d3); the second hole and d2 depend on k mod 24."""
    _require(k)
    d3 = (k - 1) // 2
    if k % 8 == 3:
        return Point(0, 3), Point((k + 1) // 2, 2), 2, d3
    if k % 24 in (7, 15):
        return Point(0, 3), Point((3 * k - 5) // 4, 2), 4, d3
    return Point(0, 3), Point((3 * k - 1) // 4, 2), 2, d3


def cycle_specs_mod3(k: int) -> dict[str, object]:
    """Cycle name -> tuple of SequenceSpec, or a literal listing string."""
    tag = case_tag_mod3(k)
    specs: dict[str, object] = {"C1": C1, "C2": C2, "C3": C3, "C4": C4}
    if k == 11:
        specs.update(HARDCODED[11])
        return specs
    specs["C5"] = C5
    specs["C6"] = C6
    if k in (15, 19, 23, 27, 35):
        specs.update(HARDCODED[k])
        return specs
    if k % 8 == 3:
        specs["C7"] = _C7_CASE1[{3: 1, 11: 2, 19: 3}[k % 24]]
    else:
        specs["C7"] = _C7_CASE2[{7: 1, 15: 2, 23: 3}[k % 24]]
    specs["C8"] = HARDCODED[k]["C8"] if k in HARDCODED else _GENERAL_C8[tag]
    return specs


def build_factors_mod3(k: int) -> LemmaAInput:
    a1b1, a2b2, d2, d3 = parameters_mod3(k)
    return build_input(k, cycle_specs_mod3(k), a1b1, a2b2, d2, d3, case_tag_mod3(k).value)

