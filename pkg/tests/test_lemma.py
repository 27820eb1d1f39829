from __future__ import annotations

from collections import Counter
from dataclasses import replace

import pytest

from arcs.core import Point, edge_multiset, translate_factor
from arcs.family1 import build_factors_mod1
from arcs.family3 import build_factors_mod3
from arcs.lemma import (
    ConditionError,
    LemmaAInput,
    assemble,
    check_conditions,
    counting_identity,
    half_parallel_class,
    level_pair_counts,
    missing_differences,
)

from oracle import brute_delta, plain_cycle


def test_k11_input_passes_every_condition():
    inp = build_factors_mod3(11)
    report = check_conditions(inp)
    assert report.passed
    assert [line.split(":")[1].strip() for line in report.lines()] == ["PASS"] * 5


def test_k11_conditions_agree_with_brute_force():
    inp = build_factors_mod3(11)
    cycles = [plain_cycle(c) for c in inp.base_cycles]
    k = 11
    for p in (0, 1):
        assert brute_delta(cycles, p, p, k) == Counter(range(1, k))
    for q, dq in ((2, inp.d2), (3, inp.d3)):
        assert brute_delta(cycles, q, q, k) == Counter(set(range(1, k)) - {dq, k - dq})
    for r in range(4):
        for s in range(4):
            if r != s:
                assert brute_delta(cycles, r, s, k) == Counter(range(k))


def test_k13_missing_same_level_differences():
    inp = build_factors_mod1(13)
    assert missing_differences(inp, 2) == [0, 2, 11]
    assert missing_differences(inp, 3) == [0, 6, 7]


def test_duplicated_factor_fails_condition_iii():
    inp = build_factors_mod1(13)
    doubled = LemmaAInput(13, inp.f1, inp.f1, inp.a1b1, inp.a1b1, inp.d2, inp.d3)
    report = check_conditions(doubled)
    assert not report.passed
    assert not report.results["iii"].passed
    assert any("extra" in d for d in report.results["iii"].details)


def test_failing_input_is_refused_with_named_pair():
    inp = build_factors_mod1(13)
    f2 = translate_factor(inp.f1, 1)
    bad = replace(inp, f2=f2, a2b2=f2.missing)
    with pytest.raises(ConditionError) as exc:
        assemble(bad)
    msg = str(exc.value)
    assert "(v)" in msg and "Delta(0,1)" in msg


def test_half_parallel_class_examples():
    level2, level3 = half_parallel_class(13, 2, 6)
    assert [x.a for x in level2] == [0, 2, 4, 6, 8, 10, 12, 1, 3, 5, 7, 9, 11]
    assert [x.a for x in level3] == [0, 6, 12, 5, 11, 4, 10, 3, 9, 2, 8, 1, 7]
    assert {x.b for x in level2} == {2} and {x.b for x in level3} == {3}
    unit, _ = half_parallel_class(11, 1, 5)
    assert unit == tuple(Point(a, 2) for a in range(11))


def test_half_parallel_class_needs_coprime_step():
    with pytest.raises(ValueError, match="coprime"):
        half_parallel_class(15, 3, 7)


@pytest.mark.parametrize("k, classes, edges", [(11, 22, 990), (13, 26, 1378)])
def test_assemble_shape(k, classes, edges):
    inp = build_factors_mod3(k) if k % 4 == 3 else build_factors_mod1(k)
    system = assemble(inp)
    assert len(system.almost_parallel_classes) == classes == (system.v - 1) // 2
    assert len(system.half_parallel_class) == 2
    counts = edge_multiset(list(system.almost_parallel_classes) + [system.half_parallel_class])
    assert len(counts) == edges and set(counts.values()) == {1}


def test_counting_identity_holds_and_detects_imbalance():
    inp = build_factors_mod1(17)
    assert counting_identity(inp) == []
    counts = level_pair_counts(inp.base_cycles)
    assert counts["inf"] == 4
    assert counts[0, 0] == counts[1, 1] == 8 and counts[2, 2] == counts[3, 3] == 7
    doubled = LemmaAInput(17, inp.f1, inp.f1, inp.a1b1, inp.a1b1, inp.d2, inp.d3)
    assert counting_identity(doubled)


def test_condition_ii_uses_both_factors():
    inp = build_factors_mod3(15)
    report = check_conditions(inp)
    assert report.results["ii"].passed
