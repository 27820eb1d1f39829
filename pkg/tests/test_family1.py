from __future__ import annotations

import pytest

from arcs.base import ConstructionError, UnsupportedK
from arcs.core import INF, Point, canonicalize
from arcs.family1 import CaseTag1, build_factors_mod1, case_tag_mod1, parameters_mod1

from listed_cycles import LISTED
from oracle import parse_listing, plain_cycle, same_undirected_cycle

MOD1_K = list(range(13, 200, 4))
LISTED_MOD1 = sorted(key for key in LISTED if key[0] % 4 == 1)


def _cycle(inp, name: str):
    idx = int(name[1:]) - 1
    return inp.base_cycles[idx]


@pytest.mark.parametrize("k, name", LISTED_MOD1)
def test_listed_cycles_reproduced(k, name):
    inp = build_factors_mod1(k)
    ours = _cycle(inp, name)
    theirs = parse_listing(LISTED[k, name], k)
    assert same_undirected_cycle(plain_cycle(ours), theirs)
    as_points = tuple(INF if x == "inf" else Point(*x) for x in theirs)
    assert canonicalize(ours) == canonicalize(as_points)


def test_k25_c8_prefix():
    c8 = build_factors_mod1(25).base_cycles[7]
    assert c8[:5] == (INF, Point(3, 0), Point(9, 2), Point(7, 1), Point(18, 1))


@pytest.mark.parametrize("k, expected", [(13, (Point(0, 3), Point(0, 2), 2, 6)), (17, (Point(0, 3), Point(0, 2), 2, 8))])
def test_parameters(k, expected):
    assert parameters_mod1(k) == expected


def test_parameters_reject_wrong_class():
    with pytest.raises(ValueError):
        parameters_mod1(15)
    with pytest.raises(UnsupportedK):
        parameters_mod1(9)


def test_dispatch_is_total_up_to_1000():
    seen = {}
    for k in range(13, 1001, 4):
        seen.setdefault(case_tag_mod1(k), []).append(k)
    assert set(seen) == set(CaseTag1)
    assert seen[CaseTag1.C1_1][0] == 53 and seen[CaseTag1.C1_2][0] == 37 and seen[CaseTag1.C1_3][0] == 45
    assert seen[CaseTag1.C2_1][0] == 49 and seen[CaseTag1.C2_2][0] == 57 and seen[CaseTag1.C2_3][0] == 65
    assert seen[CaseTag1.HARD13] == [13]


@pytest.mark.parametrize("k", MOD1_K)
def test_structure_for_every_k(k):
    inp = build_factors_mod1(k)
    assert inp.f1.missing == Point(0, 3) and inp.f2.missing == Point(0, 2)
    cycles = inp.base_cycles
    assert all(len(c) == k == len(set(c)) for c in cycles)
    assert [INF in c for c in cycles] == [False, False, False, True, False, False, False, True]


def test_subcase_1_1_at_53():
    inp = build_factors_mod1(53)
    assert inp.label == "C1_1"
    assert all(len(set(c)) == 53 for c in inp.base_cycles)


def test_broken_table_is_reported(monkeypatch):
    from arcs import family1

    broken = dict(family1.cycle_specs_mod1(53))
    broken["C5"] = broken["C5"][:-1]
    monkeypatch.setattr(family1, "cycle_specs_mod1", lambda k: broken)
    with pytest.raises(ConstructionError, match=r"k=53 \[C1_1\] C5"):
        family1.build_factors_mod1(53)
