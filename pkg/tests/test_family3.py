from __future__ import annotations

import math

import pytest

from arcs.base import UnsupportedK
from arcs.core import INF, Point, canonicalize, edges
from arcs.family3 import CaseTag3, build_factors_mod3, case_tag_mod3, cycle_specs_mod3, parameters_mod3
from arcs.sequences import expand_cycle

from listed_cycles import LISTED
from oracle import parse_listing, plain_cycle, same_undirected_cycle

MOD3_K = list(range(11, 200, 4))
LISTED_MOD3 = sorted(key for key in LISTED if key[0] % 4 == 3)


@pytest.mark.parametrize("k, name", LISTED_MOD3)
def test_listed_cycles_reproduced(k, name):
    inp = build_factors_mod3(k)
    ours = inp.base_cycles[int(name[1:]) - 1]
    theirs = parse_listing(LISTED[k, name], k)
    assert same_undirected_cycle(plain_cycle(ours), theirs)
    as_points = tuple(INF if x == "inf" else Point(*x) for x in theirs)
    assert canonicalize(ours) == canonicalize(as_points)


@pytest.mark.parametrize(
    "k, expected",
    [
        (11, (Point(0, 3), Point(6, 2), 2, 5)),
        (15, (Point(0, 3), Point(10, 2), 4, 7)),
        (47, (Point(0, 3), Point(35, 2), 2, 23)),
        (23, (Point(0, 3), Point(17, 2), 2, 11)),
        (43, (Point(0, 3), Point(22, 2), 2, 21)),
        (31, (Point(0, 3), Point(22, 2), 4, 15)),
    ],
)
def test_parameters(k, expected):
    assert parameters_mod3(k) == expected


def test_parameters_reject_wrong_class():
    with pytest.raises(ValueError):
        parameters_mod3(13)
    with pytest.raises(UnsupportedK):
        parameters_mod3(7)


@pytest.mark.parametrize("k", range(11, 1001, 4))
def test_step_is_coprime(k):
    _, _, d2, d3 = parameters_mod3(k)
    assert math.gcd(d2, k) == 1 and math.gcd(d3, k) == 1


def test_dispatch_is_total_up_to_1000():
    seen = {}
    for k in range(11, 1001, 4):
        seen.setdefault(case_tag_mod3(k), []).append(k)
    assert set(seen) == set(CaseTag3)
    firsts = {tag: ks[0] for tag, ks in seen.items()}
    assert firsts[CaseTag3.C1_1] == 51 and firsts[CaseTag3.C1_2] == 59 and firsts[CaseTag3.C1_3] == 43
    assert firsts[CaseTag3.C2_1] == 79 and firsts[CaseTag3.C2_2] == 63 and firsts[CaseTag3.C2_3] == 71


def test_k11_c8_inf_neighbours():
    c8 = build_factors_mod3(11).base_cycles[7]
    nbrs = {w for u, w in edges(c8) if u is INF} | {u for u, w in edges(c8) if w is INF}
    assert nbrs == {Point(5, 0), Point(10, 2)}


def test_k43_c7_with_pivot_vertex():
    c7 = expand_cycle(cycle_specs_mod3(43)["C7"], 43, 10)
    assert len(c7) == len(set(c7)) == 43
    # the pivot (-n/2, 0) = (38, 0) follows S5
    assert Point(38, 0) in c7


@pytest.mark.parametrize("k", MOD3_K)
def test_structure_for_every_k(k):
    inp = build_factors_mod3(k)
    a1b1, a2b2, _, _ = parameters_mod3(k)
    assert inp.f1.missing == a1b1 and inp.f2.missing == a2b2
    cycles = inp.base_cycles
    assert all(len(c) == k == len(set(c)) for c in cycles)
    assert [INF in c for c in cycles] == [False, False, False, True, False, False, False, True]
