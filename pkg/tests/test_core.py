from __future__ import annotations

import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcs.core import (
    INF,
    Factor,
    Point,
    canonicalize,
    delta,
    develop,
    edge_multiset,
    edges,
    ground_set,
    point,
    same_cycle,
    translate,
    translate_factor,
    validate_cycle,
    vertex_key,
)
from arcs.family1 import build_factors_mod1

from oracle import brute_delta, plain_cycle


def random_cycle(rng: random.Random, k: int, length: int, with_inf: bool = True) -> tuple:
    verts = [Point(a, b) for b in range(4) for a in range(k)] + ([INF] if with_inf else [])
    return tuple(rng.sample(verts, length))


cycles_strategy = st.integers(min_value=5, max_value=23).flatmap(
    lambda k: st.tuples(
        st.just(k),
        st.lists(st.randoms(use_true_random=False), min_size=1, max_size=3).map(
            lambda rs: [random_cycle(r, k, k) for r in rs]
        ),
    )
)


def test_point_normalizes_signed_residues():
    assert point(-4, 3, 11) == Point(7, 3)
    assert point(12, 1, 13) == Point(12, 1)
    assert point(25, 6, 13) == Point(12, 2)


def test_translate_by_zero_is_identity():
    c = (Point(1, 2), Point(5, 0), INF, Point(7, 3))
    assert translate(c, 0, 13) == c


def test_translate_wraps_and_fixes_inf():
    assert translate((Point(12, 1), INF), 3, 13) == (Point(2, 1), INF)


def test_translate_inverse_shifts():
    rng = random.Random(1)
    c = random_cycle(rng, 13, 13)
    for s in range(13):
        assert translate(translate(c, s, 13), 13 - s, 13) == c


def test_translate_composes():
    f = build_factors_mod1(13).f1
    for s1, s2 in [(0, 5), (4, 12), (7, 7)]:
        twice = translate_factor(translate_factor(f, s1), s2)
        assert twice == translate_factor(f, (s1 + s2) % 13)


def test_develop_has_k_members_and_shifts_missing_vertex():
    f = build_factors_mod1(13).f1
    dev = develop(f)
    assert len(dev) == 13
    assert dev[0] == f
    for l, g in enumerate(dev):
        assert g.missing == Point((f.missing.a + l) % 13, f.missing.b)


def test_develop_translates_are_pairwise_distinct():
    dev = develop(build_factors_mod1(13).f1)
    forms = {frozenset(canonicalize(c) for c in g.cycles) for g in dev}
    assert len(forms) == 13


def test_delta_of_step_two_orbit():
    k = 13
    c = tuple(Point(2 * j % k, 2) for j in range(k))
    assert delta([c], 2, 2, k) == Counter({2: 13, 11: 13})


def test_delta_of_empty_list_is_empty():
    assert delta([], 0, 1, 13) == Counter()


def test_delta_skips_inf_edges():
    c = (INF, Point(0, 0), Point(1, 1))
    assert delta([c], 0, 1, 5) == Counter({4: 1})
    assert delta([c], 1, 0, 5) == Counter({1: 1})


@settings(max_examples=60, deadline=None)
@given(cycles_strategy)
def test_delta_matches_brute_force_and_is_antisymmetric(data):
    k, cycles = data
    plain = [plain_cycle(c) for c in cycles]
    for r in range(4):
        for s in range(4):
            d = delta(cycles, r, s, k)
            assert d == brute_delta(plain, r, s, k)
            assert d == Counter({(-x) % k: m for x, m in delta(cycles, s, r, k).items()})


@settings(max_examples=40, deadline=None)
@given(cycles_strategy, st.integers(min_value=0, max_value=100))
def test_delta_is_translation_invariant(data, shift):
    k, cycles = data
    moved = [translate(c, shift, k) for c in cycles]
    for r, s in itertools.product(range(4), repeat=2):
        assert delta(moved, r, s, k) == delta(cycles, r, s, k)


def test_edge_multiset_single_cycle_and_duplicate():
    rng = random.Random(3)
    c = random_cycle(rng, 11, 11)
    once = edge_multiset([[c]])
    assert len(once) == 11 and set(once.values()) == {1}
    twice = edge_multiset([[c], [c]])
    assert len(twice) == 11 and set(twice.values()) == {2}
    assert all(vertex_key(u) < vertex_key(w) for u, w in once)


def test_edge_multiset_rejects_repeated_vertex():
    with pytest.raises(ValueError):
        edge_multiset([[(Point(0, 0), Point(1, 0), Point(0, 0))]])


def test_edge_multiset_of_development():
    f = build_factors_mod1(13).f1
    counts = edge_multiset([g.cycles for g in develop(f)])
    assert sum(counts.values()) == 4 * 13 * 13


def test_canonicalize_rotation_and_reflection():
    a = (Point(1, 0), Point(2, 0), Point(3, 0))
    b = (Point(3, 0), Point(2, 0), Point(1, 0))
    c = (Point(2, 0), Point(3, 0), Point(1, 0))
    assert canonicalize(a) == canonicalize(b) == canonicalize(c)
    assert canonicalize(canonicalize(a)) == canonicalize(a)
    assert same_cycle(a, c)


def test_canonicalize_puts_inf_first():
    c = (Point(3, 1), INF, Point(0, 0), Point(2, 3))
    assert canonicalize(c)[0] is INF


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7])
def test_canonicalize_separates_orbits_exhaustively(k):
    verts = [Point(a, 0) for a in range(k)]
    by_form: dict = {}
    for perm in itertools.permutations(verts):
        by_form.setdefault(canonicalize(perm), set()).add(perm)
    # (k-1)!/2 distinct undirected cycles, each realised by 2k vertex orders
    expected = 1
    for i in range(2, k):
        expected *= i
    assert len(by_form) == max(expected // 2, 1)
    assert all(len(orbit) == 2 * k for orbit in by_form.values())


def test_ground_set_order_and_size():
    gs = ground_set(5)
    assert len(gs) == 21 and gs[0] is INF
    assert gs == sorted(gs, key=vertex_key)


def test_edges_include_closing_edge():
    c = (Point(0, 0), Point(1, 0), Point(2, 0))
    assert edges(c)[-1] == (Point(2, 0), Point(0, 0))


def test_validate_cycle_errors():
    with pytest.raises(ValueError, match="length"):
        validate_cycle((Point(0, 0),), 3)
    with pytest.raises(ValueError, match="repeated"):
        validate_cycle((Point(0, 0), Point(0, 0), Point(1, 0)), 3)
    with pytest.raises(ValueError, match="not a vertex"):
        validate_cycle((Point(0, 0), Point(5, 0), Point(1, 0)), 3)


def test_factor_rejects_wrong_missing_vertex():
    f = build_factors_mod1(13).f1
    with pytest.raises(ValueError, match="uncovered"):
        Factor(13, f.cycles, Point(1, 3))
    with pytest.raises(ValueError, match="4 cycles"):
        Factor(13, f.cycles[:3], f.missing)
