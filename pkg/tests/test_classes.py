import random
from itertools import combinations

import pytest

from domcx.classes import (
    ClassError,
    are_disjoint,
    boundary_graph,
    boundary_graphs_disjoint,
    canonicalize,
    class_from_json,
    enumerate_classes,
    intersection_number,
    is_essential,
)
from domcx.oracles import walk_classes
from domcx.realized import oracle_intersection

# frozen from the dual-walk oracle (tests/test_oracles.py re-derives them)
COUNTS_NORM6 = {(0, 5): (5, 168), (1, 3): (12, 224), (0, 6): (6, 308)}


@pytest.mark.parametrize("key", sorted(COUNTS_NORM6))
def test_class_counts(surfaces, key):
    s = surfaces[key]
    curves, arcs = COUNTS_NORM6[key]
    assert len(enumerate_classes("curve", s, 6)) == curves
    assert len(enumerate_classes("arc", s, 6)) == arcs


def test_enumeration_sorted_and_essential(s05):
    cs = enumerate_classes("curve", s05, 8)
    assert cs == sorted(cs)
    assert all(is_essential(c) for c in cs)
    assert all(c.norm <= 8 for c in cs)


def test_bad_kind(s05):
    with pytest.raises(ValueError):
        enumerate_classes("band", s05, 4)
    assert enumerate_classes("curve", s05, 0) == []


def test_peripheral_and_nonsimple_rejected(s05):
    per = next(iter(s05.peripheral_coords.values()))
    with pytest.raises(ClassError):
        canonicalize(s05, per, kind="curve")
    c = enumerate_classes("curve", s05, 6)[0]
    with pytest.raises(ClassError):
        canonicalize(s05, [2 * x for x in c.coords], kind="curve")


def test_json_round_trip(s13):
    for x in enumerate_classes("curve", s13, 5) + enumerate_classes("arc", s13, 4):
        assert class_from_json(s13, x.to_json()) == x
    a = enumerate_classes("arc", s13, 4)[3]
    g = boundary_graph(a)
    assert class_from_json(s13, g.to_json()) == g


@pytest.mark.parametrize("key", [(0, 5), (1, 3)])
def test_intersection_matches_oracle_sample(surfaces, key):
    s = surfaces[key]
    xs = enumerate_classes("curve", s, 6) + enumerate_classes("arc", s, 5)
    rng = random.Random(3)
    for _ in range(300):
        x, y = rng.sample(xs, 2)
        assert intersection_number(x, y) == oracle_intersection(s, x, y)


def test_intersection_basic_properties(s05):
    xs = enumerate_classes("curve", s05, 8)
    for x in xs:
        assert intersection_number(x, x) == 0
        assert are_disjoint(x, x)
    for x, y in combinations(xs, 2):
        i = intersection_number(x, y)
        assert i == intersection_number(y, x)
        assert (i == 0) == are_disjoint(x, y)
        # two essential curves on a five-holed sphere meet an even number of times
        assert i % 2 == 0


def test_boundary_graph_disjointness(s05):
    arcs = enumerate_classes("arc", s05, 4)
    for a, b in combinations(arcs, 2):
        ga, gb = boundary_graph(a), boundary_graph(b)
        if boundary_graphs_disjoint(ga, gb):
            assert are_disjoint(a, b)
            assert not (ga.touched & gb.touched)
    g = boundary_graph(arcs[0])
    assert not boundary_graphs_disjoint(g, g)
    with pytest.raises(ClassError):
        boundary_graph(enumerate_classes("curve", s05, 6)[0])


def test_oracle_walk_enumeration_small(s06):
    assert walk_classes("curve", s06, 5) == enumerate_classes("curve", s06, 5)
