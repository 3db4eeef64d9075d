import random

import pytest

from domcx.classes import are_disjoint, boundary_graph, enumerate_classes
from domcx.complexes import PathWitness, build_ball, distance_upper, is_edge
from domcx.domains import domain_inside, pants_from_arc, domains_disjoint, enumerate_domains, essential_boundary
from domcx.maps import (
    PRESETS,
    ConnectorSearch,
    MapError,
    _drop_loops,
    arc_from_pants,
    arc_path_to_bgraph_path,
    coarse_project,
    connector_bound,
    include_curve_as_annulus,
    project_pants_into_B,
    project_path_to_curves,
    rectify_genus0_path,
    rule_named,
    wrap_construction,
)


def test_rules():
    assert [r.name for r in PRESETS] == ["canonical-min", "canonical-max", "seeded-random"]
    assert rule_named("canonical-max") == PRESETS[1]
    with pytest.raises(MapError):
        rule_named("nearest")


def test_rules_choose_from_candidates(s05):
    cs = enumerate_classes("curve", s05, 10)
    for r in PRESETS:
        assert r.choose(cs) in cs
    assert PRESETS[0].choose(cs).coords == min(c.coords for c in cs)
    assert PRESETS[1].choose(cs).coords == max(c.coords for c in cs)
    seeded = rule_named("seeded-random", 7)
    assert seeded.choose(cs) == seeded.choose(list(reversed(cs)))


def test_projection_inverse_of_inclusion(s13):
    for c in enumerate_classes("curve", s13, 8):
        for r in PRESETS:
            assert coarse_project(include_curve_as_annulus(c), r) == c


def test_projection_lies_on_boundary(s13):
    for X in enumerate_domains(s13, 8):
        assert coarse_project(X) in essential_boundary(X)


def test_drop_loops():
    assert _drop_loops([1, 2, 3, 2, 4]) == [1, 2, 4]
    assert _drop_loops([1, 2, 1, 3]) == [1, 3]
    assert _drop_loops([5]) == [5]


def test_project_path_requires_annuli(s05):
    D = build_ball("D", s05, norm=10)
    X = next(v for v in D.vertices if not v.annulus)
    Y = D.neighbors(X)[0]
    with pytest.raises(MapError):
        project_path_to_curves(PathWitness("D", (X, Y)))


def test_project_path(s05):
    D = build_ball("D", s05, norm=10)
    ann = [v for v in D.vertices if v.annulus]
    rng = random.Random(5)
    for _ in range(40):
        u, v = rng.sample(ann, 2)
        _, w = distance_upper(D, u, v)
        q = project_path_to_curves(w)
        q.validate()
        assert q.length <= w.length
        assert (q.start, q.end) == (u.boundary[0], v.boundary[0])


def test_connector_bounds(s05, s13):
    assert connector_bound(s05) == 2
    assert connector_bound(s13) == 4


@pytest.mark.parametrize("key,arc_norm", [((0, 5), 6), ((1, 3), 6)])
def test_connectors(surfaces, key, arc_norm):
    s = surfaces[key]
    search = ConnectorSearch(s, 10 if key == (1, 3) else 8)
    arcs = enumerate_classes("arc", s, arc_norm)
    rng = random.Random(2)
    pairs = [(a, b) for a in arcs for b in arcs if a < b and are_disjoint(a, b)]
    for a, b in rng.sample(pairs, 60):
        seg = search.path(a, b, connector_bound(s))
        assert seg is not None
        w = PathWitness("A_B", tuple(seg))
        w.validate()
        assert w.start == boundary_graph(a) and w.end == boundary_graph(b)


def test_transport_length(s05):
    arcs = enumerate_classes("arc", s05, 5)
    a = arcs[0]
    b = next(x for x in arcs if x != a and are_disjoint(a, x))
    c = next(x for x in arcs if x not in (a, b) and are_disjoint(b, x) and not are_disjoint(a, x))
    p = PathWitness("A", (a, b, c))
    q, lengths = arc_path_to_bgraph_path(p)
    q.validate()
    assert q.length <= 4 * p.length
    assert len(lengths) == 2 and max(lengths) <= 2


def test_rectify_identity_and_short_paths(s05):
    D = build_ball("D", s05, norm=10)
    pants = [v for v in D.vertices if v.is_peripheral_pants]
    P, Q = pants[0], next(x for x in pants[1:] if is_edge("D", pants[0], x))
    assert rectify_genus0_path(PathWitness("D", (P, Q))).vertices == (P, Q)
    # P - annulus - Q with P and Q crossing
    for A in (v for v in D.vertices if v.annulus):
        nb = [x for x in D.neighbors(A) if x.is_peripheral_pants]
        crossing = [(x, y) for x in nb for y in nb if x < y and not domains_disjoint(x, y)]
        if crossing:
            x, y = crossing[0]
            out = rectify_genus0_path(PathWitness("D", (x, A, y)))
            out.validate()
            assert out.length == 2 and out.vertices[1].is_peripheral_pants
            break
    else:
        pytest.fail("no crossing pair beside an annulus")


def test_rectify_rejects_positive_genus(s13):
    P = next(X for X in enumerate_domains(s13, 8) if X.is_peripheral_pants)
    with pytest.raises(MapError):
        rectify_genus0_path(PathWitness("D", (P,)))


def test_wrap(s13):
    c, B, C = wrap_construction(s13)
    assert c.coords == (2, 2, 2, 0, 2, 2, 0, 2, 0)
    assert B.topo_type == (0, 4) and B.labels == frozenset({1, 2, 3})
    assert C.topo_type == (1, 1) and not C.labels
    assert B.euler_characteristic + C.euler_characteristic == s13.euler_characteristic
    assert domains_disjoint(B, C)


def test_wrap_needs_genus(s05):
    with pytest.raises(MapError):
        wrap_construction(s05)


def test_strip_projection_lands_in_B(s13):
    c, B, _ = wrap_construction(s13)
    pants = [X for X in enumerate_domains(s13, 10) if X.is_peripheral_pants]
    crossing = [P for P in pants if not domain_inside(P, B)]
    assert crossing
    for P in crossing:
        Q = project_pants_into_B(P, c, B)
        assert Q.is_peripheral_pants and domain_inside(Q, B)


def test_arc_from_pants_round_trip(s05):
    for P in enumerate_domains(s05, 10):
        if P.is_peripheral_pants:
            for r in PRESETS:
                assert pants_from_arc(arc_from_pants(P, r)) == P
