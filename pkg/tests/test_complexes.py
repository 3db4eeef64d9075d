import json
import random

import pytest

from domcx.classes import enumerate_classes
from domcx.complexes import (
    ComplexBall,
    ComplexError,
    PathWitness,
    Unreachable,
    bidirectional_distance,
    build_ball,
    certified_lower_bound,
    distance_upper,
    is_edge,
    is_vertex,
    path_from_json,
    resolve_kind,
)
from domcx.domains import annulus_domain
from domcx.surface import build_surface

# vertex and edge counts on S_{0,5}, curve norm 12, arc norm 8;
# C, A and AC edges re-derived with the bigon-removal intersection oracle
BALLS_S05 = {
    "C": (29, 57),
    "D": (144, 543),
    "P_dC": (115, 485),
    "A": (332, 7028),
    "A_B": (332, 1679),
    "AC": (361, 7802),
    "A_BC": (361, 2453),
}


@pytest.fixture(scope="module")
def balls(s05):
    return {k: build_ball(k, s05, norm=12, arc_norm=8) for k in BALLS_S05}


@pytest.mark.parametrize("kind", sorted(BALLS_S05))
def test_ball_sizes(balls, kind):
    ball = balls[kind]
    assert (len(ball), ball.n_edges) == BALLS_S05[kind]
    assert ball.is_connected()


@pytest.mark.parametrize("kind", ["C", "D", "A_B", "AC"])
def test_bfs_agrees_with_bidirectional(balls, kind):
    ball = balls[kind]
    rng = random.Random(11)
    for _ in range(150):
        u, v = rng.sample(ball.vertices, 2)
        d, w = distance_upper(ball, u, v)
        assert d == bidirectional_distance(ball, u, v) == w.length
        w.validate()
        assert d >= certified_lower_bound(ball.kind, u, v)


def test_edges_match_predicate(balls):
    ball = balls["C"]
    for i, nb in enumerate(ball.adj):
        for j in range(len(ball)):
            if i != j:
                assert (j in nb) == is_edge("C", ball.vertices[i], ball.vertices[j])


def test_a_b_subgraph_of_a(balls):
    A, B = balls["A"], balls["A_B"]
    for i, j in B.edges():
        assert A.index[B.vertices[j].arc] in A.adj[A.index[B.vertices[i].arc]]


def test_vertex_and_edge_errors(s05):
    c = enumerate_classes("curve", s05, 6)[0]
    with pytest.raises(ComplexError):
        is_edge("C", c, c)
    with pytest.raises(ComplexError):
        is_edge("A", c, enumerate_classes("curve", s05, 6)[1])
    with pytest.raises(ComplexError):
        resolve_kind("Q")
    assert resolve_kind("P_∂") == "P_d"
    assert is_vertex("P_dC", annulus_domain(c))
    assert not is_vertex("P_d", annulus_domain(c))


def test_degenerate_surfaces_rejected():
    with pytest.raises(ComplexError):
        build_ball("C", build_surface(0, 4), norm=6)
    with pytest.raises(ComplexError):
        build_ball("A", build_surface(1, 2), norm=6)


def test_path_witness(s05, balls):
    C = balls["C"]
    u, v = C.vertices[0], C.vertices[-1]
    d, w = distance_upper(C, u, v)
    assert w.start == u and w.end == v and w.length == d
    back = path_from_json(s05, json.loads(json.dumps(w.to_json())))
    assert back == w
    bad = PathWitness("C", (u, u))
    assert not bad.is_valid()


def test_unreachable(balls):
    C = balls["C"]
    u = C.vertices[0]
    v = next(x for x in C.vertices[1:] if x not in C.neighbors(u))
    iso = C.subgraph(lambda x: x in (u, v))
    with pytest.raises(Unreachable):
        distance_upper(iso, u, v)
    with pytest.raises(Unreachable):
        bidirectional_distance(iso, u, v)


def test_ball_json_round_trip(balls):
    ball = balls["A_BC"]
    back = ComplexBall.from_json(json.loads(ball.dumps()))
    assert back.vertices == ball.vertices
    assert back.adj == ball.adj
    assert back.dumps() == ball.dumps()
    assert ball.to_dot().startswith('graph "A_BC"')
