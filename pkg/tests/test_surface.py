import json

import pytest

from domcx.surface import Surface, SurfaceError, admissible_for_arcs, build_surface, complexity


@pytest.mark.parametrize("g,b", [(0, 4), (0, 5), (0, 6), (1, 1), (1, 3), (2, 2)])
def test_triangulation_counts(g, b):
    s = build_surface(g, b)
    chi = 2 - 2 * g - b
    # ideal triangulation: -2 chi triangles, -3 chi edges, one vertex per puncture
    assert s.n_triangles == -2 * chi
    assert s.n_edges == -3 * chi
    assert set(s.labels) == set(range(1, b + 1))


@pytest.mark.parametrize("g,b", [(0, 2), (0, 1), (1, 0), (2, 0), (-1, 4)])
def test_rejected(g, b):
    with pytest.raises(SurfaceError):
        build_surface(g, b)


def test_complexity_and_admissibility():
    assert complexity(build_surface(0, 4)) == 0
    assert not admissible_for_arcs(build_surface(0, 4))
    assert not admissible_for_arcs(build_surface(1, 2))
    assert admissible_for_arcs(build_surface(0, 5))
    assert admissible_for_arcs(build_surface(1, 3))


def test_json_round_trip(s13):
    data = json.loads(s13.dumps())
    assert data["schema"] == "domcx.surface/1"
    assert Surface.from_json(data) == s13


def test_bad_schema(s05):
    data = s05.to_json()
    data["schema"] = "other/9"
    with pytest.raises(SurfaceError):
        Surface.from_json(data)


def test_deterministic():
    assert build_surface(1, 3).words == build_surface(1, 3).words
