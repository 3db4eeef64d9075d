import pytest

from domcx.classes import enumerate_classes
from domcx.domains import enumerate_domains
from domcx.oracles import class_count_agreement, dual_walks, piece_union_domains

# dual-walk oracle at norm 6, gluing oracle at norm 8
EXPECTED = {(0, 5): (5, 168, 70), (1, 3): (12, 224, 111), (0, 6): (6, 308, 74)}


@pytest.mark.parametrize("key", sorted(EXPECTED))
def test_counts_against_oracles(surfaces, key):
    s = surfaces[key]
    curves, arcs, doms = EXPECTED[key]
    assert class_count_agreement("curve", s, 6) == (curves, curves, True)
    assert class_count_agreement("arc", s, 6) == (arcs, arcs, True)
    found = piece_union_domains(s, 8, 3 * s.genus + s.boundary_count - 3)
    assert len(found) == doms
    assert found == enumerate_domains(s, 8)


def test_dual_walks_count(s05):
    # every step has exactly two non-backtracking continuations
    n = 3 * s05.n_triangles
    assert len(dual_walks(s05, 1)) == n
    assert len(dual_walks(s05, 4)) == n * 2 ** 3


def test_monotone_in_norm(s13):
    counts = [len(enumerate_classes("arc", s13, n)) for n in range(1, 7)]
    assert counts == sorted(counts)
