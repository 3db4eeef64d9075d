from itertools import combinations

import pytest

from domcx.classes import enumerate_classes, intersection_number
from domcx.domains import (
    DomainError,
    annulus_domain,
    domain_from_json,
    domain_inside,
    domains_disjoint,
    enumerate_domains,
    essential_boundary,
    pants_defining_arcs,
    pants_from_arc,
)
from domcx.oracles import piece_union_domains

# (norm, domains, peripheral pants, bi, mono); the norm-8 totals match the gluing oracle
DOMAIN_COUNTS = {
    (0, 5): (12, 144, 86, 29, 57),
    (1, 3): (10, 247, 66, 1, 65),
    (0, 6): (8, 74, 26, None, None),
}


@pytest.mark.parametrize("key", sorted(DOMAIN_COUNTS))
def test_domain_counts(surfaces, key):
    norm, total, per, bi, mono = DOMAIN_COUNTS[key]
    doms = enumerate_domains(surfaces[key], norm)
    pants = [X for X in doms if X.is_peripheral_pants]
    assert len(doms) == total
    assert len(pants) == per
    if bi is not None:
        assert sum(P.peripherality == "bi" for P in pants) == bi
        assert sum(P.peripherality == "mono" for P in pants) == mono


def test_domains_match_gluing_oracle(s05):
    assert piece_union_domains(s05, 8, 2) == enumerate_domains(s05, 8)


def test_euler_characteristic_of_complements(s05):
    # the two sides of a separating curve add up to the whole surface
    for c in enumerate_classes("curve", s05, 8):
        sides = [X for X in enumerate_domains(s05, 8)
                 if not X.annulus and X.boundary == (c,)]
        assert len(sides) == 2
        assert sum(X.euler_characteristic for X in sides) == s05.euler_characteristic


def test_annulus(s05):
    c = enumerate_classes("curve", s05, 6)[0]
    A = annulus_domain(c)
    assert A.annulus and A.topo_type == (0, 2)
    assert essential_boundary(A) == (c,)
    with pytest.raises(DomainError):
        annulus_domain(enumerate_classes("arc", s05, 3)[0])


def test_disjointness_symmetric_and_consistent(s05):
    doms = enumerate_domains(s05, 8)
    for X, Y in combinations(doms, 2):
        d = domains_disjoint(X, Y)
        assert d == domains_disjoint(Y, X)
        if X.annulus and Y.annulus:
            c1, c2 = X.boundary[0], Y.boundary[0]
            assert d == (intersection_number(c1, c2) == 0)


def test_annulus_disjoint_from_its_sides(s05):
    for X in enumerate_domains(s05, 8):
        if X.annulus:
            continue
        for c in essential_boundary(X):
            assert domains_disjoint(X, annulus_domain(c))


def test_pants_from_arc_fibers(s13):
    arcs = enumerate_classes("arc", s13, 5)
    for a in arcs:
        P = pants_from_arc(a)
        assert P.is_peripheral_pants
        fib = pants_defining_arcs(P)
        assert a in fib
        assert len(fib) == (3 if P.peripherality == "bi" else 1)
        assert all(pants_from_arc(x) == P for x in fib)


def test_json_round_trip(s13):
    for X in enumerate_domains(s13, 8):
        assert domain_from_json(s13, X.to_json()) == X


def test_domain_inside(s13):
    doms = enumerate_domains(s13, 8)
    for X in doms:
        assert domain_inside(X, X)
    big = [X for X in doms if X.topo_type == (0, 4)]
    for B in big:
        for P in doms:
            if P.is_pants and domain_inside(P, B):
                assert P.labels <= B.labels
