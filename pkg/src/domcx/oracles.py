"""Independent brute-force references for the enumerations.

Classes are found here by running over every non-backtracking walk in the
dual graph of the triangulation, instead of over coordinate vectors. Domains
are found by gluing pieces of cuts, instead of selecting single pieces.
"""
from __future__ import annotations

from .classes import ClassError, canonicalize_arc_walk, canonicalize_curve_walk
from .domains import DomainClass, annulus_domain, cut_for, disjoint_families
from .classes import enumerate_classes


def _extend(s, walk, length, out):
    if len(walk) == length:
        out.append(tuple(walk))
        return
    t, j = walk[-1]
    t2, i2 = s.glue[t][j]
    for j2 in range(3):
        if j2 != i2:
            walk.append((t2, j2))
            _extend(s, walk, length, out)
            walk.pop()


def dual_walks(s, length):
    """All non-backtracking dual walks with ``length`` steps."""
    out = []
    for t in range(s.n_triangles):
        for j in range(3):
            _extend(s, [(t, j)], length, out)
    return out


def walk_classes(kind, s, norm_bound):
    """Essential simple classes found by exhaustive walk enumeration."""
    found = set()
    if kind == "arc":
        for t in range(s.n_triangles):
            for k in range(3):
                for k2 in range(3):
                    if k2 != k:
                        _try(found, canonicalize_arc_walk, s, (t, k), (), (t, k2))
    for n in range(1, norm_bound + 1):
        for w in dual_walks(s, n):
            if kind == "curve":
                t2, _ = s.glue[w[-1][0]][w[-1][1]]
                if t2 == w[0][0] and s.glue[w[-1][0]][w[-1][1]][1] != w[0][1]:
                    _try(found, canonicalize_curve_walk, s, list(w))
            else:
                t, j = w[0]
                tl, jl = w[-1]
                t2, i2 = s.glue[tl][jl]
                _try(found, canonicalize_arc_walk, s, (t, j), list(w), (t2, i2))
    return sorted(c for c in found if c.norm <= norm_bound)


def _try(found, fn, *args):
    try:
        found.add(fn(*args))
    except ClassError:
        pass


def class_count_agreement(kind, s, norm_bound):
    """(oracle count, enumeration count, agree?)."""
    a = walk_classes(kind, s, norm_bound)
    b = enumerate_classes(kind, s, norm_bound)
    return len(a), len(b), a == b


def piece_union_domains(s, norm_bound, max_curves):
    """Domains as components of a cut re-glued along part of the cutting family."""
    curves = enumerate_classes("curve", s, norm_bound)
    by = {c.coords: c for c in curves}
    out = {annulus_domain(c) for c in curves}
    for fam in disjoint_families(curves, max_curves):
        cut, _ = cut_for(s, fam)
        m = len(cut.components)
        for mask in range(1 << m):
            out.update(_glued(s, cut, mask, by))
    return sorted(out)


def _glued(s, cut, mask, by):
    n = len(cut.pieces)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for q, (pa, pb) in enumerate(cut.sides):
        if mask >> q & 1 and find(pa) != find(pb):
            parent[find(pa)] = find(pb)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    found = []
    for members in groups.values():
        inside = set(members)
        boundary = []
        for q, (comp, (pa, pb)) in enumerate(zip(cut.components, cut.sides)):
            if mask >> q & 1:
                continue
            boundary += [by[comp.coords]] * ((pa in inside) + (pb in inside))
        if not boundary:
            continue
        chi = sum(cut.pieces[i].euler_characteristic for i in members)
        labels = frozenset().union(*(cut.pieces[i].original_boundaries for i in members))
        nb = len(labels) + len(boundary)
        found.append(DomainClass(s, boundary, labels, ((2 - chi - nb) // 2, nb)))
    return found
