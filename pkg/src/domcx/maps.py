"""Inclusions, coarse projections and path transformations between complexes."""
from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass

from .classes import (
    ArcClass,
    BoundaryGraphClass,
    ClassError,
    CurveClass,
    are_disjoint,
    boundary_graph,
    boundary_graphs_disjoint,
    canonicalize_arc_walk,
    enumerate_classes,
)
from .complexes import ComplexError, PathWitness, is_edge, resolve_kind
from .domains import (
    DomainClass,
    DomainError,
    annulus_domain,
    arc_walk,
    cut_for,
    domain_from_boundary,
    domain_inside,
    domains_disjoint,
    essential_boundary,
    pants_defining_arcs,
    pants_from_arc,
    peripheral_pants_in_piece,
    wrap_curve,
)
from .normal import Layout, NormalError, arc_complement, reverse_steps
from .realized import RealizedSystem


class MapError(ValueError):
    pass


class SearchFailure(MapError):
    """A witness search came back empty inside its configured ball."""


@dataclass(frozen=True)
class ProjectionRule:
    """A total order on classes, used wherever a choice has to be made."""

    name: str = "canonical-min"
    seed: int = 0

    def key(self, x):
        co = x.coords
        if self.name == "canonical-min":
            return co
        if self.name == "canonical-max":
            return tuple(-v for v in co)
        if self.name == "seeded-random":
            h = hashlib.sha256(f"{self.seed}:{co}".encode()).hexdigest()
            return (h, co)
        raise MapError(f"unknown projection rule {self.name!r}")

    def choose(self, candidates):
        candidates = list(candidates)
        if not candidates:
            raise MapError("nothing to choose from")
        return min(candidates, key=self.key)


PRESETS = (ProjectionRule("canonical-min"), ProjectionRule("canonical-max"),
           ProjectionRule("seeded-random", 7))


def rule_named(name, seed=7):
    if name not in ("canonical-min", "canonical-max", "seeded-random"):
        raise MapError(f"unknown projection rule {name!r}")
    if name == "seeded-random":
        return ProjectionRule(name, seed)
    return ProjectionRule(name)


# ------------------------------------------------------------ curves and domains


def include_curve_as_annulus(c):
    return annulus_domain(c)


def coarse_project(X, rule=PRESETS[0]):
    return rule.choose(essential_boundary(X))


def _drop_loops(vertices):
    """Collapse repeats: keep the path up to the first visit, resume after the last."""
    out = []
    where = {}
    for v in vertices:
        if v in where:
            cut = where[v]
            for w in out[cut + 1:]:
                del where[w]
            out = out[:cut + 1]
        else:
            where[v] = len(out)
            out.append(v)
    return out


def project_path_to_curves(p, rule=PRESETS[0]):
    """Project a domain-complex path between annuli to a curve-complex path."""
    p.validate()
    first, last = p.vertices[0], p.vertices[-1]
    if not (first.annulus and last.annulus):
        raise MapError("path must start and end at annulus vertices")
    seq = [first.boundary[0]] + [coarse_project(X, rule) for X in p.vertices[1:-1]]
    seq.append(last.boundary[0])
    return PathWitness("C", tuple(_drop_loops(seq)))


# ------------------------------------------------------------ arcs and boundary graphs


def _as_graph(x):
    return x if isinstance(x, BoundaryGraphClass) else boundary_graph(x)


class ConnectorSearch:
    """Short A_B paths between arcs.

    Connectors are built from arcs in the complement of the arcs already
    chosen; a breadth-first search over a pool of enumerated arcs is the
    fallback.
    """

    def __init__(self, s, arc_norm=6, pool=None):
        self.surface = s
        self.arc_norm = arc_norm
        self._pool_arcs = pool
        self._pool = None
        self._nb = {}
        self._comp = {}

    @property
    def pool(self):
        if self._pool is None:
            arcs = self._pool_arcs
            if arcs is None:
                arcs = enumerate_classes("arc", self.surface, self.arc_norm)
            self._pool = [_as_graph(a) for a in arcs]
        return self._pool

    def neighbors(self, g):
        if g not in self._nb:
            self._nb[g] = [h for h in self.pool if boundary_graphs_disjoint(g, h)]
        return self._nb[g]

    def around(self, *arcs):
        key = tuple(sorted(arcs))
        if key not in self._comp:
            self._comp[key] = complement_arcs(self.surface, list(key))
        return self._comp[key]

    def path(self, a, b, limit):
        """A_B path from a to b of length at most ``limit`` (as boundary graphs), or None."""
        ga, gb = _as_graph(a), _as_graph(b)
        if ga == gb:
            return [ga]
        if boundary_graphs_disjoint(ga, gb):
            return [ga, gb]
        if limit < 2:
            return None
        found = self._built(ga.arc, gb.arc, limit)
        if found is None:
            found = self._pooled(ga, gb, limit)
        return found

    def _built(self, a, b, limit):
        mid = self.around(a, b)
        if mid:
            return [_as_graph(x) for x in (a, mid[0], b)]
        if limit < 3:
            return None
        na, nb = self.around(a), self.around(b)
        nb_set = set(nb)
        for c1 in na:
            if are_disjoint(c1, b):
                mid = self.around(c1, b)
                if mid:
                    return [_as_graph(x) for x in (a, c1, mid[0], b)]
        for c3 in nb:
            if are_disjoint(c3, a):
                mid = self.around(a, c3)
                if mid:
                    return [_as_graph(x) for x in (a, mid[0], c3, b)]
        if limit < 4:
            return None
        for c1 in na:
            for c3 in nb:
                if c1 == c3 or c1 in nb_set:
                    continue
                if boundary_graphs_disjoint(_as_graph(c1), _as_graph(c3)):
                    return [_as_graph(x) for x in (a, c1, c3, b)]
                if are_disjoint(c1, c3):
                    mid = self.around(c1, c3)
                    if mid:
                        return [_as_graph(x) for x in (a, c1, mid[0], c3, b)]
        # the middle arc only has to miss c1 and c3 separately
        for c1 in na:
            for c2 in self.around(c1):
                g2 = _as_graph(c2)
                for c3 in nb:
                    if c2 != c3 and boundary_graphs_disjoint(g2, _as_graph(c3)):
                        return [_as_graph(x) for x in (a, c1, c2, c3, b)]
        return None

    def _pooled(self, ga, gb, limit):
        last = set(self.neighbors(gb))
        prev = {ga: None}
        frontier = [ga]
        for _ in range(1, limit):
            nxt = []
            for x in frontier:
                for y in self.neighbors(x):
                    if y in prev:
                        continue
                    prev[y] = x
                    if y in last:
                        out = [gb, y]
                        while prev[out[-1]] is not None:
                            out.append(prev[out[-1]])
                        return out[::-1]
                    nxt.append(y)
            frontier = nxt
            if not frontier:
                break
        return None


def _tree(comp, sources):
    """Breadth-first tree of the region graph from a set of source regions."""
    nbrs = {}
    for r1, r2, t, side in comp.links:
        nbrs.setdefault(r1, []).append((r2, (t, side)))
    prev = {r: None for r in sources}
    order = list(sources)
    dq = deque(sources)
    while dq:
        r = dq.popleft()
        for r2, step in nbrs.get(r, ()):
            if r2 not in prev:
                prev[r2] = (r, step)
                order.append(r2)
                dq.append(r2)
    return prev, order, nbrs


def _tree_path(prev, r):
    path = []
    while prev[r] is not None:
        r0, step = prev[r]
        path.append(step)
        r = r0
    return r, path[::-1]


def complement_arcs(s, system, max_loops=24):
    """Arcs disjoint from every arc of ``system`` and from its boundary labels.

    Returns shortest arcs between pairs of untouched labels, followed by
    loops at untouched labels read off the fundamental cycles of the
    complement (at most ``max_loops`` per label).
    """
    try:
        comp = arc_complement(s, [a.coords for a in system])
    except NormalError:
        return []
    touched = set()
    for a in system:
        touched |= set(a.endpoints)
    free = [v for v in s.labels if v not in touched]
    corners = {v: {} for v in free}
    for (t, k), r in comp.cusp_region.items():
        v = s.corner_label[t][k]
        if v in corners:
            corners[v].setdefault(r, (t, k))
    out = []
    seen = set(system)

    def add(start, steps, end):
        try:
            c = canonicalize_arc_walk(s, start, steps, end)
        except ClassError:
            return
        if c in seen or not isinstance(c, ArcClass):
            return
        if all(boundary_graphs_disjoint(boundary_graph(c), boundary_graph(a)) for a in system):
            seen.add(c)
            out.append(c)

    trees = {v: _tree(comp, list(corners[v])) for v in free}
    for i, u in enumerate(free):
        prev, _, _ = trees[u]
        for v in free[i + 1:]:
            hit = next((r for r in corners[v] if r in prev), None)
            if hit is not None:
                r0, path = _tree_path(prev, hit)
                add(corners[u][r0], path, corners[v][hit])
    for v in free:
        prev, order, nbrs = trees[v]
        loops = 0
        for r1 in order:
            for r2, step in nbrs.get(r1, ()):
                if loops >= max_loops:
                    break
                if r2 not in prev or prev[r2] == (r1, step):
                    continue
                if prev[r1] is not None and prev[r1][0] == r2 \
                        and s.glue[step[0]][step[1]] == prev[r1][1]:
                    continue
                a0, p1 = _tree_path(prev, r1)
                b0, p2 = _tree_path(prev, r2)
                add(corners[v][a0], p1 + [step] + reverse_steps(s, p2), corners[v][b0])
                loops += 1
    return out


def connector_bound(s):
    return 2 if s.genus == 0 and s.boundary_count >= 5 else 4


def arc_path_to_bgraph_path(p, search=None, limit=None):
    """Replace every A-edge of an arc path by a short A_B connector."""
    p.validate()
    vs = p.vertices
    if not vs:
        raise MapError("empty path")
    s = vs[0].surface
    search = search or ConnectorSearch(s)
    limit = connector_bound(s) if limit is None else limit
    out = [_as_graph(vs[0])]
    lengths = []
    for a, b in zip(vs, vs[1:]):
        seg = search.path(a, b, limit)
        if seg is None:
            raise SearchFailure(f"no A_B connector of length <= {limit} between {a!r} and {b!r}")
        lengths.append(len(seg) - 1)
        out.extend(seg[1:])
    return PathWitness("A_B", tuple(_drop_loops(out))), lengths


def arc_from_pants(P, rule=PRESETS[0]):
    return rule.choose(pants_defining_arcs(P))


# ------------------------------------------------------------ genus zero rectification


def _pants_beside(c, left, right, extra=()):
    """A peripheral pair of pants disjoint from ``left`` and ``right``.

    Tried first on both sides of ``c``, then among ``extra`` candidates.
    """
    s = c.surface
    cut, _ = cut_for(s, [c])
    cands = [peripheral_pants_in_piece(s, cut, i) for i in range(len(cut.pieces))]
    for Q in list(cands) + list(extra):
        if Q is None or Q in (left, right):
            continue
        if is_edge("D", Q, left) and is_edge("D", Q, right):
            return Q
    return None


def rectify_genus0_path(p, rule=PRESETS[0], extra=()):
    """Turn a domain-complex path between peripheral pants into a P_d path.

    Interior domains are first projected to curves (repeats collapsed);
    each interior curve is then swapped for a peripheral pair of pants
    disjoint from both neighbours. A curve whose neighbours are already
    adjacent is dropped instead.
    """
    p.validate()
    vs = list(p.vertices)
    s = vs[0].surface
    if s.genus != 0:
        raise MapError("rectification is only defined in genus 0")
    if not (vs[0].is_peripheral_pants and vs[-1].is_peripheral_pants):
        raise MapError("endpoints must be peripheral pants")
    if all(X.is_peripheral_pants for X in vs):
        return PathWitness("P_d", tuple(vs))
    curves = [coarse_project(X, rule) for X in vs[1:-1]]
    seq = _drop_loops([vs[0]] + [annulus_domain(c) for c in curves] + [vs[-1]])
    out = [seq[0]]
    i = 1
    while i < len(seq) - 1:
        left, mid, right = out[-1], seq[i], seq[i + 1]
        if left != right and is_edge("D", left, right):
            i += 1
            continue
        Q = _pants_beside(mid.boundary[0], left, right, extra)
        if Q is None:
            raise SearchFailure(f"no peripheral pants beside {mid!r}")
        out.append(Q)
        i += 1
    out.append(seq[-1])
    return PathWitness("P_d", tuple(_drop_loops(out)))


# ------------------------------------------------------------ positive genus


def wrap_construction(s):
    """The curve around all boundary labels and the two domains it bounds."""
    if s.genus < 1:
        raise MapError("the wrap construction needs positive genus")
    c = wrap_curve(s)
    B = domain_from_boundary(s, [c], s.labels)
    C = domain_from_boundary(s, [c], ())
    return c, B, C


def in_domain(P, B):
    """Piece-membership test: P lies inside B."""
    return domain_inside(P, B)


def _first_last_crossings(rs):
    """First and last crossing of strand 0 with strand 1, ordered along strand 0."""
    xs, ys = rs.strands[0].segs, rs.strands[1].segs
    found = []
    for i, j in rs.crossings():
        t, back, fwd = xs[i]
        a, b = rs._key(0, t, back), rs._key(0, t, fwd)
        # the crossing chord has one end on the circular stretch from a to b;
        # the closer that end is to a, the earlier the crossing
        ends = (rs._key(1, t, ys[j][1]), rs._key(1, t, ys[j][2]))
        near = min((e for e in ends if _circ(a, e) < _circ(a, b)), key=lambda e: _circ(a, e))
        found.append(((i, _circ(a, near)), j))
    found.sort()
    return found[0], found[-1]


def _circ(a, x):
    """Position of ``x`` on the triangle boundary read circularly from ``a``."""
    return (0, x) if x > a else (1, x)


def reroute_arc(a, c):
    """Arcs obtained by replacing the part of ``a`` beyond ``c`` by a strip along ``c``.

    Returns candidate arcs; both directions around ``c`` are offered.
    """
    s = a.surface
    if are_disjoint(a, c):
        return [a]
    rs = RealizedSystem(s, a, c)
    (i1, _), j1 = _first_last_crossings(rs)[0]
    (ik, _), jk = _first_last_crossings(rs)[1]
    w = arc_walk(a)
    csteps = list(Layout(s, c.coords).components()[0].steps)
    n = len(csteps)
    fwd = [csteps[(j1 + m) % n] for m in range((jk - j1) % n)]
    back_order = reverse_steps(s, [csteps[(jk + m) % n] for m in range((j1 - jk) % n)])
    routes = [fwd, back_order]
    if j1 == jk:
        routes.append(list(csteps[j1:]) + list(csteps[:j1]))
        routes.append(reverse_steps(s, list(csteps[j1:]) + list(csteps[:j1])))
    out = []
    for r in routes:
        steps = list(w.steps[:i1]) + r + list(w.steps[ik:])
        try:
            b = canonicalize_arc_walk(s, w.start, steps, w.end)
        except ClassError:
            continue
        if b not in out:
            out.append(b)
    return out


def project_pants_into_B(Q, c, B, rule=PRESETS[0]):
    """A peripheral pair of pants of B standing in for Q."""
    if not Q.is_peripheral_pants:
        raise MapError("expected a peripheral pair of pants")
    if in_domain(Q, B):
        return Q
    a = arc_from_pants(Q, rule)
    for b in reroute_arc(a, c):
        if not are_disjoint(b, c):
            continue
        try:
            P = pants_from_arc(b)
        except DomainError:
            continue
        if in_domain(P, B):
            return P
    raise MapError(f"could not reroute {Q!r} into B")


def transform_path_into_B(p, c, B, rule=PRESETS[0]):
    vs = [project_pants_into_B(Q, c, B, rule) for Q in p.vertices]
    return PathWitness("P_d", tuple(_drop_loops(vs)))


def component_search(s, start, goal, limit, kind="P_d", pool=()):
    """Breadth-first witness search over a pool of vertices (small pools only)."""
    kind = resolve_kind(kind)
    pool = list(pool)
    prev = {start: None}
    dq = deque([start])
    while dq:
        x = dq.popleft()
        if x == goal:
            out = [x]
            while prev[out[-1]] is not None:
                out.append(prev[out[-1]])
            path = out[::-1]
            return PathWitness(kind, tuple(path)) if len(path) - 1 <= limit else None
        for y in pool + [goal]:
            if y not in prev and y != x and is_edge(kind, x, y):
                prev[y] = x
                dq.append(y)
    return None


__all__ = [
    "MapError", "SearchFailure", "ProjectionRule", "PRESETS", "rule_named",
    "include_curve_as_annulus", "coarse_project", "project_path_to_curves",
    "ConnectorSearch", "connector_bound", "arc_path_to_bgraph_path",
    "pants_from_arc", "arc_from_pants", "rectify_genus0_path", "wrap_construction",
    "in_domain", "reroute_arc", "project_pants_into_B", "transform_path_into_B",
    "ArcClass", "CurveClass", "DomainClass", "ComplexError", "domains_disjoint",
]
