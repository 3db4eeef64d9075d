"""Truncated balls of the curve, arc and domain complexes as metric graphs.

Only the 1-skeleton is modelled. Every vertex is a canonical class; edges
are recomputed from the disjointness predicates, never stored implicitly.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .classes import (
    ArcClass,
    BoundaryGraphClass,
    CurveClass,
    are_disjoint,
    boundary_graph,
    boundary_graphs_disjoint,
    class_from_json,
    enumerate_classes,
)
from .domains import (
    DOMAIN_SCHEMA,
    DomainClass,
    annulus_domain,
    domain_from_json,
    domains_disjoint,
    enumerate_domains,
)
from .surface import admissible_for_arcs, complexity

BALL_SCHEMA = "domcx.ball/1"


class ComplexError(ValueError):
    pass


class Unreachable(ComplexError):
    """No path between two vertices inside the ball."""


@dataclass(frozen=True)
class SpanWithC:
    """The subcomplex of D(S) spanned by annuli and the vertices of a predicate."""

    name: str
    predicate: Callable = field(compare=False)

    def __str__(self):
        return self.name


def _peripheral(X):
    return X.is_peripheral_pants


P_dC = SpanWithC("P_dC", _peripheral)

KINDS = ("C", "A", "A_B", "P_d", "D", "AC", "A_BC", "P_dC")
_ALIASES = {"P_∂": "P_d", "P_∂C": "P_dC", "Pd": "P_d", "PdC": "P_dC"}
_ARC_KINDS = ("A", "A_B", "AC", "A_BC")


def resolve_kind(kind):
    if isinstance(kind, SpanWithC):
        return P_dC if kind.name == "P_dC" else kind
    name = _ALIASES.get(kind, kind)
    if name == "P_dC":
        return P_dC
    if name not in KINDS:
        raise ComplexError(f"unknown complex kind {kind!r}")
    return name


def kind_name(kind):
    return str(resolve_kind(kind))


def is_vertex(kind, x):
    kind = resolve_kind(kind)
    if isinstance(kind, SpanWithC):
        return isinstance(x, DomainClass) and (x.annulus or bool(kind.predicate(x)))
    if kind == "C":
        return isinstance(x, CurveClass)
    if kind == "A":
        return isinstance(x, ArcClass)
    if kind == "A_B":
        return isinstance(x, BoundaryGraphClass)
    if kind == "P_d":
        return isinstance(x, DomainClass) and x.is_peripheral_pants
    if kind == "D":
        return isinstance(x, DomainClass)
    if kind == "AC":
        return isinstance(x, (ArcClass, CurveClass))
    return isinstance(x, (BoundaryGraphClass, CurveClass))  # A_BC


def is_edge(kind, u, v):
    """Whether distinct vertices ``u`` and ``v`` span an edge of ``kind``."""
    if u == v:
        raise ComplexError("vertices must be distinct")
    if not (is_vertex(kind, u) and is_vertex(kind, v)):
        raise ComplexError(f"not vertices of {kind_name(kind)}: {u!r}, {v!r}")
    if isinstance(u, DomainClass):
        return domains_disjoint(u, v)
    if isinstance(u, BoundaryGraphClass) and isinstance(v, BoundaryGraphClass):
        return boundary_graphs_disjoint(u, v)
    return are_disjoint(u, v)


def certified_lower_bound(kind, u, v):
    """0, 1 or 2; never more than the true distance in the full complex."""
    if u == v:
        return 0
    return 1 if is_edge(kind, u, v) else 2


# ------------------------------------------------------------------ balls


@dataclass(frozen=True)
class PathWitness:
    kind: object
    vertices: tuple

    @property
    def length(self):
        return len(self.vertices) - 1

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def validate(self):
        """Re-check every edge from scratch; raises on the first bad step."""
        vs = self.vertices
        if not vs:
            raise ComplexError("empty path")
        if len(set(vs)) != len(vs):
            raise ComplexError("path repeats a vertex")
        for a, b in zip(vs, vs[1:]):
            if not is_edge(self.kind, a, b):
                raise ComplexError(f"not an edge of {kind_name(self.kind)}: {a!r} -- {b!r}")
        return True

    def is_valid(self):
        try:
            return self.validate()
        except ComplexError:
            return False

    def to_json(self):
        return {"kind": kind_name(self.kind), "vertices": [vertex_to_json(x) for x in self.vertices]}


def vertex_to_json(x):
    return x.to_json()


def vertex_from_json(s, data):
    if data.get("schema") == DOMAIN_SCHEMA:
        return domain_from_json(s, data)
    return class_from_json(s, data)


def path_from_json(s, data):
    return PathWitness(resolve_kind(data["kind"]),
                       tuple(vertex_from_json(s, v) for v in data["vertices"]))


class ComplexBall:
    """Induced subgraph of a complex on the vertices within enumeration bounds.

    ``complete[i]`` records whether every neighbour of vertex ``i`` in the
    full complex is known to be present; it is False unless proven.
    """

    def __init__(self, kind, surface, vertices, adjacency, params, complete=None):
        self.kind = resolve_kind(kind)
        self.surface = surface
        self.vertices = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.adj = tuple(tuple(sorted(a)) for a in adjacency)
        self.params = dict(params)
        self.complete = tuple(complete) if complete is not None else (False,) * len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.index

    def neighbors(self, v):
        return [self.vertices[j] for j in self.adj[self.index[v]]]

    def edges(self):
        for i, nb in enumerate(self.adj):
            for j in nb:
                if i < j:
                    yield i, j

    @property
    def n_edges(self):
        return sum(len(a) for a in self.adj) // 2

    def components(self):
        seen = [-1] * len(self)
        comps = []
        for s0 in range(len(self)):
            if seen[s0] >= 0:
                continue
            seen[s0] = len(comps)
            stack, members = [s0], [s0]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if seen[y] < 0:
                        seen[y] = len(comps)
                        stack.append(y)
                        members.append(y)
            comps.append(sorted(members))
        return comps

    def is_connected(self):
        return len(self.components()) <= 1

    def subgraph(self, keep, kind=None):
        """Induced subgraph on the vertices satisfying ``keep``."""
        idx = [i for i, v in enumerate(self.vertices) if keep(v)]
        new = {old: k for k, old in enumerate(idx)}
        adj = [[new[j] for j in self.adj[i] if j in new] for i in idx]
        return ComplexBall(kind or self.kind, self.surface, [self.vertices[i] for i in idx],
                           adj, self.params)

    def to_json(self):
        return {
            "schema": BALL_SCHEMA,
            "kind": kind_name(self.kind),
            "surface": self.surface.to_json(),
            "params": self.params,
            "vertices": [vertex_to_json(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges()],
            "complete": list(self.complete),
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data):
        from .surface import Surface

        if data.get("schema") != BALL_SCHEMA:
            raise ComplexError(f"unsupported ball schema {data.get('schema')!r}")
        s = Surface.from_json(data["surface"])
        verts = [vertex_from_json(s, v) for v in data["vertices"]]
        adj = [[] for _ in verts]
        for i, j in data["edges"]:
            adj[i].append(j)
            adj[j].append(i)
        return cls(data["kind"], s, verts, adj, data.get("params", {}), data.get("complete"))

    def to_dot(self):
        lines = [f'graph "{kind_name(self.kind)}" {{']
        for i, v in enumerate(self.vertices):
            lines.append(f'  {i} [label="{_short(v)}"];')
        for i, j in self.edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _short(v):
    if isinstance(v, DomainClass):
        if v.annulus:
            return "A" + "".join(map(str, v.boundary[0].coords))
        return f"{v.topo_type}{sorted(v.labels)}"
    if isinstance(v, BoundaryGraphClass):
        v = v.arc
    return "".join(str(x) for x in v.coords)


def _adjacency(kind, vertices):
    n = len(vertices)
    adj = [[] for _ in range(n)]
    for i in range(n):
        u = vertices[i]
        for j in range(i + 1, n):
            if is_edge(kind, u, vertices[j]):
                adj[i].append(j)
                adj[j].append(i)
    return adj


def ball_vertices(kind, s, norm=8, arc_norm=None, max_boundary_curves=None):
    """Vertices of ``kind`` within the bounds, in canonical order."""
    kind = resolve_kind(kind)
    arc_norm = norm if arc_norm is None else arc_norm
    name = kind_name(kind)
    if name == "C":
        return enumerate_classes("curve", s, norm)
    if name == "A":
        return enumerate_classes("arc", s, arc_norm)
    if name == "A_B":
        return [boundary_graph(a) for a in enumerate_classes("arc", s, arc_norm)]
    if name == "AC":
        return enumerate_classes("curve", s, norm) + enumerate_classes("arc", s, arc_norm)
    if name == "A_BC":
        return (enumerate_classes("curve", s, norm)
                + [boundary_graph(a) for a in enumerate_classes("arc", s, arc_norm)])
    doms = enumerate_domains(s, norm, max_boundary_curves)
    return [X for X in doms if is_vertex(kind, X)]


def build_ball(kind, s, norm=8, arc_norm=None, max_boundary_curves=None):
    """The induced subgraph of ``kind`` on all vertices within the bounds."""
    kind = resolve_kind(kind)
    name = kind_name(kind)
    if complexity(s) <= 0:
        raise ComplexError(f"{s.name} has complexity {complexity(s)}; the complexes degenerate")
    if name in _ARC_KINDS and not admissible_for_arcs(s):
        raise ComplexError(f"{s.name} is not admissible for arc complexes")
    verts = ball_vertices(kind, s, norm, arc_norm, max_boundary_curves)
    params = {"norm": norm, "arc_norm": norm if arc_norm is None else arc_norm,
              "max_boundary_curves": max_boundary_curves}
    return ComplexBall(kind, s, verts, _adjacency(kind, verts), params)


def curve_image_in_domains(ball):
    """The annulus vertices of a D-type ball, keyed by their core curve."""
    return {X.boundary[0]: X for X in ball.vertices if isinstance(X, DomainClass) and X.annulus}


# ------------------------------------------------------------------ distances


def _path(ball, prev, j):
    out = []
    while j is not None:
        out.append(ball.vertices[j])
        j = prev[j]
    return out[::-1]


def bfs_from(ball, u):
    """Ball distances from ``u`` to every reachable vertex, by index."""
    i = ball.index[u]
    dist = {i: 0}
    dq = deque([i])
    while dq:
        x = dq.popleft()
        for y in ball.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                dq.append(y)
    return dist


def distance_upper(ball, u, v):
    """Shortest path length inside the ball, with its witness path."""
    if u not in ball or v not in ball:
        raise ComplexError("both vertices must lie in the ball")
    i, j = ball.index[u], ball.index[v]
    prev = {i: None}
    dq = deque([i])
    while dq:
        x = dq.popleft()
        if x == j:
            path = _path(ball, prev, j)
            return len(path) - 1, PathWitness(ball.kind, tuple(path))
        for y in ball.adj[x]:
            if y not in prev:
                prev[y] = x
                dq.append(y)
    raise Unreachable(f"{v!r} is not reachable from {u!r} inside the ball")


def bidirectional_distance(ball, u, v):
    """Ball distance by meeting searches from both ends (oracle for BFS)."""
    i, j = ball.index[u], ball.index[v]
    if i == j:
        return 0
    da, db = {i: 0}, {j: 0}
    fa, fb = [i], [j]
    best = None
    while fa and fb:
        if len(fa) <= len(fb):
            fa, best = _expand(ball, fa, da, db, best)
        else:
            fb, best = _expand(ball, fb, db, da, best)
        if best is not None and (not fa or not fb or
                                 best <= min(da[x] for x in fa) + min(db[x] for x in fb)):
            return best
    if best is None:
        raise Unreachable("vertices are in different components of the ball")
    return best


def _expand(ball, frontier, mine, other, best):
    nxt = []
    for x in frontier:
        for y in ball.adj[x]:
            if y in mine:
                continue
            mine[y] = mine[x] + 1
            nxt.append(y)
            if y in other:
                d = mine[y] + other[y]
                best = d if best is None else min(best, d)
    return nxt, best


# ------------------------------------------------------------------ density


def density_radius(ball, in_subset, construct):
    """Radius within which every ball vertex reaches the subset.

    ``construct(v)`` returns an explicit path (list of vertices) from ``v``
    to a subset member; each of its edges is re-checked with :func:`is_edge`.
    Returns ``(radius, worst_vertex)``. A failing construction raises
    :class:`ComplexError` naming the vertex.
    """
    radius, worst = 0, None
    for v in ball.vertices:
        if in_subset(v):
            continue
        path = construct(v)
        if not path or path[0] != v or not in_subset(path[-1]):
            raise ComplexError(f"construction failed at {v!r}")
        PathWitness(ball.kind, tuple(path)).validate()
        if len(path) - 1 > radius:
            radius, worst = len(path) - 1, v
    return radius, worst


def annulus_neighbor_path(X):
    """X -- annulus of its least essential boundary curve."""
    if X.annulus:
        return [X]
    return [X, annulus_domain(X.boundary[0])]
