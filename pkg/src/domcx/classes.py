"""Isotopy classes of essential curves, arcs and boundary graphs.

Classes are identified by their normal coordinates on the reference
triangulation. Arcs parallel to an edge carry coordinate -1 on that edge.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .normal import (
    Layout,
    NormalError,
    check_walk,
    curve_steps_match,
    cut_multicurve,
    pos_is_corner,
    reduce_arc_walk,
    reduce_closed_walk,
    reverse_steps,
    walk_coords,
)


class ArcWalk(NamedTuple):
    """An arc given as a walk in the dual graph between two cusps."""

    start: tuple  # (triangle, corner)
    steps: tuple  # ((triangle, exit side), ...)
    end: tuple


class ClassError(ValueError):
    reason = "invalid"


class NonSimpleError(ClassError):
    reason = "non-simple"


class DisconnectedError(ClassError):
    reason = "disconnected"


class InessentialError(ClassError):
    reason = "inessential"


class _Class:
    __slots__ = ("surface", "coords", "_visits", "_hash")
    kind = "?"

    def __init__(self, surface, coords):
        self.surface = surface
        self.coords = tuple(coords)
        self._visits = None
        self._hash = hash((self.kind, self.coords))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, _Class) and self.kind == other.kind and self.coords == other.coords

    def __lt__(self, other):
        return (self.kind, self.coords) < (other.kind, other.coords)

    @property
    def norm(self):
        return sum(abs(x) for x in self.coords)

    def to_json(self):
        return {"kind": self.kind, "coords": list(self.coords)}

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coords)})"


class CurveClass(_Class):
    __slots__ = ()
    kind = "curve"

    @property
    def visits(self):
        if self._visits is None:
            comp = Layout(self.surface, self.coords).components()[0]
            self._visits = comp.visits
        return self._visits


class ArcClass(_Class):
    __slots__ = ("endpoints", "edge")
    kind = "arc"

    def __init__(self, surface, coords, endpoints=None):
        super().__init__(surface, coords)
        neg = [e for e, x in enumerate(self.coords) if x < 0]
        self.edge = neg[0] if neg else None
        if endpoints is None:
            if self.edge is not None:
                endpoints = surface.edge_ends[self.edge]
            else:
                comp = Layout(surface, self.coords).components()[0]
                self._visits = comp.visits
                endpoints = (surface.corner_label[comp.start[0]][comp.start[1]],
                             surface.corner_label[comp.end[0]][comp.end[1]])
        self.endpoints = tuple(sorted(endpoints))

    @property
    def visits(self):
        if self._visits is None:
            if self.edge is not None:
                self._visits = ()
            else:
                self._visits = Layout(self.surface, self.coords).components()[0].visits
        return self._visits

    def to_json(self):
        d = super().to_json()
        d["endpoints"] = list(self.endpoints)
        return d


class BoundaryGraphClass:
    __slots__ = ("arc", "touched")

    def __init__(self, arc):
        self.arc = arc
        self.touched = frozenset(arc.endpoints)

    def __eq__(self, other):
        return isinstance(other, BoundaryGraphClass) and self.arc == other.arc

    def __hash__(self):
        return hash(("bgraph", self.arc.coords))

    def __lt__(self, other):
        return self.arc < other.arc

    def __repr__(self):
        return f"BoundaryGraphClass({list(self.arc.coords)}, touched={sorted(self.touched)})"

    def to_json(self):
        return {"kind": "bgraph", "coords": list(self.arc.coords),
                "touched": sorted(self.touched)}


def class_from_json(s, data):
    kind = data.get("kind")
    if kind == "curve":
        return canonicalize(s, data["coords"], kind="curve")
    if kind == "arc":
        return canonicalize(s, data["coords"], kind="arc")
    if kind == "bgraph":
        return boundary_graph(canonicalize(s, data["coords"], kind="arc"))
    raise ClassError(f"unknown class kind {kind!r}")


# ------------------------------------------------------------ canonical form


def is_peripheral_coords(s, coords):
    return any(tuple(coords) == p for p in s.peripheral_coords.values())


def _from_coords(s, coords, kind):
    try:
        comps = Layout(s, coords).components()
    except NormalError as exc:
        raise NonSimpleError(str(exc)) from exc
    if not comps:
        raise InessentialError("empty coordinate vector")
    if len(comps) > 1:
        raise DisconnectedError(f"coordinates trace to {len(comps)} components")
    comp = comps[0]
    if comp.kind == "curve":
        if kind == "arc":
            raise ClassError("expected an arc, got a closed curve")
        if is_peripheral_coords(s, comp.coords):
            raise InessentialError("curve is parallel to a boundary component")
        c = CurveClass(s, comp.coords)
        c._visits = comp.visits
        return c
    if kind == "curve":
        raise ClassError("expected a closed curve, got an arc")
    if comp.kind == "edge":
        return ArcClass(s, comp.coords)
    ends = (s.corner_label[comp.start[0]][comp.start[1]],
            s.corner_label[comp.end[0]][comp.end[1]])
    a = ArcClass(s, comp.coords, ends)
    a._visits = comp.visits
    return a


def _safe_components(s, co):
    try:
        return Layout(s, co).components()
    except NormalError:
        return []


def _from_closed_walk(s, steps):
    check_walk(s, steps, closed=True)
    red = reduce_closed_walk(s, steps)
    if not red:
        raise InessentialError("walk is null-homotopic")
    co = walk_coords(s, red)
    comps = _safe_components(s, co)
    if len(comps) != 1 or not curve_steps_match(s, red, comps[0].steps):
        raise NonSimpleError("reduced walk is not a simple closed curve")
    if is_peripheral_coords(s, co):
        raise InessentialError("curve is parallel to a boundary component")
    c = CurveClass(s, co)
    c._visits = comps[0].visits
    return c


def _from_arc_walk(s, start, steps, end):
    if steps:
        check_walk(s, list(steps), closed=False)
        if steps[0][0] != start[0]:
            raise NormalError("arc walk does not start in its start triangle")
        tl, jl = steps[-1]
        if s.glue[tl][jl][0] != end[0]:
            raise NormalError("arc walk does not end in its end triangle")
    elif start[0] != end[0]:
        raise NormalError("empty arc walk must start and end in one triangle")
    start, red, end = reduce_arc_walk(s, tuple(start), list(steps), tuple(end))
    if not red:
        if start[1] == end[1]:
            raise InessentialError("arc is isotopic into the boundary")
        co = [0] * s.n_edges
        co[s.side_edge[start[0]][3 - start[1] - end[1]]] = -1
        return ArcClass(s, co)
    co = walk_coords(s, red)
    comps = _safe_components(s, co)
    ok = len(comps) == 1 and comps[0].kind == "arc"
    if ok:
        c = comps[0]
        fwd = c.start == start and c.end == end and list(c.steps) == red
        bwd = c.start == end and c.end == start and list(c.steps) == reverse_steps(s, red)
        ok = fwd or bwd
    if not ok:
        raise NonSimpleError("reduced walk is not a simple arc")
    return _from_coords(s, co, "arc")


def canonicalize(s, raw, kind=None):
    """Canonical class of a coordinate vector or a crossing sequence.

    ``raw`` may be a coordinate vector, a closed walk in the dual graph given as
    ``[(triangle, exit side), ...]`` or an :class:`ArcWalk`. Class instances are returned unchanged.
    """
    if isinstance(raw, _Class):
        return raw
    if isinstance(raw, dict):
        if "start" in raw:
            return _from_arc_walk(s, tuple(raw["start"]), [tuple(x) for x in raw["steps"]],
                                  tuple(raw["end"]))
        if "steps" in raw:
            return _from_closed_walk(s, [tuple(x) for x in raw["steps"]])
        return _from_coords(s, raw["coords"], kind or raw.get("kind"))
    if isinstance(raw, ArcWalk):
        return _from_arc_walk(s, tuple(raw.start), list(raw.steps), tuple(raw.end))
    raw = list(raw)
    if raw and isinstance(raw[0], (tuple, list)):
        return _from_closed_walk(s, [tuple(x) for x in raw])
    return _from_coords(s, raw, kind)


def canonicalize_arc_walk(s, start, steps, end):
    return _from_arc_walk(s, tuple(start), list(steps), tuple(end))


def canonicalize_curve_walk(s, steps):
    return _from_closed_walk(s, list(steps))


# ------------------------------------------------------------ intersection


def _by_triangle(visits):
    out = {}
    for idx, v in enumerate(visits):
        out.setdefault(v[0], []).append(idx)
    return out


def _interleaved(xb, xf, yb, yf):
    def between(p):
        return 0 < (p - xb) % 6 < (xf - xb) % 6
    return between(yb) != between(yf)


def _linking(x_vis, x_closed, y_vis, y_closed, stop_at=None):
    n, m = len(x_vis), len(y_vis)
    if not n or not m:
        return 0
    total = 0
    cap = n * m + 2
    yr = [(t, f, b) for t, b, f in reversed(y_vis)]
    xt = _by_triangle(x_vis)
    for ys, first_pass in ((y_vis, True), (yr, False)):
        yt = _by_triangle(ys)
        for t, xis in xt.items():
            yjs = yt.get(t)
            if not yjs:
                continue
            for i in xis:
                _, xb, xf = x_vis[i]
                for j in yjs:
                    _, yb, yf = ys[j]
                    if xb == yb:
                        continue
                    if xf != yf:
                        if not first_pass or xb == yf or xf == yb:
                            continue
                        if _interleaved(xb, xf, yb, yf):
                            total += 1
                    else:
                        if pos_is_corner(xf):
                            continue
                        s1 = xf
                        above_left = (xb - s1) % 6 < (yb - s1) % 6
                        ii, jj = i, j
                        steps = 0
                        linked = None
                        while True:
                            ii += 1
                            jj += 1
                            if ii == n:
                                if not x_closed:
                                    break
                                ii = 0
                            if jj == m:
                                if not y_closed:
                                    break
                                jj = 0
                            steps += 1
                            if steps > cap:
                                break
                            _, xb2, xf2 = x_vis[ii]
                            _, _, yf2 = ys[jj]
                            if xf2 == yf2:
                                if pos_is_corner(xf2):
                                    break
                                continue
                            above_right = (xf2 - xb2) % 6 > (yf2 - xb2) % 6
                            linked = above_left != above_right
                            break
                        if linked:
                            total += 1
                    if stop_at is not None and total >= stop_at:
                        return total
    return total


def intersection_number(x, y):
    """Geometric intersection number, by counting linked lifts in the dual tree."""
    if isinstance(x, BoundaryGraphClass):
        x = x.arc
    if isinstance(y, BoundaryGraphClass):
        y = y.arc
    if x == y:
        return 0
    xe = getattr(x, "edge", None)
    ye = getattr(y, "edge", None)
    if xe is not None and ye is not None:
        return 0
    if xe is not None:
        return y.coords[xe]
    if ye is not None:
        return x.coords[ye]
    return _linking(x.visits, x.kind == "curve", y.visits, y.kind == "curve")


def _sum_disjoint(x, y):
    s = x.surface
    xe, ye = getattr(x, "edge", None), getattr(y, "edge", None)
    if xe is not None or ye is not None:
        if xe is not None and ye is not None:
            return True
        return (y.coords[xe] if xe is not None else x.coords[ye]) == 0
    tot = tuple(a + b for a, b in zip(x.coords, y.coords))
    try:
        lay = Layout(s, tot)
    except NormalError:
        return False
    if lay.n_terminals != (2 if x.kind == "arc" else 0) + (2 if y.kind == "arc" else 0):
        return False
    comps = lay.components()
    if len(comps) != 2:
        return False
    return sorted(c.coords for c in comps) == sorted((x.coords, y.coords))


def are_disjoint(x, y):
    """True iff the classes can be realized disjointly.

    Equal classes count as disjoint; callers building complexes must reject
    them separately (see :func:`complexes.is_edge`).
    """
    if isinstance(x, BoundaryGraphClass):
        x = x.arc
    if isinstance(y, BoundaryGraphClass):
        y = y.arc
    if x == y:
        return True
    return _sum_disjoint(x, y)


def is_essential(x):
    """Essentiality decided from the pieces of the complement."""
    s = x.surface
    if isinstance(x, BoundaryGraphClass):
        x = x.arc
    if x.kind == "arc":
        if x.edge is not None:
            return True
        try:
            comps = Layout(s, x.coords).components()
        except NormalError:
            return False
        return len(comps) == 1 and comps[0].kind == "arc"
    try:
        cut = cut_multicurve(s, [x.coords])
    except NormalError:
        return False
    for p in cut.pieces:
        if p.topo_type == (0, 1):
            return False
        if p.topo_type == (0, 2) and len(p.original_boundaries) == 1:
            return False
    return len(cut.components) == 1


def boundary_graph(a):
    if not isinstance(a, ArcClass):
        raise ClassError("boundary graphs are built from arcs")
    return BoundaryGraphClass(a)


def boundary_graphs_disjoint(g1, g2):
    if g1 == g2:
        return False
    if g1.touched & g2.touched:
        return False
    return are_disjoint(g1.arc, g2.arc)


# ------------------------------------------------------------ enumeration


def _edge_order(s):
    order, placed = [], set()
    for t in range(s.n_triangles):
        for e in s.side_edge[t]:
            if e not in placed:
                placed.add(e)
                order.append(e)
    return order


def _coordinate_vectors(s, bound, arcs):
    """Yield candidate coordinate vectors with total weight in [1, bound]."""
    order = _edge_order(s)
    n = len(order)
    closes = [[] for _ in range(n)]
    pos = {e: i for i, e in enumerate(order)}
    for t in range(s.n_triangles):
        last = max(pos[e] for e in s.side_edge[t])
        closes[last].append(t)
    co = [0] * s.n_edges
    side_edge = s.side_edge

    def rec(idx, remaining, terms):
        if idx == n:
            if remaining < bound and (terms == 2 if arcs else True):
                yield tuple(co)
            return
        e = order[idx]
        for v in range(remaining + 1):
            co[e] = v
            ok = True
            tt = terms
            for t in closes[idx]:
                a0, a1, a2 = (co[x] for x in side_edge[t])
                if a0 > a1 + a2:
                    extra = a0 - a1 - a2
                elif a1 > a0 + a2:
                    extra = a1 - a0 - a2
                elif a2 > a0 + a1:
                    extra = a2 - a0 - a1
                else:
                    extra = 0 if (a0 + a1 + a2) % 2 == 0 else -1
                if extra < 0 or (extra and not arcs):
                    ok = False
                    break
                tt += extra
                if tt > 2:
                    ok = False
                    break
            if ok:
                yield from rec(idx + 1, remaining - v, tt)
        co[e] = 0

    yield from rec(0, bound, 0)


@lru_cache(maxsize=None)
def _enumerate(s, kind, bound):
    out = []
    if kind == "arc" and bound >= 1:
        for e in range(s.n_edges):
            co = [0] * s.n_edges
            co[e] = -1
            out.append(ArcClass(s, co))
    for co in _coordinate_vectors(s, bound, kind == "arc"):
        lay = Layout(s, co)
        comps = lay.components()
        if len(comps) != 1:
            continue
        comp = comps[0]
        if kind == "curve":
            if is_peripheral_coords(s, co):
                continue
            c = CurveClass(s, co)
        else:
            ends = (s.corner_label[comp.start[0]][comp.start[1]],
                    s.corner_label[comp.end[0]][comp.end[1]])
            c = ArcClass(s, co, ends)
        c._visits = comp.visits
        out.append(c)
    out.sort()
    return tuple(out)


def enumerate_classes(kind, s, norm_bound):
    """All essential classes of ``kind`` with norm at most ``norm_bound``, sorted."""
    if kind not in ("curve", "arc"):
        raise ValueError("kind must be 'curve' or 'arc'")
    if norm_bound < 1:
        return []
    return list(_enumerate(s, kind, int(norm_bound)))
