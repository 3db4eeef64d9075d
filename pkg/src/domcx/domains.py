"""Domains, pairs of pants and regular neighbourhoods of boundary graphs."""
from __future__ import annotations

from collections import deque
from functools import lru_cache

from .classes import (
    ArcClass,
    ArcWalk,
    ClassError,
    CurveClass,
    InessentialError,
    are_disjoint,
    boundary_graph,
    canonicalize,
    canonicalize_arc_walk,
    canonicalize_curve_walk,
    enumerate_classes,
)
from .normal import cut_multicurve, reverse_steps

DOMAIN_SCHEMA = "domcx.domain/1"


class DomainError(ValueError):
    pass


class DomainClass:
    """Isotopy class of a domain.

    The class is determined by its essential boundary multiset, the boundary
    labels of S it contains and its topological type; an annulus is flagged
    separately because it is not a piece of the complement of its core.
    """

    __slots__ = ("surface", "boundary", "labels", "topo_type", "annulus", "_key", "_hash")

    def __init__(self, surface, boundary, labels, topo_type, annulus=False):
        self.surface = surface
        self.boundary = tuple(sorted(boundary))
        self.labels = frozenset(labels)
        self.topo_type = tuple(topo_type)
        self.annulus = bool(annulus)
        self._key = (tuple(c.coords for c in self.boundary), tuple(sorted(self.labels)),
                     self.annulus, self.topo_type)
        self._hash = hash(self._key)

    def __eq__(self, other):
        return isinstance(other, DomainClass) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    @property
    def key(self):
        return self._key

    @property
    def euler_characteristic(self):
        g, n = self.topo_type
        return 2 - 2 * g - n

    @property
    def is_pants(self):
        return self.topo_type == (0, 3) and not self.annulus

    @property
    def peripherality(self):
        if not self.is_pants:
            return None
        n = len(self.labels)
        return "none" if n == 0 else ("mono" if n == 1 else "bi")

    @property
    def is_peripheral_pants(self):
        return self.is_pants and len(self.labels) >= 1

    def __repr__(self):
        if self.annulus:
            return f"Annulus({list(self.boundary[0].coords)})"
        bd = [list(c.coords) for c in self.boundary]
        return f"Domain(type={self.topo_type}, labels={sorted(self.labels)}, boundary={bd})"

    def to_json(self):
        return {
            "schema": DOMAIN_SCHEMA,
            "boundary": [list(c.coords) for c in self.boundary],
            "labels": sorted(self.labels),
            "topo_type": list(self.topo_type),
            "annulus": self.annulus,
            "peripherality": self.peripherality,
        }


PantsClass = DomainClass


def domain_from_json(s, data):
    if data.get("schema") != DOMAIN_SCHEMA:
        raise DomainError(f"unsupported domain schema {data.get('schema')!r}")
    curves = [canonicalize(s, co, kind="curve") for co in data["boundary"]]
    if data.get("annulus"):
        return annulus_domain(curves[0])
    return domain_from_boundary(s, curves, data["labels"])


def annulus_domain(c):
    if not isinstance(c, CurveClass):
        raise DomainError("annuli are built from essential curves")
    from .classes import is_essential

    if not is_essential(c):
        raise InessentialError("inessential curve has no essential annulus")
    return DomainClass(c.surface, (c,), (), (0, 2), annulus=True)


def essential_boundary(X):
    return tuple(sorted(set(X.boundary)))


@lru_cache(maxsize=200_000)
def _cut(s, curve_key):
    return cut_multicurve(s, [list(k) for k in curve_key])


def cut_for(s, curves):
    key = tuple(sorted({c.coords for c in curves}))
    return _cut(s, key), key


def domain_from_boundary(s, curves, labels):
    """The domain bounded by ``curves`` (essential) and containing ``labels``."""
    curves = sorted(set(curves))
    if not curves:
        raise DomainError("a proper domain needs an essential boundary curve")
    cut, key = cut_for(s, curves)
    labels = frozenset(labels)
    want = set(key)
    for piece in cut.pieces:
        if piece.original_boundaries == labels and set(piece.cut_circles) == want:
            bd = [canonicalize(s, co, kind="curve") for co in piece.cut_circles]
            return DomainClass(s, bd, labels, piece.topo_type)
    raise DomainError("no piece of the cut matches the requested domain")


def domains_of_multicurve(s, curves):
    """All domains whose essential boundary is exactly the given multicurve."""
    cut, key = cut_for(s, curves)
    want = set(key)
    by = {c.coords: c for c in curves}
    out = []
    for piece in cut.pieces:
        if set(piece.cut_circles) == want:
            out.append(DomainClass(s, [by[co] for co in piece.cut_circles],
                                   piece.original_boundaries, piece.topo_type))
    return out


def _region(X, cut, key):
    """Pieces of the cut along ``key`` that make up ``X``."""
    own = {c.coords for c in X.boundary}
    n = len(cut.pieces)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for comp, (pa, pb) in zip(cut.components, cut.sides):
        if comp.coords not in own:
            ra, rb = find(pa), find(pb)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), set()).add(x)
    adj = {}
    for comp, (pa, pb) in zip(cut.components, cut.sides):
        if comp.coords in own:
            for p in (pa, pb):
                adj.setdefault(find(p), []).append(comp.coords)
    want = sorted(c.coords for c in X.boundary)
    hits = []
    for root, members in groups.items():
        labels = set()
        for m in members:
            labels |= cut.pieces[m].original_boundaries
        if labels == X.labels and sorted(adj.get(root, [])) == want:
            hits.append(members)
    if len(hits) != 1:
        raise DomainError(f"could not locate domain in cut ({len(hits)} candidates)")
    return hits[0]


def _curve_inside(c, Y, cut, key):
    """Whether the curve ``c`` (not a boundary curve of Y) lies inside Y."""
    region = _region(Y, cut, key)
    for comp, (pa, _) in zip(cut.components, cut.sides):
        if comp.coords == c.coords:
            return pa in region
    raise DomainError("curve missing from cut")


def domains_disjoint(X, Y):
    """Whether two distinct domains admit disjoint realizations.

    Boundary curves shared by both domains are realized as parallel copies
    with the annulus between them assigned to neither domain.
    """
    if X == Y:
        raise DomainError("vertices must be distinct")
    bx, by = essential_boundary(X), essential_boundary(Y)
    for c in bx:
        for d in by:
            if c != d and not are_disjoint(c, d):
                return False
    if X.annulus and Y.annulus:
        return True
    s = X.surface
    cut, key = cut_for(s, bx + by)
    if X.annulus or Y.annulus:
        A, Z = (X, Y) if X.annulus else (Y, X)
        c = A.boundary[0]
        if c in by if A is X else c in bx:
            return True
        return not _curve_inside(c, Z, cut, key)
    return not (_region(X, cut, key) & _region(Y, cut, key))


# ------------------------------------------------------ regular neighbourhoods


def _rotate(s, corner, direction):
    t, k = corner
    side = (k + 1) % 3 if direction > 0 else (k + 2) % 3
    return (t, side), s.corner_across(t, side, k)


def _full_rotation(s, corner, direction=1):
    steps, cur = [], corner
    while True:
        step, cur = _rotate(s, cur, direction)
        steps.append(step)
        if cur == corner:
            return steps


def _partial_rotation(s, corner, target, direction):
    steps, cur = [], corner
    limit = 3 * s.n_triangles + 1
    while cur != target:
        step, cur = _rotate(s, cur, direction)
        steps.append(step)
        if len(steps) > limit:
            raise DomainError("corners are not around the same cusp")
    return steps


def arc_walk(a):
    """A dual-graph walk realizing the arc ``a``."""
    s = a.surface
    if a.edge is not None:
        t, i = s.edge_sides[a.edge][0]
        return ArcWalk((t, (i + 1) % 3), (), (t, (i + 2) % 3))
    from .normal import Layout

    comp = Layout(s, a.coords).components()[0]
    return ArcWalk(comp.start, tuple(comp.steps), comp.end)


def _curve_or_label(s, steps):
    try:
        return canonicalize_curve_walk(s, steps)
    except InessentialError:
        from .normal import reduce_closed_walk, walk_coords

        red = reduce_closed_walk(s, steps)
        co = walk_coords(s, red)
        for v, p in s.peripheral_coords.items():
            if p == co:
                return v
        raise


def regular_neighborhood_pants(g):
    """The pair of pants given by a regular neighbourhood of a boundary graph.

    Boundary circles of the neighbourhood that are parallel to a boundary
    component of S are identified with it.
    """
    if isinstance(g, ArcClass):
        g = boundary_graph(g)
    a = g.arc
    s = a.surface
    w = arc_walk(a)
    steps = list(w.steps)
    u = s.corner_label[w.start[0]][w.start[1]]
    v = s.corner_label[w.end[0]][w.end[1]]
    if u != v:
        loop = (steps + _full_rotation(s, w.end) + reverse_steps(s, steps)
                + _full_rotation(s, w.start))
        circles = [_curve_or_label(s, loop)]
        labels = {u, v}
    elif w.start != w.end:
        circles = []
        for d in (1, -1):
            loop = steps + _partial_rotation(s, w.end, w.start, d)
            circles.append(_curve_or_label(s, loop))
        labels = {u}
    else:
        # both ends in one corner: one boundary arc of the cusp is empty and
        # the other goes all the way round, against the order of the ends
        from .normal import Layout

        segs = Layout(s, a.coords).components()[0].segs
        d = -1 if segs[0][2][2] > segs[-1][1][2] else 1
        circles = [_curve_or_label(s, steps),
                   _curve_or_label(s, steps + _full_rotation(s, w.end, d))]
        labels = {u}
    curves = [c for c in circles if isinstance(c, CurveClass)]
    labels |= {c for c in circles if not isinstance(c, CurveClass)}
    if not curves:
        raise DomainError("neighbourhood is the whole surface; it is not a proper domain")
    P = domain_from_boundary(s, curves, labels)
    if P.topo_type != (0, 3):
        raise DomainError(f"neighbourhood has type {P.topo_type}, expected a pair of pants")
    return P


def pants_from_arc(a):
    return regular_neighborhood_pants(boundary_graph(a))


# ------------------------------------------------------ defining arcs


def _piece_index(P, cut):
    want = sorted(c.coords for c in P.boundary)
    for idx, piece in enumerate(cut.pieces):
        if piece.original_boundaries == P.labels and sorted(piece.cut_circles) == want:
            return idx
    raise DomainError("pants not found among the pieces of its boundary cut")


def _region_bfs(cut, piece, sources, targets):
    """Shortest region path (as dual-graph steps) inside one piece."""
    nbrs = {}
    for r1, r2, t, side in cut.links:
        if cut.region_piece[r1] == piece:
            nbrs.setdefault(r1, []).append((r2, (t, side)))
    prev = {r: None for r in sources}
    dq = deque(sources)
    while dq:
        r = dq.popleft()
        if r in targets:
            end = r
            path = []
            while prev[r] is not None:
                r0, step = prev[r]
                path.append(step)
                r = r0
            return path[::-1], r, end
        for r2, step in nbrs.get(r, ()):
            if r2 not in prev:
                prev[r2] = (r, step)
                dq.append(r2)
    raise DomainError("region search failed")


def _cusp_regions(s, cut, piece, label):
    out = {}
    for (t, k), r in cut.cusp_region.items():
        if s.corner_label[t][k] == label and cut.region_piece[r] == piece:
            out[r] = (t, k)
    return out


def arc_between(s, cut, piece, u, v):
    """An arc from label ``u`` to label ``v`` running inside one piece of a cut."""
    cu, cv = _cusp_regions(s, cut, piece, u), _cusp_regions(s, cut, piece, v)
    path, first, r = _region_bfs(cut, piece, list(cu), set(cv))
    return canonicalize_arc_walk(s, cu[first], path, cv[r])


def loop_arc(s, cut, piece, v, ci):
    """An arc from ``v`` to itself going once around cut circle ``ci``, inside ``piece``."""
    cv = _cusp_regions(s, cut, piece, v)
    comp = cut.components[ci]
    targets = {}
    for m, (ra, rb) in enumerate(cut.strand_regions[ci]):
        for r in (ra, rb):
            if cut.region_piece[r] == piece:
                targets.setdefault(r, m)
    path, first, r = _region_bfs(cut, piece, list(cv), set(targets))
    m = targets[r]
    loop = list(comp.steps[m:]) + list(comp.steps[:m])
    start = cv[first]
    return canonicalize_arc_walk(s, start, path + loop + reverse_steps(s, path), start)


def pants_defining_arcs(P):
    """All arc classes whose boundary-graph neighbourhood is ``P``, sorted."""
    if not P.is_peripheral_pants:
        raise DomainError("only peripheral pants have defining arcs")
    s = P.surface
    cut, key = cut_for(s, P.boundary)
    piece = _piece_index(P, cut)
    labels = sorted(P.labels)
    if len(labels) >= 2:
        u, v = labels[:2]
        base = arc_between(s, cut, piece, u, v)
        bw = arc_walk(base)
        st = list(bw.steps)
        uu = st + _full_rotation(s, bw.end) + reverse_steps(s, st)
        vv = reverse_steps(s, st) + _full_rotation(s, bw.start) + st
        arcs = [base,
                canonicalize_arc_walk(s, bw.start, uu, bw.start),
                canonicalize_arc_walk(s, bw.end, vv, bw.end)]
    else:
        ci = next(i for i, comp in enumerate(cut.components)
                  if comp.coords == P.boundary[0].coords)
        arcs = [loop_arc(s, cut, piece, labels[0], ci)]
    arcs = sorted(set(arcs))
    for a in arcs:
        if regular_neighborhood_pants(boundary_graph(a)) != P:
            raise DomainError("defining arc does not reproduce its pants")
    return arcs


def peripheral_pants_in_piece(s, cut, piece):
    """A peripheral pair of pants inside one piece of a cut, or None.

    Built as the neighbourhood of an arc between two labels of the piece,
    or of a loop from its only label around one of its cut circles.
    """
    labels = sorted(cut.pieces[piece].original_boundaries)
    if not labels:
        return None
    try:
        if len(labels) >= 2:
            a = arc_between(s, cut, piece, labels[0], labels[1])
        else:
            ci = next(i for i, regs in enumerate(cut.strand_regions)
                      if any(cut.region_piece[r] == piece for ab in regs for r in ab))
            a = loop_arc(s, cut, piece, labels[0], ci)
        return pants_from_arc(a)
    except (ClassError, DomainError, StopIteration):
        return None


def domain_inside(X, Y):
    """Whether X can be isotoped into Y (X's pieces all lie in Y's region)."""
    if X == Y:
        return True
    s = X.surface
    bx, by = essential_boundary(X), essential_boundary(Y)
    for c in bx:
        for d in by:
            if c != d and not are_disjoint(c, d):
                return False
    cut, key = cut_for(s, bx + by)
    if Y.annulus:
        return False
    if X.annulus:
        c = X.boundary[0]
        return c in by or _curve_inside(c, Y, cut, key)
    return _region(X, cut, key) <= _region(Y, cut, key)


# ------------------------------------------------------ enumeration


def disjoint_families(curves, max_size):
    """All sets of pairwise disjoint distinct curves of size 1..max_size."""
    n = len(curves)
    nb = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if are_disjoint(curves[i], curves[j]):
                nb[i].add(j)
                nb[j].add(i)
    out = []

    def rec(chosen, cand):
        out.append(tuple(curves[i] for i in chosen))
        if len(chosen) == max_size:
            return
        for j in sorted(cand):
            if not chosen or j > chosen[-1]:
                rec(chosen + [j], cand & nb[j])

    for i in range(n):
        rec([i], nb[i])
    return out


@lru_cache(maxsize=None)
def _enumerate_domains(s, norm_bound, max_boundary_curves):
    curves = enumerate_classes("curve", s, norm_bound)
    out = set()
    for c in curves:
        out.add(annulus_domain(c))
    for fam in disjoint_families(curves, max_boundary_curves):
        out.update(domains_of_multicurve(s, list(fam)))
    return tuple(sorted(out))


def enumerate_domains(s, norm_bound, max_boundary_curves=None):
    if max_boundary_curves is None:
        max_boundary_curves = 3 * s.genus + s.boundary_count - 3
    if norm_bound < 1 or max_boundary_curves < 1:
        return []
    return list(_enumerate_domains(s, int(norm_bound), int(max_boundary_curves)))


# ------------------------------------------------------ wrap curve


def wrap_curve(s):
    """The curve around all boundary components, bounding the handles.

    Obtained as the boundary of a regular neighbourhood of the boundary
    components joined by a spanning tree of triangulation edges.
    """
    if s.genus < 1:
        raise DomainError("the wrap construction needs positive genus")
    parent = {v: v for v in s.labels}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    tree = set()
    for e, (p, q) in enumerate(s.edge_ends):
        if find(p) != find(q):
            parent[find(p)] = find(q)
            tree.add(e)
    start = (0, 0)
    steps, cur = [], start
    limit = 12 * s.n_triangles
    while True:
        t, k = cur
        side = (k + 1) % 3
        if s.side_edge[t][side] in tree:
            cur = (t, (k + 2) % 3)
        else:
            steps.append((t, side))
            cur = s.corner_across(t, side, k)
        if cur == start:
            break
        if len(steps) > limit:
            raise DomainError("wrap walk did not close")
    return canonicalize_curve_walk(s, steps)
