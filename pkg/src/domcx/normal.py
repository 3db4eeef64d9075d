"""Normal coordinates: decoding, tracing, cutting and dual-graph walks.

Positions on the boundary of a triangle are numbered 0..5 counterclockwise:
corner ``k`` sits at ``2k`` and side ``i`` at ``(2i + 3) % 6``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .surface import Piece


class NormalError(ValueError):
    """Raised when a coordinate vector is not realizable."""


def side_pos(i):
    return (2 * i + 3) % 6


def corner_pos(k):
    return 2 * k


def pos_is_corner(p):
    return p % 2 == 0


def pos_index(p):
    """Inverse of side_pos / corner_pos."""
    return p // 2 if p % 2 == 0 else ((p - 3) // 2) % 3


def decode_triangle(a0, a1, a2):
    """Split side weights into corner arcs and terminal segments.

    Returns ``(c, term)`` or None when the weights are not realizable.
    ``c[k]`` counts arcs around corner ``k``; ``term[k]`` counts arcs that end at
    corner ``k`` and leave through the opposite side.
    """
    a = (a0, a1, a2)
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        if a[i] > a[j] + a[k]:
            c = [0, 0, 0]
            c[j], c[k] = a[k], a[j]
            term = [0, 0, 0]
            term[i] = a[i] - a[j] - a[k]
            return tuple(c), tuple(term)
    if (a0 + a1 + a2) % 2:
        return None
    c = tuple((a[(k + 1) % 3] + a[(k + 2) % 3] - a[k]) // 2 for k in range(3))
    return c, (0, 0, 0)


@dataclass
class Component:
    kind: str  # "curve", "arc" or "edge"
    coords: tuple
    visits: tuple = ()  # (triangle, back position, forward position)
    steps: tuple = ()  # (triangle, exit side) for every crossing
    start: tuple | None = None  # arcs: (triangle, corner) of the first end
    end: tuple | None = None
    anchor: tuple | None = None  # curves: (triangle, side, position) of one entry
    edge: int | None = None
    # per visit: (triangle, back end, forward end), ends being ("c", corner)
    # or ("s", side, position from the side's first corner)
    segs: tuple = ()


class Layout:
    """Decoded normal multicurve / multiarc on a surface."""

    def __init__(self, s, coords):
        if len(coords) != s.n_edges:
            raise NormalError("coordinate vector has the wrong length")
        self.s = s
        self.coords = tuple(int(x) for x in coords)
        self.edge_arcs = [e for e, x in enumerate(self.coords) if x < 0]
        if any(x < -1 for x in self.coords):
            raise NormalError("only -1 is allowed as a negative coordinate")
        w = [max(x, 0) for x in self.coords]
        self.weights = w
        self.a, self.c, self.term = [], [], []
        for t in range(s.n_triangles):
            a = tuple(w[e] for e in s.side_edge[t])
            dec = decode_triangle(*a)
            if dec is None:
                raise NormalError(f"parity violated in triangle {t}")
            self.a.append(a)
            self.c.append(dec[0])
            self.term.append(dec[1])
        for e in self.edge_arcs:
            for t, i in s.edge_sides[e]:
                # nothing may cross an edge carrying an edge arc, and no arc may
                # end at a corner facing it from inside the adjacent triangles
                if self.term[t][i]:
                    raise NormalError("edge arc meets a terminal segment")
        self.n_terminals = sum(sum(x) for x in self.term)

    def inside(self, t, i, p):
        """Follow the segment entering triangle ``t`` through side ``i`` at ``p``.

        Returns ``(j, q)`` for the exit side and position, or ``(-1, k)`` when the
        segment ends at corner ``k``.
        """
        a, c = self.a[t], self.c[t]
        i1, i2 = (i + 1) % 3, (i + 2) % 3
        if p < c[i1]:
            return i2, a[i2] - 1 - p
        if p < c[i1] + self.term[t][i]:
            return -1, i
        return i1, a[i] - 1 - p

    def point(self, t, j, p):
        e = self.s.side_edge[t][j]
        if self.s.edge_sides[e][0] == (t, j):
            return e, p
        return e, self.weights[e] - 1 - p

    def cross(self, t, j, q):
        t2, i2 = self.s.glue[t][j]
        e = self.s.side_edge[t][j]
        return t2, i2, self.weights[e] - 1 - q

    def components(self):
        s = self.s
        seen = set()
        out = []
        n = s.n_edges
        for e in self.edge_arcs:
            co = [0] * n
            co[e] = -1
            out.append(Component("edge", tuple(co), edge=e))
        # arcs start at terminal segments
        used_term = set()
        for t in range(s.n_triangles):
            for k in range(3):
                for u in range(self.term[t][k]):
                    if (t, k, u) in used_term:
                        continue
                    used_term.add((t, k, u))
                    out.append(self._trace_arc(t, k, u, seen, used_term))
        for e in range(n):
            for q in range(self.weights[e]):
                if (e, q) not in seen:
                    out.append(self._trace_curve(e, q, seen))
        return out

    def _trace_arc(self, t, k, u, seen, used_term):
        co = [0] * self.s.n_edges
        visits, steps, segs = [], [], []
        j, p = k, self.c[t][(k + 1) % 3] + u
        visits.append((t, corner_pos(k), side_pos(k)))
        segs.append((t, ("c", k), ("s", k, p)))
        start = (t, k)
        while True:
            e, q = self.point(t, j, p)
            seen.add((e, q))
            co[e] += 1
            steps.append((t, j))
            t, i, p = self.cross(t, j, p)
            j, p2 = self.inside(t, i, p)
            if j < 0:
                kk = p2
                used_term.add((t, kk, p - self.c[t][(kk + 1) % 3]))
                visits.append((t, side_pos(i), corner_pos(kk)))
                segs.append((t, ("s", i, p), ("c", kk)))
                return Component("arc", tuple(co), tuple(visits), tuple(steps),
                                 start=start, end=(t, kk), segs=tuple(segs))
            visits.append((t, side_pos(i), side_pos(j)))
            segs.append((t, ("s", i, p), ("s", j, p2)))
            p = p2

    def _trace_curve(self, e, q, seen):
        co = [0] * self.s.n_edges
        visits, steps, segs = [], [], []
        t, i = self.s.edge_sides[e][0]
        p = q
        start = (t, i, p)
        while True:
            j, q2 = self.inside(t, i, p)
            if j < 0:
                raise NormalError("closed trace met a terminal")
            visits.append((t, side_pos(i), side_pos(j)))
            segs.append((t, ("s", i, p), ("s", j, q2)))
            steps.append((t, j))
            ee, qq = self.point(t, j, q2)
            seen.add((ee, qq))
            co[ee] += 1
            t, i, p = self.cross(t, j, q2)
            if (t, i, p) == start:
                return Component("curve", tuple(co), tuple(visits), tuple(steps),
                                 anchor=start, segs=tuple(segs))


def trace(s, coords):
    """Decompose a coordinate vector into its connected components."""
    return Layout(s, coords).components()


# ---------------------------------------------------------------- cutting


@dataclass
class CutResult:
    pieces: list
    components: list
    sides: list  # per curve component: (piece index, piece index)
    label_piece: dict
    piece_labels: list = field(default_factory=list)
    # region graph, used to build walks that stay inside one piece
    region_piece: list = field(default_factory=list)
    region_triangle: list = field(default_factory=list)
    links: list = field(default_factory=list)  # (region, region, triangle, exit side)
    cusp_region: dict = field(default_factory=dict)
    strand_regions: list = field(default_factory=list)  # per component, per visit


def cut_multicurve(s, curve_coords):
    """Cut ``s`` along a disjoint union of curves given by their coordinates.

    ``curve_coords`` lists the components (repeats are parallel copies). The
    union is realized in normal position and every component is recovered by
    tracing; a mismatch means the curves cross.
    """
    n = s.n_edges
    total = [0] * n
    for co in curve_coords:
        if len(co) != n or min(co, default=0) < 0:
            raise NormalError("cut_along accepts closed curves only")
        for e in range(n):
            total[e] += co[e]
    lay = Layout(s, total)
    if lay.n_terminals:
        raise NormalError("cut_along accepts closed curves only")
    comps = lay.components()
    got = sorted(c.coords for c in comps)
    want = sorted(tuple(co) for co in curve_coords)
    if got != want:
        raise NormalError("curve system has crossings")

    base, cnt = [], 0
    for t in range(s.n_triangles):
        base.append(cnt)
        cnt += 1 + sum(lay.c[t])
    parent = list(range(cnt))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def region(t, k, r):
        c = lay.c[t]
        if r >= c[k]:
            return base[t]
        off = sum(c[:k])
        return base[t] + 1 + off + r

    def seg_region(t, i, sgm):
        a, c = lay.a[t], lay.c[t]
        i1, i2 = (i + 1) % 3, (i + 2) % 3
        if sgm < c[i1]:
            return region(t, i1, sgm)
        if sgm == c[i1]:
            return base[t]
        return region(t, i2, a[i] - sgm)

    seg_owner = []
    links = []
    for e in range(n):
        (t1, i1), (t2, i2) = s.edge_sides[e]
        a = total[e]
        for sg in range(a + 1):
            r1 = seg_region(t1, i1, sg)
            r2 = seg_region(t2, i2, a - sg)
            links.append((r1, r2, t1, i1))
            links.append((r2, r1, t2, i2))
            x, y = find(r1), find(r2)
            if x != y:
                parent[x] = y
            seg_owner.append(r1)

    roots = {}
    for r in range(cnt):
        roots.setdefault(find(r), len(roots))
    npieces = len(roots)
    chi = [0] * npieces
    for r in range(cnt):
        chi[roots[find(r)]] += 1
    for r in seg_owner:
        chi[roots[find(r)]] -= 1

    label_piece = {}
    cusp_region = {}
    for t in range(s.n_triangles):
        for k in range(3):
            v = s.corner_label[t][k]
            cusp_region[(t, k)] = region(t, k, 0)
            label_piece[v] = roots[find(region(t, k, 0))]
    labels = [set() for _ in range(npieces)]
    for v, pc in label_piece.items():
        labels[pc].add(v)

    sides = []
    circles = [[] for _ in range(npieces)]
    curve_comps = [c for c in comps if c.kind == "curve"]
    strand_regions = []
    for comp in curve_comps:
        strand_regions.append(tuple(
            (seg_region(t, sg[1][1], sg[1][2]), seg_region(t, sg[1][1], sg[1][2] + 1))
            for t, sg in ((sg[0], sg) for sg in comp.segs)))
        t, i, p = comp.anchor
        pa = roots[find(seg_region(t, i, p))]
        pb = roots[find(seg_region(t, i, p + 1))]
        sides.append((pa, pb))
        circles[pa].append(comp.coords)
        circles[pb].append(comp.coords)

    pieces = []
    for x in range(npieces):
        nb = len(labels[x]) + len(circles[x])
        twice_g = 2 - chi[x] - nb
        if twice_g < 0 or twice_g % 2:
            raise NormalError("inconsistent piece topology")
        pieces.append(Piece(twice_g // 2, nb, frozenset(labels[x]), tuple(sorted(circles[x]))))
    region_piece = [roots[find(r)] for r in range(cnt)]
    region_triangle = []
    for t in range(s.n_triangles):
        region_triangle += [t] * (1 + sum(lay.c[t]))
    return CutResult(pieces, curve_comps, sides, label_piece, [frozenset(l) for l in labels],
                     region_piece, region_triangle, links, cusp_region, strand_regions)


# ---------------------------------------------------------------- walks


def walk_coords(s, steps):
    co = [0] * s.n_edges
    for t, j in steps:
        co[s.side_edge[t][j]] += 1
    return tuple(co)


def _cancel(s, steps):
    out = []
    for t, j in steps:
        if out:
            pt, pj = out[-1]
            if s.glue[pt][pj] == (t, j):
                out.pop()
                continue
        out.append((t, j))
    return out


def check_walk(s, steps, closed):
    for m in range(len(steps) - (0 if closed else 1)):
        t, j = steps[m]
        t2, _ = s.glue[t][j]
        if steps[(m + 1) % len(steps)][0] != t2:
            raise NormalError(f"walk is discontinuous at step {m}")


def reduce_closed_walk(s, steps):
    """Cancel backtracks, including across the wrap-around."""
    steps = _cancel(s, list(steps))
    while len(steps) >= 2:
        t, j = steps[-1]
        if s.glue[t][j] == steps[0]:
            steps = steps[1:-1]
        else:
            break
    return steps


def reduce_arc_walk(s, start, steps, end):
    """Cancel backtracks and slide both ends around their cusps.

    ``start`` and ``end`` are ``(triangle, corner)``. Returns the normalized
    triple. The first step of the result leaves through the side opposite the
    start corner, and symmetrically at the end.
    """
    steps = _cancel(s, list(steps))
    while True:
        changed = False
        if steps:
            t, k = start
            t0, j = steps[0]
            if j != k:
                start = s.corner_across(t0, j, k)
                steps = _cancel(s, steps[1:])
                changed = True
        if steps:
            t, k = end
            tl, jl = steps[-1]
            t2, i2 = s.glue[tl][jl]
            if i2 != k:
                end = s.corner_across(t2, i2, k)
                steps = _cancel(s, steps[:-1])
                changed = True
        if not changed:
            return start, steps, end


def reverse_steps(s, steps):
    return [s.glue[t][j] for t, j in reversed(steps)]


def cyclic_equal(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    n = len(a)
    doubled = a + a
    for r in range(n):
        if doubled[r:r + n] == b:
            return True
    return False


def curve_steps_match(s, walk, steps):
    walk, steps = list(walk), list(steps)
    return cyclic_equal(walk, steps) or cyclic_equal(walk, reverse_steps(s, steps))


# ---------------------------------------------------------------- arc complements


@dataclass
class ArcComplement:
    n_regions: int
    links: list  # (region, region, triangle, exit side)
    cusp_region: dict  # (triangle, corner) -> region, for corners no arc ends in
    region_root: list  # connected component of each region


def arc_complement(s, arc_coords):
    """Region graph of the complement of a disjoint system of arcs.

    ``arc_coords`` lists the components; an edge arc (a single -1) blocks its
    edge. Regions are separated by the arcs, so a walk along region links is
    disjoint from the whole system.
    """
    n = s.n_edges
    total = [0] * n
    blocked = set()
    for co in arc_coords:
        if len(co) != n:
            raise NormalError("coordinate vector has the wrong length")
        for e in range(n):
            if co[e] < 0:
                blocked.add(e)
            else:
                total[e] += co[e]
    if any(total[e] for e in blocked):
        raise NormalError("system crosses one of its edge arcs")
    lay = Layout(s, total)
    comps = lay.components()
    want = sorted(tuple(c) for c in arc_coords if min(c) >= 0)
    if sorted(c.coords for c in comps) != want:
        raise NormalError("arc system has crossings")

    base, cnt = [], 0
    for t in range(s.n_triangles):
        base.append(cnt)
        cnt += 1 + sum(lay.c[t]) + sum(lay.term[t])

    def region(t, k, r):
        c = lay.c[t]
        if r >= c[k]:
            return base[t]
        return base[t] + 1 + sum(c[:k]) + r

    def sector(t, j):
        return base[t] if j == 0 else base[t] + sum(lay.c[t]) + j

    def tside(t):
        for i in range(3):
            if lay.term[t][i]:
                return i, lay.term[t][i]
        return None, 0

    def gap_region(t, i, sg):
        a, c = lay.a[t], lay.c[t]
        i1, i2 = (i + 1) % 3, (i + 2) % 3
        ti, m = tside(t)
        if sg < c[i1]:
            return region(t, i1, sg)
        if ti == i:
            if sg <= c[i1] + m:
                return sector(t, sg - c[i1])
            return region(t, i2, a[i] - sg)
        if sg == c[i1]:
            if ti is None:
                return base[t]
            # side i+1 of the terminal side meets the last sector, side i+2 the first
            return sector(t, m if i == (ti + 1) % 3 else 0)
        return region(t, i2, a[i] - sg)

    parent = list(range(cnt))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    links = []
    for e in range(n):
        if e in blocked:
            continue
        (t1, i1), (t2, i2) = s.edge_sides[e]
        a = total[e]
        for sg in range(a + 1):
            r1, r2 = gap_region(t1, i1, sg), gap_region(t2, i2, a - sg)
            links.append((r1, r2, t1, i1))
            links.append((r2, r1, t2, i2))
            x, y = find(r1), find(r2)
            if x != y:
                parent[x] = y
    cusp = {}
    for t in range(s.n_triangles):
        ti, m = tside(t)
        for k in range(3):
            if ti == k:
                continue
            if lay.c[t][k]:
                cusp[(t, k)] = region(t, k, 0)
            elif ti is None:
                cusp[(t, k)] = base[t]
            else:
                cusp[(t, k)] = sector(t, 0 if k == (ti + 1) % 3 else m)
    return ArcComplement(cnt, links, cusp, [find(r) for r in range(cnt)])
