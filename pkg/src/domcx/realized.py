"""Explicit joint realizations and bigon removal.

This is the brute-force reference for intersection numbers. Two classes are
drawn together on the reference triangulation with an arbitrary interleaving
of their points on every edge. Inside a triangle every piece is a straight
chord, so two chords cross exactly when their endpoints interleave on the
triangle boundary. Empty bigons (and half-bigons at a shared cusp) are then
removed one at a time by swapping adjacent points, until none is left.
"""
from __future__ import annotations

import random

from .normal import Layout, side_pos


class _Strand:
    def __init__(self, s, cls, tag):
        self.tag = tag
        if getattr(cls, "edge", None) is not None:
            e = cls.edge
            t, i = s.edge_sides[e][0]
            self.closed = False
            self.segs = [(t, ("c", (i + 1) % 3), ("c", (i + 2) % 3))]
            self.weights = [0] * s.n_edges
            return
        lay = Layout(s, cls.coords)
        comps = lay.components()
        if len(comps) != 1:
            raise ValueError("oracle expects connected classes")
        comp = comps[0]
        self.closed = comp.kind == "curve"
        self.segs = list(comp.segs)
        self.weights = lay.weights


class RealizedSystem:
    """Joint polyline realization of two classes in taut position."""

    def __init__(self, s, x, y, seed=0):
        self.s = s
        self.strands = (_Strand(s, x, 0), _Strand(s, y, 1))
        rng = random.Random(seed)
        # order[e]: tokens (tag, own index along the edge) in edge order
        self.order = []
        for e in range(s.n_edges):
            toks = [(0, q) for q in range(self.strands[0].weights[e])]
            toks += [(1, q) for q in range(self.strands[1].weights[e])]
            # keep each strand's own points in order; only the interleave is random
            slots = sorted(rng.sample(range(len(toks)), self.strands[0].weights[e]))
            merged, xi, yi = [], 0, 0
            for pos in range(len(toks)):
                if xi < len(slots) and slots[xi] == pos:
                    merged.append((0, xi))
                    xi += 1
                else:
                    merged.append((1, yi))
                    yi += 1
            self.order.append(merged)
        self._index()
        self.removed = []
        self._reduce()

    # ---------------------------------------------------------- geometry

    def _index(self):
        self.where = {}
        for e, toks in enumerate(self.order):
            for idx, tok in enumerate(toks):
                self.where[(e, tok)] = idx

    def _combined(self, tag, t, i, p):
        s = self.s
        e = s.side_edge[t][i]
        w = self.strands[tag].weights[e]
        positive = s.edge_sides[e][0] == (t, i)
        q = p if positive else w - 1 - p
        idx = self.where[(e, (tag, q))]
        return e, idx if positive else len(self.order[e]) - 1 - idx

    def _key(self, tag, t, end):
        if end[0] == "c":
            return (2 * end[1], 0)
        _, i, p = end
        return (side_pos(i), self._combined(tag, t, i, p)[1])

    def _cross(self, xs, ys):
        t = xs[0]
        a, b = self._key(0, t, xs[1]), self._key(0, t, xs[2])
        c, d = self._key(1, t, ys[1]), self._key(1, t, ys[2])
        if len({a, b, c, d}) < 4:
            return False
        lo, hi = min(a, b), max(a, b)
        return (lo < c < hi) != (lo < d < hi)

    def crossings(self):
        xs, ys = self.strands[0].segs, self.strands[1].segs
        out = []
        by_t = {}
        for j, sg in enumerate(ys):
            by_t.setdefault(sg[0], []).append(j)
        for i, sg in enumerate(xs):
            for j in by_t.get(sg[0], ()):
                if self._cross(sg, ys[j]):
                    out.append((i, j))
        return out

    @property
    def crossing_count(self):
        return len(self.crossings())

    # ---------------------------------------------------------- bigons

    def _next(self, tag, m, d):
        st = self.strands[tag]
        m += d
        if 0 <= m < len(st.segs):
            return m
        if st.closed:
            return m % len(st.segs)
        return None

    def _exit(self, tag, m, d):
        sg = self.strands[tag].segs[m]
        return sg[2] if d > 0 else sg[1]

    def _find_bigon(self, i, j):
        xs, ys = self.strands[0].segs, self.strands[1].segs
        cap = len(xs) + len(ys) + 2
        for dx in (1, -1):
            for dy in (1, -1):
                mi, mj = i, j
                swaps = []
                for _ in range(cap):
                    t = xs[mi][0]
                    ex, ey = self._exit(0, mi, dx), self._exit(1, mj, dy)
                    if ex[0] == "c" or ey[0] == "c":
                        if ex == ey:
                            return swaps, 1
                        break
                    if ex[1] != ey[1]:
                        break
                    e, px = self._combined(0, t, ex[1], ex[2])
                    _, py = self._combined(1, t, ey[1], ey[2])
                    if abs(px - py) != 1:
                        break
                    swaps.append((e, self._tok(0, t, ex), self._tok(1, t, ey)))
                    mi, mj = self._next(0, mi, dx), self._next(1, mj, dy)
                    if mi is None or mj is None:
                        break
                    if self._cross(xs[mi], ys[mj]):
                        return swaps, 2
        return None

    def _tok(self, tag, t, end):
        s = self.s
        _, i, p = end
        e = s.side_edge[t][i]
        w = self.strands[tag].weights[e]
        q = p if s.edge_sides[e][0] == (t, i) else w - 1 - p
        return (tag, q)

    def _reduce(self):
        while True:
            found = None
            for i, j in self.crossings():
                found = self._find_bigon(i, j)
                if found:
                    break
            if not found:
                return
            swaps, kind = found
            for e, tx, ty in swaps:
                a, b = self.where[(e, tx)], self.where[(e, ty)]
                self.order[e][a], self.order[e][b] = ty, tx
                self.where[(e, tx)], self.where[(e, ty)] = b, a
            self.removed.append(kind)


def oracle_intersection(s, x, y, seed=0):
    """Intersection number by bigon removal from a random joint realization."""
    if x == y:
        return 0
    return RealizedSystem(s, x, y, seed=seed).crossing_count
