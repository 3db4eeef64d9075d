"""
Combinatorial model of a compact orientable surface S_{g,b}.

Each boundary component is modelled as a distinguished puncture of an ideal
triangulation. Triangles are stored by their counterclockwise boundary word
``((e0, s0), (e1, s1), (e2, s2))``: letter ``m`` runs from corner ``m`` to
corner ``m + 1`` along edge ``e_m`` in direction ``s_m`` (+1 or -1).

Side ``i`` of a triangle is the side opposite corner ``i``; it runs from
corner ``i + 1`` to corner ``i + 2`` and is carried by letter ``i + 1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache

SURFACE_SCHEMA = "domcx.surface/1"


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Surface:
    genus: int
    boundary_count: int
    words: tuple

    def __eq__(self, other):
        if not isinstance(other, Surface):
            return NotImplemented
        return (self.genus, self.boundary_count, self.words) == (
            other.genus, other.boundary_count, other.words)

    def __hash__(self):
        return hash((self.genus, self.boundary_count, len(self.words)))

    def __repr__(self):
        return f"Surface(genus={self.genus}, boundary_count={self.boundary_count})"

    @property
    def name(self):
        return f"S_{{{self.genus},{self.boundary_count}}}"

    @property
    def euler_characteristic(self):
        return 2 - 2 * self.genus - self.boundary_count

    @property
    def n_triangles(self):
        return len(self.words)

    @cached_property
    def n_edges(self):
        return 1 + max(e for w in self.words for e, _ in w)

    @cached_property
    def side_edge(self):
        """``side_edge[t][i]``: edge carried by side ``i`` of triangle ``t``."""
        return tuple(tuple(w[(i + 1) % 3][0] for i in range(3)) for w in self.words)

    @cached_property
    def edge_sides(self):
        """``edge_sides[e]``: the (triangle, side) pairs of ``e``, positive side first."""
        pos, neg = {}, {}
        for t, w in enumerate(self.words):
            for m, (e, s) in enumerate(w):
                (pos if s > 0 else neg)[e] = (t, (m + 2) % 3)
        return tuple((pos[e], neg[e]) for e in range(self.n_edges))

    @cached_property
    def glue(self):
        """``glue[t][i]``: the (triangle, side) glued to side ``i`` of ``t``."""
        table = [[None] * 3 for _ in self.words]
        for a, b in self.edge_sides:
            table[a[0]][a[1]] = b
            table[b[0]][b[1]] = a
        return tuple(tuple(row) for row in table)

    @cached_property
    def corner_label(self):
        """``corner_label[t][k]``: boundary label (1-based) of corner ``k`` of ``t``."""
        parent = list(range(3 * len(self.words)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t in range(len(self.words)):
            for i in range(3):
                t2, i2 = self.glue[t][i]
                # side i runs corner i+1 -> i+2; the glued side runs the other way
                for a, b in (((i + 1) % 3, (i2 + 2) % 3), ((i + 2) % 3, (i2 + 1) % 3)):
                    ra, rb = find(3 * t + a), find(3 * t2 + b)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        labels = {}
        out = []
        for t in range(len(self.words)):
            row = []
            for k in range(3):
                r = find(3 * t + k)
                if r not in labels:
                    labels[r] = len(labels) + 1
                row.append(labels[r])
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def labels(self):
        return tuple(range(1, self.boundary_count + 1))

    @cached_property
    def edge_ends(self):
        """Boundary labels at the two ends of each edge."""
        out = []
        for (t, i), _ in self.edge_sides:
            out.append((self.corner_label[t][(i + 1) % 3], self.corner_label[t][(i + 2) % 3]))
        return tuple(out)

    @cached_property
    def peripheral_coords(self):
        """Normal coordinates of the curve parallel to each boundary label."""
        out = {}
        for v in self.labels:
            out[v] = tuple(sum(1 for x in ends if x == v) for ends in self.edge_ends)
        return out

    @cached_property
    def degree(self):
        """Number of triangle corners at each boundary label."""
        deg = dict.fromkeys(self.labels, 0)
        for row in self.corner_label:
            for v in row:
                deg[v] += 1
        return deg

    def corner_across(self, t, s, k):
        """The corner of the triangle across side ``s`` that is corner ``k`` of ``t``."""
        t2, s2 = self.glue[t][s]
        if k == (s + 1) % 3:
            return t2, (s2 + 2) % 3
        if k == (s + 2) % 3:
            return t2, (s2 + 1) % 3
        raise ValueError("corner is not an endpoint of the side")

    def to_json(self):
        return {
            "schema": SURFACE_SCHEMA,
            "genus": self.genus,
            "boundary_count": self.boundary_count,
            "triangles": [[[e, s] for e, s in w] for w in self.words],
            "corner_labels": [list(r) for r in self.corner_label],
            "euler_characteristic": self.euler_characteristic,
        }

    @classmethod
    def from_json(cls, data):
        if data.get("schema") != SURFACE_SCHEMA:
            raise SurfaceError(f"unsupported surface schema {data.get('schema')!r}")
        words = tuple(tuple((int(e), int(s)) for e, s in w) for w in data["triangles"])
        surf = cls(int(data["genus"]), int(data["boundary_count"]), words)
        _validate(surf)
        return surf

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _validate(surf):
    seen = {}
    for w in surf.words:
        if len(w) != 3:
            raise SurfaceError("triangles must have three sides")
        for e, s in w:
            if s not in (1, -1):
                raise SurfaceError("edge signs must be +1 or -1")
            if (e, s) in seen:
                raise SurfaceError(f"edge {e} used twice with sign {s}")
            seen[(e, s)] = True
    for e in range(surf.n_edges):
        if (e, 1) not in seen or (e, -1) not in seen:
            raise SurfaceError(f"edge {e} does not bound exactly two triangle sides")
    # connectivity of the dual graph
    reached, stack = {0}, [0]
    while stack:
        t = stack.pop()
        for t2, _ in surf.glue[t]:
            if t2 not in reached:
                reached.add(t2)
                stack.append(t2)
    if len(reached) != surf.n_triangles:
        raise SurfaceError("triangulation is not connected")
    n_vertices = len({v for row in surf.corner_label for v in row})
    if n_vertices != surf.boundary_count:
        raise SurfaceError("puncture count does not match boundary count")
    chi = n_vertices - surf.n_edges + surf.n_triangles - n_vertices
    if chi != surf.euler_characteristic:
        raise SurfaceError("Euler characteristic mismatch")


def _sphere_words(b):
    # two fan-triangulated b-gons glued along their boundary
    p = list(range(b))
    nxt = b
    up, low = {}, {}
    for k in range(2, b - 1):
        up[k], low[k] = nxt, nxt + 1
        nxt += 2

    def top_in(k):  # P0 -> Pk on the top face
        return (p[0], 1) if k == 1 else (up[k], 1)

    def top_out(k):  # Pk -> P0 on the top face
        return (p[b - 1], 1) if k == b - 1 else (up[k], -1)

    def bot_in(k):  # P0 -> Pk on the bottom face
        return (p[b - 1], -1) if k == b - 1 else (low[k], 1)

    def bot_out(k):  # Pk -> P0 on the bottom face
        return (p[0], -1) if k == 1 else (low[k], -1)

    words = []
    for k in range(1, b - 1):
        words.append((top_in(k), (p[k], 1), top_out(k + 1)))
    for k in range(1, b - 1):
        words.append((bot_in(k + 1), (p[k], -1), bot_out(k)))
    return words


def _polygon_words(g):
    # fan triangulation of the 4g-gon a1 b1 a1^-1 b1^-1 ...
    sides = []
    for i in range(g):
        a, b = 2 * i, 2 * i + 1
        sides += [(a, 1), (b, 1), (a, -1), (b, -1)]
    n = 4 * g
    nxt = 2 * g
    diag = {}
    for k in range(2, n - 1):
        diag[k] = nxt
        nxt += 1
    words = []
    for k in range(1, n - 1):
        first = sides[0] if k == 1 else (diag[k], 1)
        last = sides[n - 1] if k + 1 == n - 1 else (diag[k + 1], -1)
        words.append((first, sides[k], last))
    return words


def _stellar(words, t):
    (w0, w1, w2) = words[t]
    base = 1 + max(e for w in words for e, _ in w)
    n0, n1, n2 = base, base + 1, base + 2
    new = [
        (w0, (n1, 1), (n0, -1)),
        (w1, (n2, 1), (n1, -1)),
        (w2, (n0, 1), (n2, -1)),
    ]
    return words[:t] + new + words[t + 1:]


def _corner_degrees(words):
    surf = Surface(0, 0, tuple(tuple(w) for w in words))
    deg = {}
    for row in surf.corner_label:
        for v in row:
            deg[v] = deg.get(v, 0) + 1
    return surf.corner_label, deg


@lru_cache(maxsize=None)
def build_surface(g, b):
    """Deterministic ideal triangulation of S_{g,b} with boundary as punctures.

    Genus 0 uses two fan-triangulated b-gons glued along their rims. Positive
    genus starts from the one-vertex fan triangulation of the 4g-gon and adds
    the remaining punctures by stellar subdivision of the triangle with the
    smallest total corner degree.
    """
    if g < 0 or b < 0:
        raise SurfaceError("genus and boundary count must be non-negative")
    if 2 - 2 * g - b >= 0:
        raise SurfaceError(f"S_{{{g},{b}}} has non-negative Euler characteristic")
    if b == 0:
        raise SurfaceError("closed surfaces admit no ideal triangulation with boundary punctures")
    if g == 0:
        words = _sphere_words(b)
    else:
        words = _polygon_words(g)
        for _ in range(b - 1):
            labels, deg = _corner_degrees(words)
            score = [sum(deg[v] for v in labels[t]) for t in range(len(words))]
            t = min(range(len(words)), key=lambda i: (score[i], i))
            words = _stellar(words, t)
    surf = Surface(g, b, tuple(tuple(w) for w in words))
    _validate(surf)
    return surf


def complexity(s):
    return 3 * s.genus + s.boundary_count - 4


def admissible_for_arcs(s):
    return s.boundary_count >= 3 and (s.genus, s.boundary_count) != (0, 4) and complexity(s) > 0


@dataclass(frozen=True)
class Piece:
    """A complementary component of a cut, classified up to homeomorphism."""

    genus: int
    boundary_circles: int
    original_boundaries: frozenset
    cut_circles: tuple  # coordinate vectors of the cut curves on its boundary, sorted

    @property
    def euler_characteristic(self):
        return 2 - 2 * self.genus - self.boundary_circles

    @property
    def topo_type(self):
        return (self.genus, self.boundary_circles)


def cut_along(s, system):
    """Cut ``s`` along a realized system of pairwise disjoint curves.

    ``system`` is a sequence of curve classes (anything with ``coords``) or raw
    coordinate tuples; repeats are parallel copies. Returns the pieces sorted
    by (labels, genus, circles).
    """
    from .normal import cut_multicurve

    coords = [tuple(getattr(c, "coords", c)) for c in system]
    return cut_multicurve(s, coords).pieces
