# Curves and arcs on a five-holed sphere, by normal coordinates.
import random

from domcx import (build_surface, enumerate_classes, intersection_number, are_disjoint,
                   boundary_graph, boundary_graphs_disjoint)
from domcx.realized import oracle_intersection

s = build_surface(0, 5)
print(s.name, "chi =", s.euler_characteristic, "| triangles:", s.n_triangles, "edges:", s.n_edges)

# every essential curve up to norm 10, smallest first
curves = enumerate_classes("curve", s, 10)
print(len(curves), "curves with norm <= 10")
for c in curves[:5]:
    print("  ", c.coords, "norm", c.norm)

# arcs run between boundary labels; edge arcs have coordinate -1 on their edge
arcs = enumerate_classes("arc", s, 6)
print(len(arcs), "arcs with norm <= 6; first few endpoints:",
      [a.endpoints for a in arcs[:6]])

# intersection numbers from coordinates, checked against bigon removal
rng = random.Random(1)
for _ in range(5):
    x, y = rng.sample(curves + arcs, 2)
    print(f"  i({x.coords}, {y.coords}) = {intersection_number(x, y)}"
          f"  (bigon removal: {oracle_intersection(s, x, y)})")

# two disjoint arcs need not have disjoint boundary graphs
a = arcs[0]
pals = [b for b in arcs if b != a and are_disjoint(a, b)]
apart = [b for b in pals if boundary_graphs_disjoint(boundary_graph(a), boundary_graph(b))]
print(f"arc {a.coords}: {len(pals)} disjoint arcs, {len(apart)} with disjoint boundary graphs")
