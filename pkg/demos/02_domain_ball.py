# A truncated ball of the domain complex, and the curve complex sitting inside it.
from collections import Counter

from domcx import (build_surface, build_ball, distance_upper, include_curve_as_annulus,
                   project_path_to_curves)

s = build_surface(0, 5)
D = build_ball("D", s, norm=12)
C = build_ball("C", s, norm=12)
print(f"D-ball: {len(D)} domains, {D.n_edges} edges;  C-ball: {len(C)} curves, {C.n_edges} edges")

kinds = Counter("annulus" if X.annulus else f"{X.topo_type} {X.peripherality or ''}".strip()
                for X in D.vertices)
for k, n in sorted(kinds.items()):
    print(f"  {n:4d}  {k}")

# the curve complex distance between two annuli, through domains
u, v = C.vertices[0], C.vertices[-1]
d_c, wc = distance_upper(C, u, v)
d_d, wd = distance_upper(D, include_curve_as_annulus(u), include_curve_as_annulus(v))
print("d_C =", d_c, " d_D =", d_d)
for X in wd.vertices:
    print("   ", X)

# pushing the domain path down to curves never makes it longer
print("projected:", [c.coords for c in project_path_to_curves(wd).vertices])

with open("d_ball.dot", "w") as fh:
    fh.write(D.to_dot())
print("wrote d_ball.dot")
