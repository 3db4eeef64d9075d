# Genus one, three holes: the curve that wraps all the boundary.
from domcx import build_surface, build_ball, distance_upper, wrap_construction
from domcx.complexes import PathWitness, certified_lower_bound
from domcx.domains import domain_inside
from domcx.maps import project_pants_into_B

s = build_surface(1, 3)
c, B, C = wrap_construction(s)
print("wrap curve", c.coords)
print("B:", B.topo_type, "labels", sorted(B.labels), " C:", C.topo_type)
print("chi(B) + chi(C) =", B.euler_characteristic + C.euler_characteristic, "=", s.euler_characteristic)

Pd = build_ball("P_d", s, norm=12)
inside = [P for P in Pd.vertices if domain_inside(P, B) and c not in P.boundary]
print(len(Pd), "peripheral pants in the ball,", len(inside), "of them inside B away from c")

P0, Pn = inside[0], inside[-1]
w = PathWitness("D", (P0, C, Pn))
print("d_D lower bound", certified_lower_bound("D", P0, Pn), "| witness through C valid:", w.is_valid())
print("best P_d witness inside the ball:", distance_upper(Pd, P0, Pn)[0])

# pants that cross c get pushed into B along a strip around c
crossing = [P for P in Pd.vertices if not domain_inside(P, B)]
images = [project_pants_into_B(P, c, B) for P in crossing]
print(sum(domain_inside(Q, B) for Q in images), "/", len(images), "strip images land in B")
