"""Verification suite: one check per claim, each with its own report.

Every check builds its own balls and samples from an explicit seed, so a
report is a deterministic function of the surface and the parameters.
Failing assertions keep the first counterexample in replayable JSON form.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from .classes import (
    are_disjoint,
    boundary_graph,
    boundary_graphs_disjoint,
    enumerate_classes,
    intersection_number,
)
from .complexes import (
    PathWitness,
    Unreachable,
    annulus_neighbor_path,
    bidirectional_distance,
    build_ball,
    certified_lower_bound,
    density_radius,
    distance_upper,
    is_edge,
    is_vertex,
)
from .domains import (
    annulus_domain,
    cut_for,
    domains_disjoint,
    enumerate_domains,
    essential_boundary,
    pants_defining_arcs,
    pants_from_arc,
    peripheral_pants_in_piece,
)
from .maps import (
    PRESETS,
    ConnectorSearch,
    MapError,
    _drop_loops,
    arc_from_pants,
    arc_path_to_bgraph_path,
    coarse_project,
    connector_bound,
    in_domain,
    include_curve_as_annulus,
    project_pants_into_B,
    project_path_to_curves,
    rectify_genus0_path,
    wrap_construction,
)
from .oracles import class_count_agreement, piece_union_domains
from .realized import oracle_intersection
from .surface import admissible_for_arcs, build_surface, complexity

REPORT_SCHEMA = "domcx.report/1"
CHECK_IDS = ("T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "ORACLE")
DEFAULT_SURFACES = ((0, 5), (0, 6), (1, 3))

# curve norm bounds per surface; arcs use a smaller bound
DEFAULT_NORM = {(0, 5): 12, (0, 6): 10, (1, 3): 10}
DEFAULT_ARC_NORM = {(0, 5): 8, (0, 6): 6, (1, 3): 8}
POOL_NORM = {(0, 5): 8, (0, 6): 6, (1, 3): 10}


class ConfigError(ValueError):
    pass


# ------------------------------------------------------------------ reporting


def _payload(x):
    if isinstance(x, (list, tuple)):
        return [_payload(v) for v in x]
    if isinstance(x, dict):
        return {k: _payload(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


class Tally:
    """Counts one assertion over many cases and keeps the first failure."""

    def __init__(self, name):
        self.name = name
        self.count = 0
        self.failed = 0
        self.example = None

    def record(self, ok, **payload):
        self.count += 1
        if not ok:
            self.failed += 1
            if self.example is None:
                self.example = _payload(payload)
        return ok

    @property
    def passed(self):
        return self.failed == 0

    def to_json(self):
        return {"name": self.name, "cases": self.count, "failed": self.failed,
                "counterexample": self.example}


@dataclass
class CheckReport:
    check: str
    surface: tuple
    params: dict
    verdict: str = "pass"
    assertions: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)
    runtime: float = 0.0

    def tally(self, name):
        t = Tally(name)
        self.assertions.append(t)
        return t

    def finish(self, started):
        self.runtime = round(time.time() - started, 3)
        if any(not t.passed for t in self.assertions):
            self.verdict = "fail"
        elif not self.assertions:
            self.verdict = "evidence-only"
        return self

    @property
    def counterexample(self):
        for t in self.assertions:
            if not t.passed:
                return {"assertion": t.name, "surface": list(self.surface),
                        "params": self.params, "payload": t.example}
        return None

    def to_json(self):
        return {
            "check": self.check,
            "surface": list(self.surface),
            "params": self.params,
            "verdict": self.verdict,
            "assertions": [t.to_json() for t in self.assertions],
            "stats": self.stats,
            "evidence": self.evidence,
            "counterexample": self.counterexample,
            "runtime": self.runtime,
        }

    def summary(self):
        g, b = self.surface
        bad = [t.name for t in self.assertions if not t.passed]
        tail = f"  failing: {', '.join(bad)}" if bad else ""
        return f"{self.check:<7} S_{{{g},{b}}}  {self.verdict:<13} {self.runtime:7.1f}s{tail}"


# ------------------------------------------------------------------ sampling


def sample_paths(ball, rng, count, endpoint, max_walk=6, attempts=None):
    """Distinct ball paths between vertices satisfying ``endpoint``.

    Alternates geodesics between random endpoint pairs with random walks
    that stop at the first endpoint vertex after a random number of steps.
    """
    ends = [v for v in ball.vertices if endpoint(v)]
    if len(ends) < 2:
        return []
    seen, out = set(), []
    attempts = attempts or 20 * count
    for k in range(attempts):
        if len(out) >= count:
            break
        if k % 2 == 0:
            u, v = rng.sample(ends, 2)
            try:
                _, w = distance_upper(ball, u, v)
            except Unreachable:
                continue
            vs = w.vertices
        else:
            walk = [rng.choice(ends)]
            steps = rng.randint(1, max_walk)
            for m in range(4 * max_walk):
                nb = ball.neighbors(walk[-1])
                if not nb:
                    break
                walk.append(rng.choice(nb))
                if m + 1 >= steps and endpoint(walk[-1]):
                    break
            vs = tuple(_drop_loops(walk))
            if not endpoint(vs[-1]) or len(vs) < 2:
                continue
        if vs not in seen:
            seen.add(vs)
            out.append(PathWitness(ball.kind, tuple(vs)))
    return out


def _rng(seed, check, surface):
    return random.Random(f"{seed}:{check}:{surface[0]},{surface[1]}")


# ------------------------------------------------------------------ T1


def check_T1_isometric_inclusion(s, params):
    started = time.time()
    norm, seed = params["norm"], params["seed"]
    rep = CheckReport("T1", (s.genus, s.boundary_count), dict(params))
    if complexity(s) <= 0:
        raise ConfigError("T1 needs positive complexity")
    C = build_ball("C", s, norm=norm)
    D = build_ball("D", s, norm=norm)
    ann = {c: include_curve_as_annulus(c) for c in C.vertices}
    rep.stats.update(curves=len(C), domains=len(D), c_edges=C.n_edges, d_edges=D.n_edges)

    t_vert = rep.tally("C-ball vertices equal annulus vertices of the D-ball")
    t_vert.record(set(ann.values()) == {X for X in D.vertices if X.annulus})
    t_edge = rep.tally("i preserves and reflects edges")
    for c1, c2 in combinations(C.vertices, 2):
        e_c = is_edge("C", c1, c2)
        t_edge.record(e_c == is_edge("D", ann[c1], ann[c2]), u=c1, v=c2)
    rep.stats["c_ball_connected"] = C.is_connected()

    t_proj = rep.tally("path projection is a C-path with the same ends and no longer")
    rng = _rng(seed, "T1", rep.surface)
    paths = sample_paths(D, rng, params["paths"], lambda X: X.annulus)
    rep.stats["sampled_paths"] = len(paths)
    t_count = rep.tally("enough sampled paths")
    t_count.record(len(paths) >= params["paths"], found=len(paths))
    for rule in PRESETS:
        for p in paths:
            q = project_path_to_curves(p, rule)
            ok = (q.is_valid() and q.length <= p.length
                  and q.start == p.start.boundary[0] and q.end == p.end.boundary[0])
            t_proj.record(ok, path=p, rule=rule.name)

    t_cert = rep.tally("certified curve distances <= 2 equal annulus distances in D")
    exact = 0
    for c1, c2 in combinations(C.vertices, 2):
        lb = certified_lower_bound("C", c1, c2)
        try:
            d_c, _ = distance_upper(C, c1, c2)
        except Unreachable:
            continue
        if d_c != lb:
            continue
        exact += 1
        d_d, w = distance_upper(D, ann[c1], ann[c2])
        t_cert.record(d_d == d_c and w.is_valid(), u=c1, v=c2, d_c=d_c, d_d=d_d)
    rep.stats["certified_pairs"] = exact

    t_den = rep.tally("image of i is exactly 1-dense by boundary-annulus construction")
    r, worst = density_radius(D, lambda X: X.annulus, annulus_neighbor_path)
    t_den.record(r == 1, radius=r, worst=worst)
    rep.stats["density_radius"] = r
    return rep.finish(started)


# ------------------------------------------------------------------ T2


def check_T2_coarse_projection(s, params):
    started = time.time()
    rep = CheckReport("T2", (s.genus, s.boundary_count), dict(params))
    rules = [r for r in PRESETS if r.name in params["rules"]]
    D = build_ball("D", s, norm=params["norm"])
    curves = enumerate_classes("curve", s, params["norm"])
    rep.stats.update(curves=len(curves), domains=len(D))

    t_id = rep.tally("pi after i is the identity on curves")
    for c in curves:
        for r in rules:
            t_id.record(coarse_project(include_curve_as_annulus(c), r) == c, curve=c, rule=r.name)
    t_back = rep.tally("i(pi(X)) is X or adjacent to X")
    t_rules = rep.tally("projections under two rules are equal or adjacent")
    for X in D.vertices:
        proj = [coarse_project(X, r) for r in rules]
        for r, c in zip(rules, proj):
            A = include_curve_as_annulus(c)
            t_back.record(A == X or is_edge("D", X, A), domain=X, rule=r.name)
        for (r1, c1), (r2, c2) in combinations(zip(rules, proj), 2):
            t_rules.record(c1 == c2 or is_edge("C", c1, c2), domain=X, rules=[r1.name, r2.name])
    t_adj = rep.tally("adjacent domains project to equal or adjacent curves")
    for i, j in D.edges():
        X, Y = D.vertices[i], D.vertices[j]
        for r in rules:
            a, b = coarse_project(X, r), coarse_project(Y, r)
            t_adj.record(a == b or is_edge("C", a, b), u=X, v=Y, rule=r.name)
    return rep.finish(started)


# ------------------------------------------------------------------ T3 / T4


def _disjoint_arc_pairs(s, arc_norm, count, rng):
    arcs = enumerate_classes("arc", s, arc_norm)
    pairs = [(a, b) for a, b in combinations(arcs, 2) if are_disjoint(a, b)]
    rng.shuffle(pairs)
    return pairs[:count], len(pairs)


def check_T3_boundary_graph_lemma(s, params):
    started = time.time()
    rep = CheckReport("T3", (s.genus, s.boundary_count), dict(params))
    if not admissible_for_arcs(s):
        raise ConfigError("T3 needs a surface admissible for arcs")
    rng = _rng(params["seed"], "T3", rep.surface)
    pairs, total = _disjoint_arc_pairs(s, params["arc_norm"], params["pairs"], rng)
    search = ConnectorSearch(s, params["pool_norm"])
    bound = connector_bound(s)
    rep.stats.update(disjoint_pairs=total, sampled=len(pairs), bound=bound)
    t_n = rep.tally("enough sampled pairs")
    t_n.record(len(pairs) >= min(params["pairs"], total), sampled=len(pairs))
    t_w = rep.tally(f"every disjoint pair has an A_B witness of length <= {bound}")
    lengths = {}
    for a, b in pairs:
        seg = search.path(a, b, bound)
        if seg is None:
            t_w.record(False, u=a, v=b)
            continue
        w = PathWitness("A_B", tuple(seg))
        t_w.record(w.is_valid() and w.start.arc == a and w.end.arc == b, u=a, v=b, witness=w)
        lengths[w.length] = lengths.get(w.length, 0) + 1
    rep.stats["witness_lengths"] = {str(k): v for k, v in sorted(lengths.items())}
    t_adj = rep.tally("A_B-adjacent pairs get length 1")
    for a, b in pairs:
        if boundary_graphs_disjoint(boundary_graph(a), boundary_graph(b)):
            t_adj.record(len(search.path(a, b, bound)) == 2, u=a, v=b)
    return rep.finish(started)


def check_T4_bilipschitz(s, params):
    started = time.time()
    rep = CheckReport("T4", (s.genus, s.boundary_count), dict(params))
    if not admissible_for_arcs(s):
        raise ConfigError("T4 needs a surface admissible for arcs")
    rng = _rng(params["seed"], "T4", rep.surface)
    A = build_ball("A", s, arc_norm=params["path_arc_norm"], norm=params["path_arc_norm"])
    search = ConnectorSearch(s, params["pool_norm"])
    paths = sample_paths(A, rng, params["paths"], lambda a: True, max_walk=5)
    rep.stats.update(arcs=len(A), a_edges=A.n_edges, sampled_paths=len(paths))
    t_len = rep.tally("transported path is a valid A_B path with L <= 4 L")
    worst = 0.0
    for p in paths:
        try:
            q, _ = arc_path_to_bgraph_path(p, search)
        except MapError:
            t_len.record(False, path=p)
            continue
        ok = q.is_valid() and q.length <= 4 * p.length and q.start.arc == p.start and q.end.arc == p.end
        t_len.record(ok, path=p, transported=q)
        worst = max(worst, q.length / p.length)
    rep.stats["max_ratio"] = worst

    t_cert = rep.tally("certified d_A <= lower bound for d_A_B")
    certified = 0
    for _ in range(params["pairs"]):
        a, b = rng.sample(A.vertices, 2)
        d_a = certified_lower_bound("A", a, b)
        if d_a == 2 and distance_upper(A, a, b)[0] != 2:
            continue
        certified += 1
        lb_b = certified_lower_bound("A_B", boundary_graph(a), boundary_graph(b))
        t_cert.record(d_a <= lb_b, u=a, v=b, d_a=d_a, lb_ab=lb_b)
    rep.stats["certified_pairs"] = certified
    return rep.finish(started)


# ------------------------------------------------------------------ T5


def _fiber_witness(x, y, search, fiber):
    """A_B witness between two arcs of one fiber, through an A-path of length <= 2."""
    if x == y:
        return PathWitness("A_B", (boundary_graph(x),))
    if are_disjoint(x, y):
        ap = (x, y)
    else:
        mid = next((z for z in fiber if z not in (x, y) and are_disjoint(z, x)
                    and are_disjoint(z, y)), None)
        if mid is None:
            return None
        ap = (x, mid, y)
    w, _ = arc_path_to_bgraph_path(PathWitness("A", ap), search)
    return w


def check_T5_pants_duality(s, params):
    started = time.time()
    rep = CheckReport("T5", (s.genus, s.boundary_count), dict(params))
    if not admissible_for_arcs(s):
        raise ConfigError("T5 needs a surface admissible for arcs")
    rules = [r for r in PRESETS if r.name in params["rules"]]
    search = ConnectorSearch(s, params["pool_norm"])
    arcs = enumerate_classes("arc", s, params["arc_norm"])
    pants = {X for X in enumerate_domains(s, params["norm"]) if X.is_peripheral_pants}
    arc_pants = {a: pants_from_arc(a) for a in arcs}
    pants |= set(arc_pants.values())
    pants = sorted(pants)
    rep.stats.update(arcs=len(arcs), peripheral_pants=len(pants),
                     bi=sum(P.peripherality == "bi" for P in pants))

    t_round = rep.tally("pants_from_arc after arc_from_pants is the identity")
    t_fib = rep.tally("fiber arcs are pairwise within A_B distance 8")
    t_size = rep.tally("fiber has 1 arc (mono) or 3 arcs (bi)")
    fibers = {}
    for P in pants:
        fib = pants_defining_arcs(P)
        fibers[P] = fib
        t_size.record(len(fib) == (3 if P.peripherality == "bi" else 1), pants=P, size=len(fib))
        for r in rules:
            t_round.record(pants_from_arc(arc_from_pants(P, r)) == P, pants=P, rule=r.name)
        for x, y in combinations(fib, 2):
            w = _fiber_witness(x, y, search, fib)
            t_fib.record(w is not None and w.is_valid() and w.length <= 8, u=x, v=y)

    t_back = rep.tally("i(pi(x)) within A_B distance 8 of x")
    for a in arcs:
        P = arc_pants[a]
        fib = fibers.get(P) or pants_defining_arcs(P)
        t_back.record(a in fib, arc=a)
        for r in rules:
            y = arc_from_pants(P, r)
            w = _fiber_witness(a, y, search, fib)
            t_back.record(w is not None and w.is_valid() and w.length <= 8, arc=a, rule=r.name)

    t_fwd = rep.tally("disjoint boundary graphs give disjoint pants")
    for a, b in combinations(arcs[: params["edge_arcs"]], 2):
        if boundary_graphs_disjoint(boundary_graph(a), boundary_graph(b)):
            Pa, Pb = arc_pants[a], arc_pants[b]
            t_fwd.record(Pa != Pb and is_edge("P_d", Pa, Pb), u=a, v=b)

    # disjoint pants: canonical defining arcs should have disjoint boundary graphs;
    # counterexamples are reported, not asserted
    tried = bad = 0
    example = None
    for P, Q in combinations(pants[: params["edge_pants"]], 2):
        if domains_disjoint(P, Q):
            tried += 1
            x, y = arc_from_pants(P), arc_from_pants(Q)
            if not boundary_graphs_disjoint(boundary_graph(x), boundary_graph(y)):
                bad += 1
                example = example or _payload({"u": P, "v": Q})
    rep.evidence["disjoint_pants_pairs"] = tried
    rep.evidence["canonical_arcs_not_disjoint"] = bad
    if example:
        rep.evidence["example"] = example

    t_quad = rep.tally("changing the inclusion rule moves transported witnesses by <= 16")
    rng = _rng(params["seed"], "T5", rep.surface)
    Pd = build_ball("P_d", s, norm=params["norm"])
    if len(rules) >= 2:
        r1, r2 = rules[0], rules[1]
        for p in sample_paths(Pd, rng, params["paths"], lambda X: True, max_walk=4):
            ap = [arc_from_pants(X, r1) for X in p.vertices]
            try:
                w1, _ = arc_path_to_bgraph_path(PathWitness("A", tuple(ap)), search)
            except MapError:
                t_quad.record(False, path=p)
                continue
            a0, b0 = p.start, p.end
            head = _fiber_witness(arc_from_pants(a0, r2), ap[0], search, fibers.get(a0, []))
            tail = _fiber_witness(ap[-1], arc_from_pants(b0, r2), search, fibers.get(b0, []))
            if head is None or tail is None:
                t_quad.record(False, path=p)
                continue
            joined = _drop_loops(list(head.vertices) + list(w1.vertices[1:]) + list(tail.vertices[1:]))
            w2 = PathWitness("A_B", tuple(joined))
            t_quad.record(w2.is_valid() and w2.length <= w1.length + 16, path=p)
    return rep.finish(started)


# ------------------------------------------------------------------ T6


def _pants_near(X):
    """Explicit path from a domain to a peripheral pair of pants (length <= 2)."""
    if X.is_peripheral_pants:
        return [X]
    s = X.surface
    c = essential_boundary(X)[0]
    A = annulus_domain(c)
    cut, _ = cut_for(s, [c])
    cands = [peripheral_pants_in_piece(s, cut, i) for i in range(len(cut.pieces))]
    cands = [Q for Q in cands if Q is not None]
    for Q in cands:
        if Q != X and domains_disjoint(X, Q):
            return [X, Q]
    if X.annulus:
        return [X, cands[0]] if cands else None
    for Q in cands:
        if domains_disjoint(A, Q):
            return [X, A, Q]
    return None


def check_T6_genus0(s, params):
    started = time.time()
    rep = CheckReport("T6", (s.genus, s.boundary_count), dict(params))
    if s.genus != 0 or s.boundary_count < 5:
        raise ConfigError("T6 needs genus 0 and at least 5 boundary components")
    rng = _rng(params["seed"], "T6", rep.surface)
    D = build_ball("D", s, norm=params["norm"])
    paths = sample_paths(D, rng, params["paths"], lambda X: X.is_peripheral_pants)
    rep.stats.update(domains=len(D), sampled_paths=len(paths))
    t_n = rep.tally("enough sampled paths")
    t_n.record(len(paths) >= params["paths"], found=len(paths))
    t_r = rep.tally("rectified path is a P_d path with the same ends and no longer")
    t_id = rep.tally("paths already in P_d are unchanged")
    t_two = rep.tally("length-2 paths through a curve stay length 2")
    for p in paths:
        try:
            q = rectify_genus0_path(p)
        except MapError:
            t_r.record(False, path=p)
            continue
        ok = q.is_valid() and q.start == p.start and q.end == p.end and q.length <= p.length
        t_r.record(ok, path=p, rectified=q)
        if all(X.is_peripheral_pants for X in p.vertices):
            t_id.record(q.vertices == p.vertices, path=p)
        if p.length == 2 and p.vertices[1].annulus and not is_edge("D", p.start, p.end):
            t_two.record(q.length == 2, path=p)
    t_den = rep.tally("P_d is 2-dense in the D-ball by explicit construction")
    try:
        r, worst = density_radius(D, lambda X: X.is_peripheral_pants, _pants_near)
        t_den.record(r <= 2, radius=r, worst=worst)
        rep.stats["density_radius"] = r
    except Exception as exc:  # construction failure names the vertex
        t_den.record(False, error=str(exc))
    return rep.finish(started)


# ------------------------------------------------------------------ T7


def check_T7_genus_positive(s, params):
    started = time.time()
    rep = CheckReport("T7", (s.genus, s.boundary_count), dict(params))
    if s.genus < 1 or s.boundary_count < 3:
        raise ConfigError("T7 needs genus >= 1 and at least 3 boundary components")
    c, B, C = wrap_construction(s)
    t_w = rep.tally("wrap curve splits S into B=(0,b+1) with all labels and C=(g,1)")
    t_w.record(B.topo_type == (0, s.boundary_count + 1) and B.labels == frozenset(s.labels)
               and C.topo_type == (s.genus, 1) and not C.labels
               and essential_boundary(C) == (c,) and essential_boundary(B) == (c,)
               and B.euler_characteristic + C.euler_characteristic == s.euler_characteristic,
               curve=c, B=B, C=C)
    t_ann = rep.tally("B and C are both adjacent to the annulus of c")
    A = annulus_domain(c)
    t_ann.record(domains_disjoint(B, A) and domains_disjoint(C, A) and domains_disjoint(B, C))

    Pd = build_ball("P_d", s, norm=params["norm"])
    in_b = [P for P in Pd.vertices if in_domain(P, B) and c not in P.boundary]
    rep.stats.update(peripheral_pants=len(Pd), pants_in_B=len(in_b))
    t_pair = rep.tally("d_D(P0, Pn) = 2 certified for crossing pants in B")
    pairs = [(P, Q) for P, Q in combinations(in_b, 2) if not is_edge("D", P, Q)]
    t_have = rep.tally("a crossing pair of pants in B exists in the ball")
    t_have.record(bool(pairs), pants=in_b)
    best = None
    for P, Q in pairs:
        lb = certified_lower_bound("D", P, Q)
        w = PathWitness("D", (P, C, Q))
        t_pair.record(lb == 2 and w.is_valid(), u=P, v=Q)
        try:
            d = distance_upper(Pd, P, Q)[0]
        except Unreachable:
            d = None
        if best is None or (d or 10**9) > (best[2] or 10**9):
            best = (P, Q, d)

    t_strip = rep.tally("strip projection lands on peripheral pants inside B")
    crossing = [P for P in Pd.vertices if not in_domain(P, B)]
    proj = {}
    for P in crossing:
        try:
            Q = project_pants_into_B(P, c, B)
        except MapError:
            t_strip.record(False, pants=P)
            continue
        proj[P] = Q
        t_strip.record(Q.is_peripheral_pants and in_domain(Q, B), pants=P, image=Q)
    for P in Pd.vertices:
        proj.setdefault(P, P)
    rep.stats["crossing_pants"] = len(crossing)

    # path level: substitutions along P_d edges, recorded as evidence
    kept = total = 0
    for i, j in Pd.edges():
        X, Y = proj[Pd.vertices[i]], proj[Pd.vertices[j]]
        total += 1
        kept += X == Y or domains_disjoint(X, Y)
    rep.evidence["edges_kept_by_strip_projection"] = [kept, total]

    growth = []
    for n in params["growth_norms"]:
        ball = Pd if n == params["norm"] else build_ball("P_d", s, norm=n)
        cands = [P for P in ball.vertices if in_domain(P, B) and c not in P.boundary]
        worst, cut_off = None, False
        for P, Q in combinations(cands, 2):
            if is_edge("D", P, Q):
                continue
            try:
                worst = max(worst or 0, distance_upper(ball, P, Q)[0])
            except Unreachable:
                cut_off = True
        growth.append({"norm": n, "pants_in_B": len(cands), "max_witness": worst,
                       "disconnected_pairs": cut_off})
    rep.evidence["pd_witness_growth"] = growth
    if best is not None:
        rep.evidence["P0"], rep.evidence["Pn"] = best[0].to_json(), best[1].to_json()
        rep.evidence["d_Pd_ball"] = best[2]
    return rep.finish(started)


# ------------------------------------------------------------------ T8


def check_T8_AC_diagram(s, params):
    started = time.time()
    rep = CheckReport("T8", (s.genus, s.boundary_count), dict(params))
    if not admissible_for_arcs(s):
        raise ConfigError("T8 needs a surface admissible for arcs")
    rules = [r for r in PRESETS if r.name in params["rules"]]
    curves = enumerate_classes("curve", s, params["norm"])
    arcs = enumerate_classes("arc", s, params["arc_norm"])
    AC = build_ball("AC", s, norm=params["norm"], arc_norm=params["arc_norm"])
    rep.stats.update(curves=len(curves), arcs=len(arcs), ac_edges=AC.n_edges)

    t_curve = rep.tally("curves map identically along both routes")
    for c in curves:
        X = include_curve_as_annulus(c)
        ok = is_vertex("A_BC", c) and is_vertex("P_dC", X)
        ok = ok and all(coarse_project(X, r) == c for r in rules)
        t_curve.record(ok, curve=c)

    t_arc = rep.tally("arc routes agree: pants is a P_dC vertex and pi(i(P)) = P")
    t_near = rep.tally("each arc is disjoint from the projected curve of its pants")
    pants = {}
    for a in arcs:
        P = pants_from_arc(a)
        pants[a] = P
        ok = is_vertex("P_dC", P) and P == pants_from_arc(boundary_graph(a).arc)
        ok = ok and all(pants_from_arc(arc_from_pants(P, r)) == P for r in rules)
        t_arc.record(ok, arc=a)
        for r in rules:
            c = coarse_project(P, r)
            t_near.record(is_edge("AC", a, c), arc=a, curve=c, rule=r.name)

    t_edges = rep.tally("AC edges map to P_dC edges or collapse")
    t_sub = rep.tally("A_BC edges are AC edges")
    for i, j in AC.edges():
        u, v = AC.vertices[i], AC.vertices[j]
        X = pants[u] if u.kind == "arc" else include_curve_as_annulus(u)
        Y = pants[v] if v.kind == "arc" else include_curve_as_annulus(v)
        if u.kind == "arc" and v.kind == "arc":
            gu, gv = boundary_graph(u), boundary_graph(v)
            if is_edge("A_BC", gu, gv):
                t_edges.record(X != Y and is_edge("P_dC", X, Y), u=u, v=v)
            continue
        t_edges.record(X == Y or is_edge("P_dC", X, Y), u=u, v=v)
    for u, v in combinations(AC.vertices, 2):
        gu = boundary_graph(u) if u.kind == "arc" else u
        gv = boundary_graph(v) if v.kind == "arc" else v
        if is_edge("A_BC", gu, gv):
            t_sub.record(AC.index[v] in AC.adj[AC.index[u]], u=u, v=v)

    t_den = rep.tally("curves are 1-dense in the AC-ball")

    def near(a):
        return [a, coarse_project(pants[a])]

    r, worst = density_radius(AC, lambda x: x.kind == "curve", near)
    t_den.record(r == 1, radius=r, worst=worst)
    rep.stats["density_radius"] = r
    return rep.finish(started)


# ------------------------------------------------------------------ oracles


def check_oracle_equivalence(s, params):
    started = time.time()
    rep = CheckReport("ORACLE", (s.genus, s.boundary_count), dict(params))
    n = params["oracle_norm"]
    xs = enumerate_classes("curve", s, n) + enumerate_classes("arc", s, n)
    t_i = rep.tally(f"intersection numbers agree with bigon removal at norm <= {n}")
    for x, y in combinations(xs, 2):
        a, b = intersection_number(x, y), oracle_intersection(s, x, y, seed=params["seed"])
        t_i.record(a == b, u=x, v=y, coords=a, oracle=b)
    t_sym = rep.tally("intersection number is symmetric")
    rng = _rng(params["seed"], "ORACLE", rep.surface)
    for _ in range(params["pairs"]):
        x, y = rng.sample(xs, 2)
        t_sym.record(intersection_number(x, y) == intersection_number(y, x), u=x, v=y)
    t_c = rep.tally(f"class counts agree with walk enumeration at norm <= {params['count_norm']}")
    for kind in ("curve", "arc"):
        for m in range(1, params["count_norm"] + 1):
            a, b, same = class_count_agreement(kind, s, m)
            t_c.record(same, kind=kind, norm=m, oracle=a, enumerated=b)
            rep.stats[f"{kind}s_norm_{m}"] = b
    t_d = rep.tally("domain counts agree with piece gluing")
    a = piece_union_domains(s, params["domain_norm"], 3 * s.genus + s.boundary_count - 3)
    b = enumerate_domains(s, params["domain_norm"])
    t_d.record(a == b, oracle=len(a), enumerated=len(b))
    rep.stats["domains"] = len(b)
    t_bfs = rep.tally("ball BFS agrees with bidirectional search")
    ball = build_ball("D", s, norm=params["domain_norm"])
    for _ in range(params["pairs"]):
        u, v = rng.sample(ball.vertices, 2)
        try:
            d1 = distance_upper(ball, u, v)[0]
        except Unreachable:
            d1 = None
        try:
            d2 = bidirectional_distance(ball, u, v)
        except Unreachable:
            d2 = None
        t_bfs.record(d1 == d2, u=u, v=v)
    return rep.finish(started)


# ------------------------------------------------------------------ suite

CHECKS = {
    "T1": check_T1_isometric_inclusion,
    "T2": check_T2_coarse_projection,
    "T3": check_T3_boundary_graph_lemma,
    "T4": check_T4_bilipschitz,
    "T5": check_T5_pants_duality,
    "T6": check_T6_genus0,
    "T7": check_T7_genus_positive,
    "T8": check_T8_AC_diagram,
    "ORACLE": check_oracle_equivalence,
}


def applicable(check, g, b):
    s_c = 3 * g + b - 4
    arcs = b >= 3 and (g, b) != (0, 4) and s_c > 0
    return {
        "T1": s_c > 0, "T2": s_c > 0, "T3": arcs, "T4": arcs, "T5": arcs,
        "T6": g == 0 and b >= 5, "T7": g >= 1 and b >= 3, "T8": arcs, "ORACLE": s_c > 0,
    }[check]


def default_params(check, g, b, norm=None, seed=7):
    key = (g, b)
    curve_norm = norm if norm is not None else DEFAULT_NORM.get(key, 10)
    arc_norm = DEFAULT_ARC_NORM.get(key, 6)
    pool = POOL_NORM.get(key, 8)
    rules = [r.name for r in PRESETS]
    base = {"seed": seed, "norm": curve_norm}
    extra = {
        "T1": {"paths": 1000},
        "T2": {"rules": rules},
        "T3": {"arc_norm": arc_norm, "pairs": 600, "pool_norm": pool},
        "T4": {"path_arc_norm": 6, "paths": 300, "pairs": 600, "pool_norm": pool},
        "T5": {"arc_norm": 6, "rules": rules, "pool_norm": pool, "edge_arcs": 200,
               "edge_pants": 120, "paths": 100},
        "T6": {"paths": 300},
        "T7": {"growth_norms": [10, 12, 14]},
        "T8": {"arc_norm": 6, "rules": rules},
        "ORACLE": {"oracle_norm": 8, "count_norm": 6,
                   "domain_norm": 8, "pairs": 500},
    }[check]
    if check == "T7" and norm is None:
        base["norm"] = 12
    base.update(extra)
    return base


@dataclass
class SuiteConfig:
    surfaces: tuple = DEFAULT_SURFACES
    checks: tuple = CHECK_IDS
    norm: int | None = None
    seed: int = 7
    overrides: dict = field(default_factory=dict)

    def validate(self):
        for c in self.checks:
            if c not in CHECKS:
                raise ConfigError(f"unknown check {c!r}")
        for g, b in self.surfaces:
            if g < 0 or b < 1 or 2 - 2 * g - b >= 0:
                raise ConfigError(f"no model for S_{{{g},{b}}}")
        if self.norm is not None and self.norm < 1:
            raise ConfigError("norm must be positive")
        return self


def run_suite(config=None, progress=None):
    """Run the configured checks; returns the list of reports."""
    config = (config or SuiteConfig()).validate()
    reports = []
    for g, b in config.surfaces:
        s = build_surface(g, b)
        for cid in config.checks:
            if not applicable(cid, g, b):
                continue
            params = default_params(cid, g, b, config.norm, config.seed)
            params.update(config.overrides.get(cid, {}))
            rep = CHECKS[cid](s, params)
            reports.append(rep)
            if progress:
                progress(rep)
    return reports


def suite_json(reports):
    return {
        "schema": REPORT_SCHEMA,
        "reports": [r.to_json() for r in reports],
        "failed": sum(r.verdict == "fail" for r in reports),
    }


def dump_reports(reports, path):
    with open(path, "w") as fh:
        json.dump(suite_json(reports), fh, indent=1, sort_keys=True)


def exit_code(reports):
    return 1 if any(r.verdict == "fail" for r in reports) else 0
