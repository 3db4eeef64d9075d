"""Complexes of curves, arcs and domains on punctured surfaces, at desk scale."""
from .surface import Surface, build_surface, complexity, admissible_for_arcs
from .classes import (
    ArcClass,
    BoundaryGraphClass,
    CurveClass,
    are_disjoint,
    boundary_graph,
    boundary_graphs_disjoint,
    canonicalize,
    enumerate_classes,
    intersection_number,
    is_essential,
)
from .domains import (
    DomainClass,
    annulus_domain,
    domains_disjoint,
    enumerate_domains,
    essential_boundary,
    pants_defining_arcs,
    pants_from_arc,
)
from .complexes import (
    ComplexBall,
    PathWitness,
    build_ball,
    certified_lower_bound,
    density_radius,
    distance_upper,
    is_edge,
)
from .maps import (
    PRESETS,
    ProjectionRule,
    arc_from_pants,
    arc_path_to_bgraph_path,
    coarse_project,
    include_curve_as_annulus,
    project_pants_into_B,
    project_path_to_curves,
    rectify_genus0_path,
    wrap_construction,
)

__version__ = "0.1.0"

__all__ = [
    "Surface",
    "build_surface",
    "complexity",
    "admissible_for_arcs",
    "ArcClass",
    "BoundaryGraphClass",
    "CurveClass",
    "are_disjoint",
    "boundary_graph",
    "boundary_graphs_disjoint",
    "canonicalize",
    "enumerate_classes",
    "intersection_number",
    "is_essential",
    "DomainClass",
    "annulus_domain",
    "domains_disjoint",
    "enumerate_domains",
    "essential_boundary",
    "pants_defining_arcs",
    "pants_from_arc",
    "ComplexBall",
    "PathWitness",
    "build_ball",
    "certified_lower_bound",
    "density_radius",
    "distance_upper",
    "is_edge",
    "PRESETS",
    "ProjectionRule",
    "arc_from_pants",
    "arc_path_to_bgraph_path",
    "coarse_project",
    "include_curve_as_annulus",
    "project_pants_into_B",
    "project_path_to_curves",
    "rectify_genus0_path",
    "wrap_construction",
]
