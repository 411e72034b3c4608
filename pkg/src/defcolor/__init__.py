"""Defect-1 list colouring of graphs embedded on surfaces."""

from .colouring import DefectReport, ListAssignment, greedy_proper, is_independent, verify
from .discharging import (
    apply_rules,
    audit,
    heawood_bound,
    lower_bound_choice1,
    required_list_size,
)
from .embedding import (
    RotationSystem,
    cyclic_neighbours,
    delete_vertex_embedded,
    euler_genus,
    trace_faces,
    triangulate,
)
from .graph import Graph, delete_vertices, induced_subgraph
from .local_search import lovasz_colour
from .oracle import choosable, list_colourable
from .reducer import find_config, reduce_colour, solve

__all__ = [
    "DefectReport", "Graph", "ListAssignment", "RotationSystem",
    "apply_rules", "audit", "choosable", "cyclic_neighbours", "delete_vertex_embedded",
    "delete_vertices", "euler_genus", "find_config", "greedy_proper", "heawood_bound",
    "induced_subgraph", "is_independent", "list_colourable", "lovasz_colour",
    "lower_bound_choice1", "reduce_colour", "required_list_size", "solve",
    "trace_faces", "triangulate", "verify",
]
