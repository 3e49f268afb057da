"""Guarding sets of line segments: arrangements, exact/greedy/tree solvers,
and the vertex-cover reduction pipeline, all in exact rational arithmetic."""

from .arrangement import (
    Arrangement,
    ArrangementError,
    GssInstance,
    InstanceError,
    NotATreeError,
    build_arrangement,
    incident_edges,
    merge_collinear_chain,
    validate_instance,
    visible_edges,
)
from .geometry import CanonicalLine, Point, Segment, canonical_line, intersect, orientation, pt, seg
from .solver import (
    GuardSet,
    InfeasibleAtCap,
    appropriate_leaves,
    is_guard_set,
    solve_exact,
    solve_greedy,
    solve_tree,
    sufficiency_bound,
    to_set_cover,
)

__version__ = "0.1.0"
