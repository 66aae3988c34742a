"""Bottleneck assignment with perturbation-interval sensitivity analysis."""
from .assignment_sensitivity import (
    AssignmentSensitivityReport,
    assignment_sensitivity,
    bound_value,
    is_allowable,
    is_edge_allowable,
    sensitivity_radius,
)
from .core import INF, Assignment, Edge, WeightMatrix, validate_matrix
from .edge_sensitivity import (
    EdgeSensitivityReport,
    ExclusiveSet,
    build_edge_intervals,
    build_exclusive_set,
    edge_sensitivity,
)
from .errors import *  # noqa: F401,F403
from .intervals import IntervalArray, Ordering, contains, lex_compare, rho
from .lex_assignment import LexAssignment, lexicographic_assignment
from .solver import BapSolution, BottleneckSolver, solve_bap

__version__ = "0.1.0"
