"""Largest interval array that keeps a given edge a bottleneck edge."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import INF, Assignment, Edge
from .errors import (
    InternalInvariantViolation,
    NoFeasibleAssignment,
    NotABottleneckEdge,
    PreconditionViolation,
)
from .intervals import IntervalArray
from .lex_assignment import lexicographic_assignment
from .solver import BottleneckSolver, _as_array, solve_bap


@dataclass(frozen=True)
class ExclusiveSet:
    anchor: Edge
    members: tuple[Edge, ...]  # in removal order
    tie_free: bool


@dataclass(frozen=True)
class EdgeSensitivityReport:
    anchor: Edge
    intervals: IntervalArray
    exclusive_set: ExclusiveSet
    lex_assignment_used: Assignment
    lambda_up_star: float
    lambda_down_star: float
    certified: bool
    warnings: tuple[str, ...] = ()


def _check_anchor(w: np.ndarray, anchor: Edge):
    sol = solve_bap(w)
    if anchor not in sol.candidates:
        raise NotABottleneckEdge(
            f"edge {tuple(anchor)} (weight {w[anchor]}) is not a bottleneck edge; "
            f"bottleneck value is {sol.bottleneck_value}")
    return sol


def build_exclusive_set(W, anchor: Edge, warm: bool = True,
                        tie_breaks: Sequence[Edge] = ()) -> ExclusiveSet:
    """Remove the anchor, then keep removing the current bottleneck edge
    until no finite assignment is left; the removed edges form the set.

    On a tied step the next entry of ``tie_breaks`` is removed (it must be
    one of the tied edges); without one, the row-major first edge is.
    """
    w = np.array(_as_array(W), dtype=float)
    anchor = Edge(*anchor)
    first = _check_anchor(w, anchor)
    pending = [Edge(*e) for e in tie_breaks]
    solver = BottleneckSolver(w)
    solver.solution = first
    members: list[Edge] = []
    tie_free = True
    removed = anchor
    last = -INF
    while True:
        try:
            if warm:
                sol = solver.remove(removed)
            else:
                w[removed] = INF
                sol = solve_bap(w)
        except NoFeasibleAssignment:
            break
        edge = sol.bottleneck_edge
        if not sol.edge_unique:
            tie_free = False
            if pending:
                edge = pending.pop(0)
                if edge not in sol.candidates:
                    raise ValueError(
                        f"tie-break {tuple(edge)} is not among {[tuple(c) for c in sol.candidates]}")
        if sol.bottleneck_value < last:
            raise InternalInvariantViolation(
                f"bottleneck value fell from {last} to {sol.bottleneck_value}")
        last = sol.bottleneck_value
        members.append(edge)
        removed = edge
    return ExclusiveSet(anchor, tuple(members), tie_free)


def _check_pair(w, anchor: Edge, S: ExclusiveSet, A: Assignment):
    if anchor not in A:
        raise PreconditionViolation(f"anchor {tuple(anchor)} not in assignment", anchor)
    w_star = float(w[anchor])
    for e in A.edges:
        if w[e] > w_star:
            raise PreconditionViolation(
                f"assigned edge {tuple(e)} is heavier than the anchor", e)
    for e in S.members:
        if w[e] < w_star:
            raise PreconditionViolation(
                f"exclusive-set edge {tuple(e)} is lighter than the anchor", e)
    return w_star


def anchor_bounds(W, anchor: Edge, S: ExclusiveSet, A: Assignment) -> tuple[float, float]:
    """Half-gaps from the anchor to the nearest exclusive-set edge (upper)
    and to the nearest other assigned edge (lower)."""
    w = _as_array(W)
    anchor = Edge(*anchor)
    w_star = _check_pair(w, anchor, S, A)
    up = min(((float(w[e]) - w_star) / 2 for e in S.members), default=INF)
    down = min(((w_star - float(w[e])) / 2 for e in A.edges if e != anchor), default=INF)
    return up, down


def build_edge_intervals(W, anchor: Edge, S: ExclusiveSet, A: Assignment) -> IntervalArray:
    w = _as_array(W)
    anchor = Edge(*anchor)
    up, down = anchor_bounds(w, anchor, S, A)
    w_star = float(w[anchor])
    lower = np.full(w.shape, INF)
    upper = np.full(w.shape, INF)
    # an edge in both the set and the assignment (possible only on weight
    # ties) gets both constraints
    for e in S.members:
        lower[e] = -((w_star + up) - float(w[e]))
    for e in A.edges:
        if e != anchor:
            upper[e] = (w_star - down) - float(w[e])
    lower[anchor] = down
    upper[anchor] = up
    return IntervalArray(lower, upper)


def edge_sensitivity(W, anchor: Optional[Edge] = None, warm: bool = True,
                     tie_breaks: Sequence[Edge] = ()) -> EdgeSensitivityReport:
    w = _as_array(W)
    if anchor is None:
        anchor = solve_bap(w).bottleneck_edge
    anchor = Edge(*anchor)
    S = build_exclusive_set(w, anchor, warm=warm, tie_breaks=tie_breaks)
    lex = lexicographic_assignment(w, forced=anchor)
    up, down = anchor_bounds(w, anchor, S, lex.assignment)
    intervals = build_edge_intervals(w, anchor, S, lex.assignment)
    certified = S.tie_free and lex.certified
    warnings = []
    if not certified:
        warnings.append("assumption-1-violated")
    if not lex.certified:
        warnings.append("lexicographic-assignment-uncertified")
    return EdgeSensitivityReport(
        anchor=anchor,
        intervals=intervals,
        exclusive_set=S,
        lex_assignment_used=lex.assignment,
        lambda_up_star=up,
        lambda_down_star=down,
        certified=certified,
        warnings=tuple(warnings),
    )
