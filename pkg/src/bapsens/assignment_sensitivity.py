"""Largest interval array that keeps a given assignment optimal.

For every assigned edge ``e`` a matrix ``B_e`` is built from the current
bound state; its bottleneck edge names the competitor that limits ``e``
most. The tightest such pair fixes one or two bounds per iteration, and
bounds are fixed in non-decreasing order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import (
    INF,
    Assignment,
    Edge,
    WeightMatrix,
    assignment_max_weight,
    check_assignment,
    validate_perturbation,
)
from .errors import (
    InternalInvariantViolation,
    NoFeasibleAssignment,
    NotOptimalAssignment,
)
from .intervals import IntervalArray, rho
from .solver import BapSolution, BottleneckSolver, _as_array, solve_bap


def bound_value(w_e: float, w_e_prime: float, up_e: float, low_e_prime: float) -> float:
    """Largest bound(s) satisfying ``w_e + up_e <= w_e' - low_e'``.

    ``inf`` on input means undetermined. Returns ``inf`` when both bounds are
    fixed and the constraint holds, ``-inf`` when it is violated.
    """
    if up_e == INF and low_e_prime == INF:
        return (w_e_prime - w_e) / 2
    if up_e == INF:
        return w_e_prime - low_e_prime - w_e
    if low_e_prime == INF:
        return w_e_prime - w_e - up_e
    if w_e + up_e <= w_e_prime - low_e_prime:
        return INF
    return -INF


def constructed_weights(w: np.ndarray, e: Edge, upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
    """``B_e`` for every edge at once; same arithmetic as ``bound_value``."""
    w_e = float(w[e])
    up_e = float(upper[e])
    with np.errstate(invalid="ignore"):
        low_open = lower == INF
        if up_e == INF:
            B = np.where(low_open, (w - w_e) / 2, (w - lower) - w_e)
        else:
            closed = np.where(w_e + up_e <= w - lower, INF, -INF)
            B = np.where(low_open, (w - w_e) - up_e, closed)
    B[w == INF] = INF
    # e itself is excluded so the bottleneck ranges over assignments avoiding e
    B[e] = INF
    return B


@dataclass
class BoundState:
    lower: np.ndarray
    upper: np.ndarray
    determined_log: list = field(default_factory=list)  # (iteration, edge, side, value)

    @classmethod
    def undetermined(cls, shape) -> "BoundState":
        return cls(np.full(shape, INF), np.full(shape, INF))

    def determine(self, iteration: int, edge: Edge, side: str, value: float) -> bool:
        arr = self.upper if side == "upper" else self.lower
        if arr[edge] != INF:
            return False
        if self.determined_log and value < self.determined_log[-1][3]:
            raise InternalInvariantViolation(
                f"bound {value} determined after larger bound {self.determined_log[-1][3]}")
        arr[edge] = value
        self.determined_log.append((iteration, edge, side, value))
        return True


@dataclass(frozen=True)
class AssignmentSensitivityReport:
    assignment: Assignment
    intervals: IntervalArray
    exclusive_sets: dict  # assigned edge -> tuple of edges
    iterations: int
    certified: bool
    determined_log: tuple = ()
    tightest_values: tuple[float, ...] = ()  # per-iteration minimum over the assignment
    warnings: tuple[str, ...] = ()


def _unchanged(old_B, new_B, old: Optional[BapSolution]) -> bool:
    """True when edits to ``B_e`` cannot change its bottleneck result."""
    diff = old_B != new_B
    if not diff.any():
        return True
    a, b = old_B[diff], new_B[diff]
    if old is None:
        # infeasible stays infeasible while the set of present edges is fixed
        return bool(((a == INF) == (b == INF)).all())
    t = old.bottleneck_value
    above = (a > t) & (b > t)
    rising_below = (a < t) & (b >= a) & (b < t)
    return bool((above | rising_below).all())


def _bottleneck(B) -> Optional[BapSolution]:
    try:
        return BottleneckSolver(B).solve()
    except NoFeasibleAssignment:
        return None


def _check_optimal(w: np.ndarray, A: Assignment) -> float:
    W = WeightMatrix(w)
    check_assignment(W, A)
    value = assignment_max_weight(W, A).value
    best = solve_bap(w).bottleneck_value
    if value != best:
        raise NotOptimalAssignment(
            f"assignment has max weight {value}, the optimum is {best}")
    return best


def assignment_sensitivity(W, A: Optional[Assignment] = None, incremental: bool = True,
                           strict_ties: bool = True) -> AssignmentSensitivityReport:
    """Interval array under which ``A`` (default: the solver's optimum) stays optimal.

    ``strict_ties`` flags any tied bottleneck in any constructed matrix. With
    it off, a tie counts against certification only when the tied choices
    would fix different bounds.
    ``incremental`` reuses a matrix's previous result when its edits provably
    cannot change it.
    """
    w = np.array(_as_array(W), dtype=float)
    n, m = w.shape
    if A is None:
        A = solve_bap(w).assignment
    _check_optimal(w, A)
    assigned = list(A.edges)
    state = BoundState.undetermined(w.shape)
    cache: dict = {}
    tightest: list[float] = []
    certified = True
    iteration = 0
    limit = 2 * n * m
    while True:
        results = []
        for e in assigned:
            B = constructed_weights(w, e, state.upper, state.lower)
            if incremental and e in cache and _unchanged(cache[e][0], B, cache[e][1]):
                sol = cache[e][1]
            else:
                sol = _bottleneck(B)
            cache[e] = (B, sol)
            results.append((INF if sol is None else sol.bottleneck_value, e, sol))
        value = min(r[0] for r in results)
        if value == INF:
            break
        iteration += 1
        if iteration > limit:
            raise InternalInvariantViolation(f"no termination after {limit} iterations")
        if tightest and value < tightest[-1]:
            raise InternalInvariantViolation(
                f"tightest bound fell from {tightest[-1]} to {value}")
        tightest.append(value)
        best = [r for r in results if r[0] == value]
        if strict_ties:
            tied = len(best) > 1 or any(
                sol is not None and v < INF and not sol.edge_unique for v, _, sol in results)
        else:
            # a tie matters only if the tied choices would set different bounds
            updates = {
                (e if state.upper[e] == INF else None, b if state.lower[b] == INF else None)
                for _, e, sol in best for b in sol.candidates
            }
            tied = len(updates) > 1
        certified = certified and not tied
        _, e_hat, sol = best[0]
        b_hat = sol.bottleneck_edge
        changed = state.determine(iteration, e_hat, "upper", value)
        changed = state.determine(iteration, b_hat, "lower", value) or changed
        if not changed:
            raise InternalInvariantViolation(
                f"iteration {iteration} determined no bound (value {value})")
    exclusive = {}
    for e in assigned:
        B = constructed_weights(w, e, state.upper, state.lower)
        B[w == INF] = -INF  # missing edges are not part of any set
        B[e] = -INF
        exclusive[e] = tuple(Edge(int(i), int(j)) for i, j in np.argwhere(B == INF))
    return AssignmentSensitivityReport(
        assignment=A,
        intervals=IntervalArray(state.lower, state.upper),
        exclusive_sets=exclusive,
        iterations=iteration,
        certified=certified,
        determined_log=tuple(state.determined_log),
        tightest_values=tuple(tightest),
        warnings=() if certified else ("assumption-2-violated",),
    )


def sensitivity_radius(W, A: Optional[Assignment] = None) -> float:
    """Smallest bound of the assignment's interval array, which is also the
    largest uniform perturbation magnitude that keeps ``A`` optimal."""
    return rho(assignment_sensitivity(W, A).intervals, 1)


def is_allowable(W, A: Assignment, P) -> bool:
    w = _as_array(W)
    Wp = w + validate_perturbation(P, w.shape)
    try:
        best = solve_bap(Wp).bottleneck_value
    except NoFeasibleAssignment:
        return False
    return max(float(Wp[e]) for e in A.edges) == best


def is_edge_allowable(W, anchor: Edge, P) -> bool:
    w = _as_array(W)
    Wp = w + validate_perturbation(P, w.shape)
    solver = BottleneckSolver(Wp)
    try:
        t = solver.solve().bottleneck_value
    except NoFeasibleAssignment:
        return False
    return bool(Wp[tuple(anchor)] == t) and solver.feasible(t, Edge(*anchor))
